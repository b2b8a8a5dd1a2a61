#include "relalg/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace relalg {

namespace {

void check_entries(std::span<const Element> table, std::size_t expected, std::size_t n,
                   std::string_view what) {
    if (table.size() != expected) {
        throw AlgebraError(std::string(what) + " table has " + std::to_string(table.size()) +
                           " entries, expected " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= n) {
            throw AlgebraError(std::string(what) + " entry " + std::to_string(i) + " is " +
                               std::to_string(table[i]) + ", outside [0, " + std::to_string(n) +
                               ")");
        }
    }
}

std::vector<Element> flatten(const std::vector<std::vector<Element>>& rows, std::size_t n,
                             std::string_view what) {
    if (rows.size() != n) {
        throw AlgebraError(std::string(what) + " table has " + std::to_string(rows.size()) +
                           " rows, expected " + std::to_string(n));
    }
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw AlgebraError(std::string(what) + " table row has " + std::to_string(row.size()) +
                               " entries, expected " + std::to_string(n));
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(AlgebraTables t)
    : size_(t.size),
      add_(std::move(t.add)),
      neg_(std::move(t.neg)),
      comp_(std::move(t.comp)),
      conv_(std::move(t.conv)),
      ident_(t.ident),
      names_(std::move(t.names)) {
    const std::size_t n = size_;
    if (n == 0) throw AlgebraError("an algebra needs at least one element");
    check_entries(add_, n * n, n, "add");
    check_entries(neg_, n, n, "neg");
    check_entries(comp_, n * n, n, "comp");
    check_entries(conv_, n, n, "conv");
    if (ident_ >= n) throw AlgebraError("identity constant " + std::to_string(ident_) + " is out of range");
    if (!names_.empty()) {
        if (names_.size() != n) throw AlgebraError("names must list exactly one name per element");
        std::set<std::string_view> seen;
        for (const auto& name : names_) {
            if (name.empty()) throw AlgebraError("element names must be non-empty");
            if (!seen.insert(name).second) throw AlgebraError("duplicate element name '" + name + "'");
        }
    }
}

std::string FiniteAlgebra::name(Element x) const {
    if (x < names_.size()) return names_[x];
    return std::to_string(x);
}

std::optional<Element> FiniteAlgebra::find_name(std::string_view name) const {
    for (Element x = 0; x < names_.size(); ++x) {
        if (names_[x] == name) return x;
    }
    return std::nullopt;
}

AlgebraTables FiniteAlgebra::tables() const {
    return AlgebraTables{size_, add_, neg_, comp_, conv_, ident_, names_};
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.size_ == b.size_ && a.ident_ == b.ident_ && a.add_ == b.add_ && a.neg_ == b.neg_ &&
           a.comp_ == b.comp_ && a.conv_ == b.conv_;
}

FiniteAlgebra make_algebra(std::size_t size, const std::vector<std::vector<Element>>& add,
                           const std::vector<Element>& neg,
                           const std::vector<std::vector<Element>>& comp,
                           const std::vector<Element>& conv, Element ident,
                           std::vector<std::string> names) {
    AlgebraTables t;
    t.size = size;
    t.add = flatten(add, size, "add");
    t.neg = neg;
    t.comp = flatten(comp, size, "comp");
    t.conv = conv;
    t.ident = ident;
    t.names = std::move(names);
    return FiniteAlgebra(std::move(t));
}

// ---------------------------------------------------------------------------
// Groups

void GroupSpec::validate() const {
    const std::size_t n = size;
    if (n == 0) throw AlgebraError("a group needs at least one element");
    if (mul.size() != n * n || inv.size() != n) throw AlgebraError("group tables have wrong dimensions");
    if (unit >= n) throw AlgebraError("group unit out of range");
    for (Element v : mul) {
        if (v >= n) throw AlgebraError("group multiplication entry out of range");
    }
    for (Element v : inv) {
        if (v >= n) throw AlgebraError("group inverse entry out of range");
    }
    for (Element x = 0; x < n; ++x) {
        if (times(unit, x) != x || times(x, unit) != x) throw AlgebraError("group unit is not an identity");
        if (times(x, inv[x]) != unit || times(inv[x], x) != unit) {
            throw AlgebraError("group inverse of " + std::to_string(x) + " is wrong");
        }
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                if (times(x, times(y, z)) != times(times(x, y), z)) {
                    throw AlgebraError("group multiplication is not associative");
                }
            }
        }
    }
}

GroupSpec GroupSpec::cyclic(std::size_t n) {
    if (n == 0) throw AlgebraError("cyclic group order must be positive");
    GroupSpec g;
    g.size = n;
    g.mul.resize(n * n);
    g.inv.resize(n);
    for (Element x = 0; x < n; ++x) {
        g.inv[x] = static_cast<Element>((n - x) % n);
        for (Element y = 0; y < n; ++y) g.mul[x * n + y] = static_cast<Element>((x + y) % n);
    }
    return g;
}

GroupSpec GroupSpec::boolean(unsigned k) {
    if (k > 8) throw AlgebraError("Boolean group rank too large");
    GroupSpec g;
    g.size = std::size_t{1} << k;
    g.mul.resize(g.size * g.size);
    g.inv.resize(g.size);
    for (Element x = 0; x < g.size; ++x) {
        g.inv[x] = x;
        for (Element y = 0; y < g.size; ++y) g.mul[x * g.size + y] = x ^ y;
    }
    return g;
}

void PartialGroupoidSpec::validate() const {
    const std::size_t n = size;
    if (n == 0) throw AlgebraError("a partial groupoid needs at least one element");
    if (mul.size() != n * n || inv.size() != n) throw AlgebraError("partial groupoid tables have wrong dimensions");
    if (unit >= n) throw AlgebraError("partial groupoid unit out of range");
    for (const auto& v : mul) {
        if (v && *v >= n) throw AlgebraError("partial groupoid product out of range");
    }
    for (Element v : inv) {
        if (v >= n) throw AlgebraError("partial groupoid inverse out of range");
    }
    for (Element x = 0; x < n; ++x) {
        auto left = times(unit, x);
        auto right = times(x, unit);
        if ((left && *left != x) || (right && *right != x)) {
            throw AlgebraError("partial groupoid unit is not an identity where defined");
        }
    }
}

// ---------------------------------------------------------------------------
// Derived Boolean notions

Element derived_element(const FiniteAlgebra& a, Derived which) {
    const Element one = a.add(a.ident(), a.neg(a.ident()));
    switch (which) {
        case Derived::one: return one;
        case Derived::zero: return a.neg(one);
        case Derived::diversity: return a.neg(a.ident());
    }
    return one;
}

Element meet(const FiniteAlgebra& a, Element x, Element y) {
    return a.neg(a.add(a.neg(x), a.neg(y)));
}

bool leq(const FiniteAlgebra& a, Element x, Element y) { return a.add(x, y) == y; }

std::vector<Element> atoms(const FiniteAlgebra& a) {
    const Element zero = derived_element(a, Derived::zero);
    std::vector<Element> result;
    for (Element x = 0; x < a.size(); ++x) {
        if (x == zero) continue;
        bool minimal = true;
        for (Element y = 0; y < a.size() && minimal; ++y) {
            if (y != zero && y != x && leq(a, y, x)) minimal = false;
        }
        if (minimal) result.push_back(x);
    }
    return result;
}

std::optional<Element> sup(const FiniteAlgebra& a, std::span<const Element> subset) {
    std::vector<Element> upper;
    for (Element u = 0; u < a.size(); ++u) {
        if (std::all_of(subset.begin(), subset.end(), [&](Element x) { return leq(a, x, u); })) {
            upper.push_back(u);
        }
    }
    for (Element u : upper) {
        if (std::all_of(upper.begin(), upper.end(), [&](Element v) { return leq(a, u, v); })) return u;
    }
    return std::nullopt;
}

namespace {

constexpr int kNoSup = -1;

// sup of every subset, indexed by bitmask over element indices.
std::vector<int> all_sups(const FiniteAlgebra& a) {
    const std::size_t n = a.size();
    std::vector<std::uint32_t> up(n);  // up[x] = mask of u with x <= u
    for (Element x = 0; x < n; ++x) {
        for (Element u = 0; u < n; ++u) {
            if (leq(a, x, u)) up[x] |= 1u << u;
        }
    }
    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> result(std::size_t{1} << n, kNoSup);
    std::vector<std::uint32_t> bounds(std::size_t{1} << n);
    bounds[0] = full;
    for (std::uint32_t mask = 1; mask < bounds.size(); ++mask) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
        bounds[mask] = bounds[mask & (mask - 1)] & up[low];
    }
    for (std::uint32_t mask = 0; mask < bounds.size(); ++mask) {
        const std::uint32_t ub = bounds[mask];
        for (Element u = 0; u < n; ++u) {
            if (((ub >> u) & 1u) && (up[u] & ub) == ub) {
                result[mask] = static_cast<int>(u);
                break;
            }
        }
    }
    return result;
}

}  // namespace

bool is_completely_distributive(const FiniteAlgebra& a, DistributiveOp which) {
    const std::size_t n = a.size();
    if (n > 12) throw AlgebraError("complete distributivity check is limited to 12 elements");
    const std::vector<int> sups = all_sups(a);
    const std::size_t subsets = std::size_t{1} << n;

    if (which == DistributiveOp::conv) {
        for (std::uint32_t x = 0; x < subsets; ++x) {
            if (sups[x] == kNoSup) continue;
            std::uint32_t image = 0;
            for (Element e = 0; e < n; ++e) {
                if ((x >> e) & 1u) image |= 1u << a.conv(e);
            }
            if (sups[image] == kNoSup || static_cast<Element>(sups[image]) != a.conv(sups[x])) return false;
        }
        return true;
    }

    std::vector<std::uint32_t> row_products(n);
    std::vector<std::uint32_t> products(subsets);
    for (std::uint32_t y = 0; y < subsets; ++y) {
        if (sups[y] == kNoSup) continue;
        for (Element e = 0; e < n; ++e) {
            std::uint32_t m = 0;
            for (Element f = 0; f < n; ++f) {
                if ((y >> f) & 1u) m |= 1u << a.comp(e, f);
            }
            row_products[e] = m;
        }
        products[0] = 0;
        for (std::uint32_t x = 1; x < subsets; ++x) {
            products[x] = products[x & (x - 1)] | row_products[__builtin_ctz(x)];
        }
        for (std::uint32_t x = 0; x < subsets; ++x) {
            if (sups[x] == kNoSup) continue;
            const int s = sups[products[x]];
            if (s == kNoSup || static_cast<Element>(s) != a.comp(sups[x], sups[y])) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Relabeling and isomorphism

FiniteAlgebra relabel(const FiniteAlgebra& a, const Permutation& perm) {
    const std::size_t n = a.size();
    if (perm.size() != n) throw AlgebraError("permutation size does not match algebra size");
    std::vector<bool> hit(n, false);
    for (Element p : perm) {
        if (p >= n || hit[p]) throw AlgebraError("not a permutation");
        hit[p] = true;
    }
    AlgebraTables t;
    t.size = n;
    t.add.resize(n * n);
    t.comp.resize(n * n);
    t.neg.resize(n);
    t.conv.resize(n);
    for (Element x = 0; x < n; ++x) {
        t.neg[perm[x]] = perm[a.neg(x)];
        t.conv[perm[x]] = perm[a.conv(x)];
        for (Element y = 0; y < n; ++y) {
            t.add[perm[x] * n + perm[y]] = perm[a.add(x, y)];
            t.comp[perm[x] * n + perm[y]] = perm[a.comp(x, y)];
        }
    }
    t.ident = perm[a.ident()];
    if (a.has_names()) {
        t.names.resize(n);
        for (Element x = 0; x < n; ++x) t.names[perm[x]] = a.names()[x];
    }
    return FiniteAlgebra(std::move(t));
}

namespace {

// Backtracking over partial bijections, checking every table cell whose
// arguments are mapped.
class IsoSearch {
public:
    IsoSearch(const FiniteAlgebra& a, const FiniteAlgebra& b)
        : a_(a), b_(b), n_(a.size()), fwd_(n_, kUnmapped), bwd_(n_, kUnmapped) {}

    // Calls `found` on each complete isomorphism until it returns false.
    template <class Found>
    void run(Found&& found) {
        if (a_.size() != b_.size()) return;
        order_.clear();
        order_.push_back(a_.ident());
        for (Element x = 0; x < n_; ++x) {
            if (x != a_.ident()) order_.push_back(x);
        }
        stop_ = false;
        extend(0, found);
    }

private:
    static constexpr Element kUnmapped = ~Element{0};

    bool consistent_value(Element a_value, Element b_value) const {
        if (fwd_[a_value] != kUnmapped) return fwd_[a_value] == b_value;
        return bwd_[b_value] == kUnmapped;
    }

    bool consistent(Element x) const {
        const Element mx = fwd_[x];
        if (!consistent_value(a_.neg(x), b_.neg(mx))) return false;
        if (!consistent_value(a_.conv(x), b_.conv(mx))) return false;
        for (Element v = 0; v < n_; ++v) {
            const Element mv = fwd_[v];
            if (mv == kUnmapped) continue;
            if (!consistent_value(a_.add(x, v), b_.add(mx, mv))) return false;
            if (!consistent_value(a_.add(v, x), b_.add(mv, mx))) return false;
            if (!consistent_value(a_.comp(x, v), b_.comp(mx, mv))) return false;
            if (!consistent_value(a_.comp(v, x), b_.comp(mv, mx))) return false;
        }
        // Earlier-mapped cells whose results just became mapped.
        for (Element u = 0; u < n_; ++u) {
            const Element mu = fwd_[u];
            if (mu == kUnmapped) continue;
            if (a_.neg(u) == x && b_.neg(mu) != mx) return false;
            if (a_.conv(u) == x && b_.conv(mu) != mx) return false;
            for (Element v = 0; v < n_; ++v) {
                const Element mv = fwd_[v];
                if (mv == kUnmapped) continue;
                if (a_.add(u, v) == x && b_.add(mu, mv) != mx) return false;
                if (a_.comp(u, v) == x && b_.comp(mu, mv) != mx) return false;
            }
        }
        return true;
    }

    template <class Found>
    void extend(std::size_t depth, Found& found) {
        if (stop_) return;
        if (depth == n_) {
            if (!found(fwd_)) stop_ = true;
            return;
        }
        const Element x = order_[depth];
        for (Element y = 0; y < n_ && !stop_; ++y) {
            if (bwd_[y] != kUnmapped) continue;
            if (depth == 0 && y != b_.ident()) continue;
            fwd_[x] = y;
            bwd_[y] = x;
            if (consistent(x)) extend(depth + 1, found);
            fwd_[x] = kUnmapped;
            bwd_[y] = kUnmapped;
        }
    }

    const FiniteAlgebra& a_;
    const FiniteAlgebra& b_;
    std::size_t n_;
    Permutation fwd_;
    Permutation bwd_;
    std::vector<Element> order_;
    bool stop_ = false;
};

}  // namespace

std::optional<Permutation> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    std::optional<Permutation> result;
    IsoSearch search(a, b);
    search.run([&](const Permutation& p) {
        result = p;
        return false;
    });
    return result;
}

std::size_t automorphism_count(const FiniteAlgebra& a) {
    std::size_t count = 0;
    IsoSearch search(a, a);
    search.run([&](const Permutation&) {
        ++count;
        return true;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Encodings

std::string encode_tables(const FiniteAlgebra& a) {
    const std::size_t n = a.size();
    if (n > 255) throw AlgebraError("table encoding is limited to 255 elements");
    std::string out;
    out.reserve(2 + 2 * n + 2 * n * n);
    out.push_back(static_cast<char>(n));
    out.push_back(static_cast<char>(a.ident()));
    for (Element v : a.neg_table()) out.push_back(static_cast<char>(v));
    for (Element v : a.conv_table()) out.push_back(static_cast<char>(v));
    for (Element v : a.add_table()) out.push_back(static_cast<char>(v));
    for (Element v : a.comp_table()) out.push_back(static_cast<char>(v));
    return out;
}

namespace {

// Encodes relabel(a, perm) given perm and its inverse, aborting as soon as
// the encoding compares greater than `best`.  Returns true if the result is
// strictly smaller than best (and stores it there).
bool encode_if_smaller(const FiniteAlgebra& a, const Permutation& perm, const Permutation& inv,
                       std::string& scratch, std::string& best) {
    const std::size_t n = a.size();
    scratch.clear();
    bool decided_smaller = best.empty();
    auto push = [&](Element v) {
        const char c = static_cast<char>(v);
        if (!decided_smaller) {
            const std::size_t i = scratch.size();
            const auto lhs = static_cast<unsigned char>(c);
            const auto rhs = static_cast<unsigned char>(best[i]);
            if (lhs > rhs) return false;
            if (lhs < rhs) decided_smaller = true;
        }
        scratch.push_back(c);
        return true;
    };
    if (!push(static_cast<Element>(n))) return false;
    if (!push(perm[a.ident()])) return false;
    for (Element i = 0; i < n; ++i) {
        if (!push(perm[a.neg(inv[i])])) return false;
    }
    for (Element i = 0; i < n; ++i) {
        if (!push(perm[a.conv(inv[i])])) return false;
    }
    for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
            if (!push(perm[a.add(inv[i], inv[j])])) return false;
        }
    }
    for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
            if (!push(perm[a.comp(inv[i], inv[j])])) return false;
        }
    }
    if (!decided_smaller) return false;
    best.swap(scratch);
    return true;
}

Permutation canonical_permutation(const FiniteAlgebra& a, std::string* form) {
    const std::size_t n = a.size();
    if (n > kCanonicalSizeLimit) {
        throw AlgebraError("canonical form is limited to " + std::to_string(kCanonicalSizeLimit) +
                           " elements");
    }
    Permutation inv(n);
    std::iota(inv.begin(), inv.end(), Element{0});
    Permutation perm(n);
    Permutation best_perm;
    std::string best;
    std::string scratch;
    do {
        for (Element i = 0; i < n; ++i) perm[inv[i]] = i;
        if (encode_if_smaller(a, perm, inv, scratch, best)) best_perm = perm;
    } while (std::next_permutation(inv.begin(), inv.end()));
    if (form != nullptr) *form = std::move(best);
    return best_perm;
}

}  // namespace

std::string canonical_form(const FiniteAlgebra& a) {
    std::string form;
    canonical_permutation(a, &form);
    return form;
}

FiniteAlgebra canonical_representative(const FiniteAlgebra& a) {
    return relabel(a, canonical_permutation(a, nullptr));
}

std::string_view table_name(TableKind kind) {
    switch (kind) {
        case TableKind::add: return "add";
        case TableKind::neg: return "neg";
        case TableKind::comp: return "comp";
        case TableKind::conv: return "conv";
        case TableKind::ident: return "ident";
    }
    return "?";
}

std::vector<CellDiff> diff_tables(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.size() != b.size()) throw AlgebraError("cannot diff algebras of different sizes");
    const std::size_t n = a.size();
    std::vector<CellDiff> diffs;
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (a.add(x, y) != b.add(x, y)) diffs.push_back({TableKind::add, x, y});
        }
    }
    for (Element x = 0; x < n; ++x) {
        if (a.neg(x) != b.neg(x)) diffs.push_back({TableKind::neg, x, 0});
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (a.comp(x, y) != b.comp(x, y)) diffs.push_back({TableKind::comp, x, y});
        }
    }
    for (Element x = 0; x < n; ++x) {
        if (a.conv(x) != b.conv(x)) diffs.push_back({TableKind::conv, x, 0});
    }
    if (a.ident() != b.ident()) diffs.push_back({TableKind::ident, 0, 0});
    return diffs;
}

}  // namespace relalg
