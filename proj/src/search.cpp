#include "relalg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "relalg/catalog.hpp"
#include "relalg/compiled.hpp"

namespace relalg {

namespace {

using Clock = std::chrono::steady_clock;

/// A cell whose value is the join (bitwise or) of other cells.  Only used
/// over a fixed Boolean skeleton where + is bitwise or.
struct DerivedCell {
    std::size_t cell;
    std::vector<std::size_t> inputs;
};

struct Instance {
    std::uint32_t sentence;
    std::uint32_t values;  // offset into Problem::values
};

/// Everything shared read-only between workers.
struct Problem {
    CellLayout layout{1};
    std::vector<CompiledSentence> hold;
    std::vector<CompiledSentence> fail;
    std::vector<Instance> instances;
    std::vector<Element> values;
    std::vector<std::size_t> decisions;
    std::vector<std::vector<int>> domains;  // per decision
    std::vector<std::vector<int>> restricted;  // per cell, sorted; empty = unrestricted
    std::vector<DerivedCell> derived;
    std::vector<std::vector<std::uint32_t>> dependents;  // cell -> derived indices
    bool propagate = true;

    // Root state after fixed cells and derivations.
    std::vector<int> root_cells;
    std::vector<std::vector<std::uint32_t>> root_watch;
    std::vector<int> root_remaining;
    bool root_conflict = false;

    bool allows(std::size_t cell, int value) const {
        const auto& d = restricted[cell];
        return d.empty() || std::binary_search(d.begin(), d.end(), value);
    }
};

struct SharedControl {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stopped{false};
    std::optional<std::uint64_t> node_limit;
    std::optional<Clock::time_point> deadline;
};

class Engine {
public:
    Engine(const Problem& p, SharedControl& control)
        : p_(p),
          control_(control),
          cells_(p.root_cells),
          watch_(p.root_watch),
          remaining_(p.root_remaining) {}

    template <typename Leaf>
    void solve(std::size_t level, Leaf& leaf) {
        if (control_.stopped.load(std::memory_order_relaxed)) return;
        if (level == p_.decisions.size()) {
            leaf(cells_);
            return;
        }
        const std::size_t cell = p_.decisions[level];
        if (cells_[cell] != kUndecided) {
            solve(level + 1, leaf);
            return;
        }
        for (int v : p_.domains[level]) {
            if (!count_node()) return;
            const Mark m = mark();
            if (assign(cell, v)) solve(level + 1, leaf);
            undo(m);
        }
    }

    /// Assigns the first decisions to `prefix`; false on conflict.
    bool replay(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const int current = cells_[p_.decisions[i]];
            if (current != kUndecided) {
                if (current != prefix[i]) return false;
                continue;
            }
            if (!assign(p_.decisions[i], prefix[i])) return false;
        }
        return true;
    }

    /// Collects every consistent assignment of the first `depth` decisions.
    void prefixes(std::size_t depth, std::vector<int>& current, std::vector<std::vector<int>>& out) {
        if (current.size() == depth || current.size() == p_.decisions.size()) {
            out.push_back(current);
            return;
        }
        const std::size_t level = current.size();
        if (const int v = cells_[p_.decisions[level]]; v != kUndecided) {
            current.push_back(v);
            prefixes(depth, current, out);
            current.pop_back();
            return;
        }
        for (int v : p_.domains[level]) {
            const Mark m = mark();
            current.push_back(v);
            if (assign(p_.decisions[level], v)) prefixes(depth, current, out);
            current.pop_back();
            undo(m);
        }
    }

private:
    struct Mark {
        std::size_t assigned, pushes, counters;
    };

    Mark mark() const { return {assigned_.size(), pushes_.size(), counters_.size()}; }

    void undo(const Mark& m) {
        while (pushes_.size() > m.pushes) {
            watch_[pushes_.back()].pop_back();
            pushes_.pop_back();
        }
        while (counters_.size() > m.counters) {
            ++remaining_[counters_.back()];
            counters_.pop_back();
        }
        while (assigned_.size() > m.assigned) {
            cells_[assigned_.back()] = kUndecided;
            assigned_.pop_back();
        }
    }

    bool count_node() {
        const std::uint64_t n = control_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (control_.node_limit && n > *control_.node_limit) {
            control_.stopped = true;
            return false;
        }
        if (control_.deadline && (n & 1023) == 0 && Clock::now() > *control_.deadline) {
            control_.stopped = true;
            return false;
        }
        return true;
    }

    bool assign(std::size_t cell, int value) {
        cells_[cell] = value;
        assigned_.push_back(cell);
        queue_.clear();
        queue_.push_back(cell);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const std::size_t c = queue_[qi];
            for (std::uint32_t d : p_.dependents[c]) {
                counters_.push_back(d);
                if (--remaining_[d] == 0) {
                    const DerivedCell& dc = p_.derived[d];
                    int v = 0;
                    for (std::size_t in : dc.inputs) v |= cells_[in];
                    if (cells_[dc.cell] != kUndecided) {
                        if (cells_[dc.cell] != v) return false;
                        continue;
                    }
                    cells_[dc.cell] = v;
                    assigned_.push_back(dc.cell);
                    queue_.push_back(dc.cell);
                }
            }
            if (!p_.propagate) continue;
            for (std::uint32_t id : watch_[c]) {
                const Instance& inst = p_.instances[id];
                const std::span<const Element> vals(p_.values.data() + inst.values,
                                                    p_.hold[inst.sentence].variables().size());
                const Partial r = p_.hold[inst.sentence].evaluate(p_.layout, cells_, vals);
                if (r.state == Partial::State::fails) return false;
                if (r.state == Partial::State::blocked) {
                    watch_[r.blocked_cell].push_back(id);
                    pushes_.push_back(r.blocked_cell);
                } else if (r.state == Partial::State::forced) {
                    if (!p_.allows(r.blocked_cell, r.forced_value)) return false;
                    cells_[r.blocked_cell] = r.forced_value;
                    assigned_.push_back(r.blocked_cell);
                    queue_.push_back(r.blocked_cell);
                }
            }
        }
        return true;
    }

    const Problem& p_;
    SharedControl& control_;
    std::vector<int> cells_;
    std::vector<std::vector<std::uint32_t>> watch_;
    std::vector<int> remaining_;
    std::vector<std::size_t> assigned_;
    std::vector<std::size_t> pushes_;
    std::vector<std::uint32_t> counters_;
    std::vector<std::size_t> queue_;
};

bool holds_everywhere(const CompiledSentence& s, const CellTables& tables) {
    const std::size_t n = tables.layout().size();
    const std::size_t k = s.variables().size();
    std::vector<Element> values(k, 0);
    while (true) {
        if (!s.holds(tables, values)) return false;
        std::size_t i = k;
        while (i > 0 && ++values[i - 1] == n) values[--i] = 0;
        if (i == 0) return true;
    }
}

bool fails_somewhere(const CompiledSentence& s, const CellTables& tables) { return !holds_everywhere(s, tables); }

/// Ground instances over all assignments, and the root state.
void prepare(Problem& p, const SearchSpec& spec) {
    const std::size_t n = spec.size;
    for (const auto& s : spec.must_hold) p.hold.emplace_back(s);
    for (const auto& s : spec.must_fail) p.fail.emplace_back(s);
    p.propagate = spec.propagate;

    if (p.propagate) {
        for (std::uint32_t si = 0; si < p.hold.size(); ++si) {
            const std::size_t k = p.hold[si].variables().size();
            std::vector<Element> values(k, 0);
            while (true) {
                p.instances.push_back({si, static_cast<std::uint32_t>(p.values.size())});
                p.values.insert(p.values.end(), values.begin(), values.end());
                std::size_t i = k;
                while (i > 0 && ++values[i - 1] == n) values[--i] = 0;
                if (i == 0) break;
            }
        }
    }

    const std::size_t cells = p.layout.cell_count();
    p.restricted.assign(cells, {});
    for (std::size_t i = 0; i < p.decisions.size(); ++i)
        if (p.domains[i].size() < n) {
            p.restricted[p.decisions[i]] = p.domains[i];
            std::sort(p.restricted[p.decisions[i]].begin(), p.restricted[p.decisions[i]].end());
        }
    // Derived cells with fully fixed inputs, to a fixpoint.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint32_t d = 0; d < p.derived.size(); ++d) {
            const auto& dc = p.derived[d];
            if (p.root_cells[dc.cell] != kUndecided) continue;
            if (!std::all_of(dc.inputs.begin(), dc.inputs.end(),
                             [&](std::size_t in) { return p.root_cells[in] != kUndecided; }))
                continue;
            int v = 0;
            for (std::size_t in : dc.inputs) v |= p.root_cells[in];
            p.root_cells[dc.cell] = v;
            changed = true;
        }
    }

    p.dependents.assign(cells, {});
    p.root_remaining.assign(p.derived.size(), 0);
    for (std::uint32_t d = 0; d < p.derived.size(); ++d)
        for (std::size_t in : p.derived[d].inputs) {
            if (p.root_cells[in] == kUndecided) {
                p.dependents[in].push_back(d);
                ++p.root_remaining[d];
            }
        }

    p.root_watch.assign(cells, {});
    for (std::uint32_t id = 0; id < p.instances.size(); ++id) {
        const Instance& inst = p.instances[id];
        const std::span<const Element> vals(p.values.data() + inst.values, p.hold[inst.sentence].variables().size());
        const Partial r = p.hold[inst.sentence].evaluate(p.layout, p.root_cells, vals);
        if (r.state == Partial::State::fails) p.root_conflict = true;
        if (r.state == Partial::State::blocked || r.state == Partial::State::forced)
            p.root_watch[r.blocked_cell].push_back(id);
    }
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Leaf collection for one worker.
struct Collector {
    const Problem* p;
    bool up_to_iso;
    std::map<std::string, FiniteAlgebra> found;  // key: encoding (canonical when up_to_iso)

    void operator()(const std::vector<int>& cells) {
        const FiniteAlgebra a = algebra_from_cells(p->layout, cells);
        const CellTables tables(a);
        if (!p->propagate)
            for (const auto& s : p->hold)
                if (!holds_everywhere(s, tables)) return;
        for (const auto& s : p->fail)
            if (!fails_somewhere(s, tables)) return;
        if (up_to_iso) {
            FiniteAlgebra rep = canonical_representative(a);
            std::string key = encode_tables(rep);
            found.try_emplace(std::move(key), std::move(rep));
        } else {
            found.try_emplace(encode_tables(a), a);
        }
    }
};

SearchResult run(const Problem& p, const SearchSpec& spec) {
    SearchResult result;
    if (p.root_conflict) return result;

    SharedControl control;
    control.node_limit = spec.node_limit;
    if (spec.time_limit) control.deadline = Clock::now() + *spec.time_limit;

    std::map<std::string, FiniteAlgebra> found;
    const unsigned threads = std::max(1u, spec.threads);
    if (threads == 1) {
        Engine engine(p, control);
        Collector collect{&p, spec.up_to_iso, {}};
        engine.solve(0, collect);
        found = std::move(collect.found);
    } else {
        std::vector<std::vector<int>> work;
        {
            Engine engine(p, control);
            std::vector<int> current;
            std::size_t depth = 0;
            while (depth < p.decisions.size() && work.size() < 8 * threads) {
                ++depth;
                work.clear();
                engine.prefixes(depth, current, work);
            }
        }
        std::atomic<std::size_t> next{0};
        std::mutex merge;
        auto worker = [&] {
            Collector collect{&p, spec.up_to_iso, {}};
            for (std::size_t i = next++; i < work.size(); i = next++) {
                Engine engine(p, control);
                if (engine.replay(work[i])) engine.solve(work[i].size(), collect);
            }
            std::lock_guard lock(merge);
            found.merge(collect.found);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    result.nodes_explored = control.nodes.load();
    result.exhaustive = !control.stopped.load();
    for (auto& [key, model] : found) result.models.push_back(std::move(model));
    if (spec.up_to_iso) {
        result.iso_class_count = result.models.size();
        for (const auto& m : result.models) result.labeled_count += factorial(m.size()) / automorphism_count(m);
    } else {
        result.labeled_count = result.models.size();
        std::vector<std::string> classes;
        for (const auto& m : result.models) classes.push_back(canonical_form(m));
        std::sort(classes.begin(), classes.end());
        result.iso_class_count =
            static_cast<std::uint64_t>(std::unique(classes.begin(), classes.end()) - classes.begin());
    }
    return result;
}

void check_size(const SearchSpec& spec) {
    if (spec.size < 1 || spec.size > kMaxSearchSize)
        throw SearchError("search size must be between 1 and " + std::to_string(kMaxSearchSize));
}

std::vector<int> full_domain(std::size_t n) {
    std::vector<int> d(n);
    std::iota(d.begin(), d.end(), 0);
    return d;
}

bool mentions(const std::vector<Sentence>& sentences, AxiomId id) {
    return std::find(sentences.begin(), sentences.end(), axiom_sentence(id)) != sentences.end();
}

/// Every relabeling of each representative, deduplicated and sorted.
std::vector<FiniteAlgebra> expand_labelings(const std::vector<FiniteAlgebra>& reps) {
    std::map<std::string, FiniteAlgebra> out;
    for (const auto& rep : reps) {
        Permutation perm(rep.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            FiniteAlgebra b = relabel(rep, perm);
            out.try_emplace(encode_tables(b), std::move(b));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<FiniteAlgebra> models;
    for (auto& [key, m] : out) models.push_back(std::move(m));
    return models;
}

}  // namespace

SearchSpec SearchSpec::from_axioms(std::size_t size, const std::vector<AxiomId>& hold,
                                   const std::vector<AxiomId>& fail, bool up_to_iso) {
    SearchSpec spec;
    spec.size = size;
    for (AxiomId id : hold) spec.must_hold.push_back(axiom_sentence(id));
    for (AxiomId id : fail) spec.must_fail.push_back(axiom_sentence(id));
    spec.up_to_iso = up_to_iso;
    return spec;
}

SearchResult search(const SearchSpec& spec) {
    check_size(spec);
    const std::size_t n = spec.size;
    Problem p;
    p.layout = CellLayout(n);
    p.root_cells.assign(p.layout.cell_count(), kUndecided);

    p.decisions.push_back(p.layout.ident());
    p.domains.push_back(spec.up_to_iso ? std::vector<int>{0} : full_domain(n));
    for (Element x = 0; x < n; ++x) p.decisions.push_back(p.layout.neg(x));
    for (Element x = 0; x < n; ++x) p.decisions.push_back(p.layout.conv(x));
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) p.decisions.push_back(p.layout.add(x, y));
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) p.decisions.push_back(p.layout.comp(x, y));
    p.domains.resize(p.decisions.size(), full_domain(n));

    prepare(p, spec);
    return run(p, spec);
}

SearchResult boolean_guided_search(const SearchSpec& spec) {
    using enum AxiomId;
    for (AxiomId id : {R1, R2, R3})
        if (!mentions(spec.must_hold, id))
            throw SearchError("Boolean-guided search needs R1, R2 and R3 among the sentences that must hold");
    check_size(spec);
    const std::size_t n = spec.size;
    if (!std::has_single_bit(n)) return {};
    const unsigned k = static_cast<unsigned>(std::countr_zero(n));
    const Element top = static_cast<Element>(n - 1);

    Problem p;
    p.layout = CellLayout(n);
    const CellLayout& L = p.layout;
    p.root_cells.assign(L.cell_count(), kUndecided);
    for (Element x = 0; x < n; ++x) {
        p.root_cells[L.neg(x)] = static_cast<int>(top ^ x);
        for (Element y = 0; y < n; ++y) p.root_cells[L.add(x, y)] = static_cast<int>(x | y);
    }

    // Up to isomorphism 1' can be taken to be the join of the first p atoms.
    p.decisions.push_back(L.ident());
    std::vector<int> idents;
    for (unsigned i = 0; i <= k; ++i) idents.push_back(static_cast<int>((1u << i) - 1));
    p.domains.push_back(idents);

    const bool rows = mentions(spec.must_hold, R8);
    const bool columns = mentions(spec.must_hold, R8p);
    const bool conv_additive = mentions(spec.must_hold, R9);
    auto atoms_of = [](Element x) {
        std::vector<Element> out;
        for (Element b = 1; b && b <= x; b <<= 1)
            if (x & b) out.push_back(b);
        return out;
    };

    for (Element x = 0; x < n; ++x) {
        if (conv_additive && std::popcount(x) >= 2) {
            DerivedCell dc{L.conv(x), {}};
            for (Element a : atoms_of(x)) dc.inputs.push_back(L.conv(a));
            p.derived.push_back(dc);
        } else {
            p.decisions.push_back(L.conv(x));
        }
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (rows && std::popcount(x) >= 2) {
                DerivedCell dc{L.comp(x, y), {}};
                for (Element a : atoms_of(x)) dc.inputs.push_back(L.comp(a, y));
                p.derived.push_back(dc);
            } else if (columns && std::popcount(y) >= 2) {
                DerivedCell dc{L.comp(x, y), {}};
                for (Element a : atoms_of(y)) dc.inputs.push_back(L.comp(x, a));
                p.derived.push_back(dc);
            } else {
                p.decisions.push_back(L.comp(x, y));
            }
        }
    p.domains.resize(p.decisions.size(), full_domain(n));

    SearchSpec iso = spec;
    iso.up_to_iso = true;
    prepare(p, iso);
    SearchResult result = run(p, iso);
    if (!spec.up_to_iso) {
        result.models = expand_labelings(result.models);
        result.labeled_count = result.models.size();
    }
    return result;
}

bool MinimalityResult::passed() const {
    if (!certificate_ok) return false;
    return std::all_of(smaller.begin(), smaller.end(),
                       [](const SizeCheck& c) { return !c.searched || (c.models == 0 && c.exhaustive); });
}

std::string independence_model_id(AxiomId target, const AxiomSystem& sys) {
    using enum AxiomId;
    auto id = [](ModelKind kind) { return ModelId::defaults(kind).to_string(); };
    const bool is_r = sys.name == "r";
    const bool is_s = sys.name == "s";
    switch (target) {
        case R1: return id(ModelKind::a1);
        case R2: return id(ModelKind::a2);
        case R3: return id(ModelKind::a3);
        case R4: return id(ModelKind::a4);
        case R5: return id(ModelKind::a5);
        case R6: return id(ModelKind::a6);
        case R7: return id(ModelKind::a7);
        case R8: return is_s ? id(ModelKind::b9) : id(ModelKind::a8);
        case R9: return is_r ? id(ModelKind::b9) : id(ModelKind::a9);
        case R10: return id(ModelKind::a10);
        case R8p: return is_s ? id(ModelKind::a7) : id(ModelKind::a8);
        default: throw std::invalid_argument("no catalog independence model for " + std::string(axiom_name(target)));
    }
}

MinimalityResult verify_minimality(AxiomId target, const AxiomSystem& sys, std::size_t claimed_size,
                                   const SearchSpec& limits) {
    using enum AxiomId;
    if (claimed_size > kMaxSearchSize) throw SearchError("claimed size exceeds the search bound");
    if (!sys.contains(target)) throw std::invalid_argument(std::string(axiom_name(target)) + " is not in " + sys.name);
    MinimalityResult out{target, sys.name, claimed_size, {}, {}, false};
    const auto rest = sys.without(target);
    const bool boolean = std::find(rest.begin(), rest.end(), R1) != rest.end() &&
                         std::find(rest.begin(), rest.end(), R2) != rest.end() &&
                         std::find(rest.begin(), rest.end(), R3) != rest.end();
    for (std::size_t size = 1; size < claimed_size; ++size) {
        SizeCheck check;
        check.size = size;
        if (boolean && !std::has_single_bit(size)) {
            check.method = "excluded: not a power of two";
            out.smaller.push_back(check);
            continue;
        }
        SearchSpec spec = SearchSpec::from_axioms(size, rest, {target}, true);
        spec.node_limit = limits.node_limit;
        spec.time_limit = limits.time_limit;
        spec.threads = limits.threads;
        const SearchResult r = boolean ? boolean_guided_search(spec) : search(spec);
        check.searched = true;
        check.method = boolean ? "boolean" : "generic";
        check.models = r.iso_class_count;
        check.exhaustive = r.exhaustive;
        check.nodes = r.nodes_explored;
        out.smaller.push_back(check);
    }
    out.certificate = independence_model_id(target, sys);
    const FiniteAlgebra model = build(out.certificate);
    out.certificate_ok = model.size() == claimed_size && is_independence_model(model, sys, target);
    return out;
}

}  // namespace relalg
