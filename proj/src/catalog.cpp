#include "relalg/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>

#include "relalg/axioms.hpp"

namespace relalg {

namespace {

struct KindInfo {
    ModelKind kind;
    std::string_view name;
    std::string_view description;
};

constexpr std::array<KindInfo, 18> kKinds = {{
    {ModelKind::m3, "m3", "minimal set relation algebra on a 3-element set"},
    {ModelKind::z3c, "z3c", "complex algebra of the group of integers modulo 3"},
    {ModelKind::d, "d", "Lyndon's 8-element relation algebra with atoms 1', a, b"},
    {ModelKind::bra, "bra", "Boolean relation algebra with 2^k elements"},
    {ModelKind::zc, "zc", "complex algebra of the cyclic group of order n"},
    {ModelKind::a1, "a1", "R1 fails: left projection as addition over a Boolean group"},
    {ModelKind::a2, "a2", "R2 fails: 3-element algebra with non-associative addition"},
    {ModelKind::a3, "a3", "R3 fails: Boolean relation algebra with identity complement"},
    {ModelKind::a4, "a4", "R4 fails: complex algebra of McKinsey's partial groupoid"},
    {ModelKind::a5, "a5", "R5 fails: Boolean algebra with constant zero product"},
    {ModelKind::b5, "b5", "R5 fails: relation algebra with 1' moved off the identity"},
    {ModelKind::a6, "a6", "R6 fails: relation algebra with constant zero converse"},
    {ModelKind::a7, "a7", "R7 fails: r;s = r if s = 1', else 0"},
    {ModelKind::a8, "a8", "R8 fails: symmetric integral algebra with 0;0 = 1"},
    {ModelKind::a9, "a9", "R9 fails: modified converse and product on z3c"},
    {ModelKind::a10, "a10", "R10 fails: Boolean addition as relative product"},
    {ModelKind::b9, "b9", "R9 fails within system r: modified converse and product on d"},
    {ModelKind::b10, "b10", "R10 fails: modified product on m3"},
}};

const KindInfo& info(ModelKind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

constexpr unsigned kMaxBooleanRank = 6;

AlgebraTables boolean_skeleton(unsigned k) {
    const std::size_t n = std::size_t{1} << k;
    AlgebraTables t;
    t.size = n;
    t.add.resize(n * n);
    t.comp.assign(n * n, 0);
    t.neg.resize(n);
    t.conv.resize(n);
    for (Element x = 0; x < n; ++x) {
        t.neg[x] = static_cast<Element>(n - 1) ^ x;
        t.conv[x] = x;
        for (Element y = 0; y < n; ++y) t.add_at(x, y) = x | y;
    }
    return t;
}

/// "0", "1", and sums of atom names in bit order.
std::vector<std::string> boolean_names(unsigned k, const std::vector<std::string>& atom_names) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> names(n);
    names[0] = "0";
    for (std::size_t x = 1; x < n; ++x) {
        if (x == n - 1) {
            names[x] = "1";
            continue;
        }
        for (unsigned b = 0; b < k; ++b) {
            if (!(x >> b & 1)) continue;
            if (!names[x].empty()) names[x] += "+";
            names[x] += atom_names[b];
        }
    }
    return names;
}

std::vector<std::string> letter_names(unsigned k) {
    std::vector<std::string> out;
    for (unsigned b = 0; b < k; ++b) out.push_back(std::string(1, static_cast<char>('a' + b)));
    return out;
}

/// Boolean names where an atomic 1' and its complement are written 1', 0'.
std::vector<std::string> names_with_ident(unsigned k, Element ident) {
    const Element top = (Element{1} << k) - 1;
    auto atoms = letter_names(k);
    const bool atomic = k >= 2 && std::has_single_bit(ident);
    if (atomic) atoms[std::countr_zero(ident)] = "1'";
    auto names = boolean_names(k, atoms);
    if (atomic) names[top ^ ident] = "0'";
    return names;
}

std::string subset_name(std::size_t mask, std::size_t bits) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < bits; ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

AlgebraTables powerset_skeleton(std::size_t bits) {
    if (bits > kMaxBooleanRank) throw CatalogError("complex algebras are limited to 6 underlying elements");
    AlgebraTables t = boolean_skeleton(static_cast<unsigned>(bits));
    for (std::size_t x = 0; x < t.size; ++x) t.names.push_back(subset_name(x, bits));
    return t;
}

void check_rank(unsigned k, unsigned min, const char* what) {
    if (k < min || k > kMaxBooleanRank)
        throw CatalogError(std::string(what) + ": k must be between " + std::to_string(min) + " and " +
                           std::to_string(kMaxBooleanRank));
}

FiniteAlgebra make(AlgebraTables t) {
    try {
        return FiniteAlgebra(std::move(t));
    } catch (const AlgebraError& e) {
        throw CatalogError(e.what());
    }
}

FiniteAlgebra build_m3() {
    // 0 = empty, 1' = identity, 0' = diversity, 1 = universal relation
    return make_algebra(4,
                        {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}},
                        {3, 2, 1, 0},
                        {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 3}, {0, 3, 3, 3}},
                        {0, 1, 2, 3},
                        1,
                        {"0", "1'", "0'", "1"});
}

FiniteAlgebra build_d() {
    AlgebraTables t = boolean_skeleton(3);
    t.names = boolean_names(3, {"1'", "a", "b"});
    t.names[6] = "0'";
    t.ident = 1;
    // products of atoms; everything else by additivity in both arguments
    const Element ident = 1, a = 2, b = 4, diversity = 6, top = 7;
    auto atom_product = [&](Element x, Element y) -> Element {
        if (x == ident) return y;
        if (y == ident) return x;
        return x == y ? top : diversity;
    };
    for (Element x = 0; x < 8; ++x)
        for (Element y = 0; y < 8; ++y) {
            Element v = 0;
            for (Element p : {ident, a, b})
                for (Element q : {ident, a, b})
                    if ((x & p) && (y & q)) v |= atom_product(p, q);
            t.comp_at(x, y) = v;
        }
    return make(std::move(t));
}

FiniteAlgebra build_a1(unsigned k) {
    check_rank(k, 1, "a1");
    const GroupSpec g = GroupSpec::boolean(k);
    AlgebraTables t;
    t.size = g.size;
    t.add.resize(g.size * g.size);
    t.comp.resize(g.size * g.size);
    for (Element x = 0; x < g.size; ++x) {
        t.neg.push_back(x);
        t.conv.push_back(g.inv[x]);
        t.names.push_back(std::to_string(x));
        for (Element y = 0; y < g.size; ++y) {
            t.add_at(x, y) = x;
            t.comp_at(x, y) = g.times(x, y);
        }
    }
    t.ident = g.unit;
    return make(std::move(t));
}

FiniteAlgebra build_a2() {
    return make_algebra(3,
                        {{0, 1, 2}, {1, 1, 0}, {2, 0, 2}},
                        {0, 2, 1},
                        {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}},
                        {0, 1, 2},
                        1,
                        {"0", "1'", "1"});
}

FiniteAlgebra build_a3(unsigned k) {
    check_rank(k, 1, "a3");
    AlgebraTables t = boolean_relation_algebra(k).tables();
    for (Element x = 0; x < t.size; ++x) t.neg[x] = x;
    return make(std::move(t));
}

FiniteAlgebra build_a5(unsigned k, Element ident) {
    check_rank(k, 1, "a5");
    AlgebraTables t = boolean_skeleton(k);
    if (ident >= t.size) throw CatalogError("a5: ident is out of range");
    t.ident = ident;
    t.names = names_with_ident(k, ident);
    return make(std::move(t));
}

FiniteAlgebra build_b5(const FiniteAlgebra& base, Element ident) {
    if (ident >= base.size()) throw CatalogError("b5: ident is out of range");
    AlgebraTables t = base.tables();
    t.ident = ident;
    return make(std::move(t));
}

FiniteAlgebra build_a6(const FiniteAlgebra& base) {
    AlgebraTables t = base.tables();
    const Element zero = derived_element(base, Derived::zero);
    std::fill(t.conv.begin(), t.conv.end(), zero);
    return make(std::move(t));
}

FiniteAlgebra build_a7(unsigned k, Element ident) {
    check_rank(k, 2, "a7");
    AlgebraTables t = boolean_skeleton(k);
    const Element top = static_cast<Element>(t.size - 1);
    if (ident == 0 || ident >= top) throw CatalogError("a7: ident must differ from 0 and 1");
    t.ident = ident;
    for (Element x = 0; x < t.size; ++x)
        for (Element y = 0; y < t.size; ++y) t.comp_at(x, y) = y == ident ? x : 0;
    t.names = names_with_ident(k, ident);
    return make(std::move(t));
}

FiniteAlgebra build_a8(const FiniteAlgebra& base) {
    if (!is_symmetric_integral(base)) throw CatalogError("a8: the base must be a symmetric integral relation algebra");
    AlgebraTables t = base.tables();
    const Element zero = derived_element(base, Derived::zero);
    t.comp_at(zero, zero) = derived_element(base, Derived::one);
    return make(std::move(t));
}

FiniteAlgebra build_a9() {
    const FiniteAlgebra c = group_complex(GroupSpec::cyclic(3));
    AlgebraTables t = c.tables();
    const std::array<Element, 2> singletons{0b010, 0b100};
    const std::array<Element, 3> doubletons{0b011, 0b101, 0b110};
    // converse becomes the identity except on the doubletons {0,1} and {0,2}
    for (Element x = 0; x < t.size; ++x) t.conv[x] = x;
    t.conv[0b011] = 0b101;
    t.conv[0b101] = 0b011;
    for (Element r : singletons)
        for (Element s : doubletons) t.comp_at(r, s) = c.comp(c.conv(r), s);
    return make(std::move(t));
}

FiniteAlgebra build_a10(unsigned k) {
    check_rank(k, 1, "a10");
    AlgebraTables t = boolean_skeleton(k);
    t.comp = t.add;
    t.ident = 0;
    t.names = boolean_names(k, letter_names(k));
    return make(std::move(t));
}

FiniteAlgebra build_b9() {
    const FiniteAlgebra d = build_d();
    AlgebraTables t = d.tables();
    const Element ident_a = 3, ident_b = 5, a = 2, b = 4;
    t.conv[ident_a] = ident_b;
    t.conv[ident_b] = ident_a;
    for (Element r : {ident_a, ident_b})
        for (Element s : {a, b}) t.comp_at(r, s) = d.comp(t.conv[r], s);
    return make(std::move(t));
}

FiniteAlgebra build_b10() {
    AlgebraTables t = build_m3().tables();
    const Element zero = 0, diversity = 2, top = 3;
    for (Element r = 0; r < 4; ++r) {
        t.comp_at(r, diversity) = diversity;
        t.comp_at(diversity, r) = diversity;
    }
    t.comp_at(zero, top) = diversity;
    t.comp_at(top, zero) = diversity;
    return make(std::move(t));
}

std::vector<std::string_view> split_top_level(std::string_view s) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        if (s[i] == ']') --depth;
        if (s[i] == ',' && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

unsigned parse_number(std::string_view text, std::string_view key) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw CatalogError("parameter " + std::string(key) + ": expected a number, got \"" + std::string(text) + "\"");
    return v;
}

bool takes(ModelKind kind, std::string_view key) {
    using enum ModelKind;
    if (key == "k") return kind == bra || kind == a1 || kind == a3 || kind == a5 || kind == a7 || kind == a10;
    if (key == "n") return kind == zc;
    if (key == "ident") return kind == a5 || kind == a7 || kind == b5;
    if (key == "base") return kind == b5 || kind == a6 || kind == a8;
    return false;
}

}  // namespace

ModelId ModelId::defaults(ModelKind kind) {
    using enum ModelKind;
    ModelId id;
    id.kind = kind;
    switch (kind) {
        case bra:
        case a1:
        case a3:
        case a10: id.k = 1; break;
        case zc: id.k = 3; break;
        case a5:
            id.k = 1;
            id.ident = 1;
            break;
        case a7:
            id.k = 2;
            id.ident = 1;
            break;
        case b5:
            id.base = std::make_shared<ModelId>(defaults(m3));
            id.ident = 0;
            break;
        case a6: id.base = std::make_shared<ModelId>(defaults(m3)); break;
        case a8: id.base = std::make_shared<ModelId>(defaults(bra)); break;
        default: break;
    }
    return id;
}

ModelId ModelId::parse(std::string_view text) {
    std::string_view name = text;
    std::string_view params;
    if (auto open = text.find('['); open != std::string_view::npos) {
        if (text.back() != ']') throw CatalogError("model id \"" + std::string(text) + "\": missing ']'");
        name = text.substr(0, open);
        params = text.substr(open + 1, text.size() - open - 2);
    }
    auto it = std::find_if(kKinds.begin(), kKinds.end(), [&](const KindInfo& k) { return k.name == name; });
    if (it == kKinds.end()) throw CatalogError("unknown model \"" + std::string(name) + "\"");
    ModelId id = defaults(it->kind);
    if (params.empty()) return id;
    for (std::string_view part : split_top_level(params)) {
        const auto eq = part.find('=');
        if (eq == std::string_view::npos) throw CatalogError("parameter \"" + std::string(part) + "\" lacks '='");
        const std::string_view key = part.substr(0, eq);
        const std::string_view value = part.substr(eq + 1);
        if (!takes(id.kind, key))
            throw CatalogError("model " + std::string(name) + " has no parameter \"" + std::string(key) + "\"");
        if (key == "k" || key == "n") id.k = parse_number(value, key);
        else if (key == "ident") id.ident = parse_number(value, key);
        else id.base = std::make_shared<ModelId>(parse(value));
    }
    return id;
}

std::string ModelId::to_string() const {
    using enum ModelKind;
    std::string s(info(kind).name);
    switch (kind) {
        case bra:
        case a1:
        case a3:
        case a10: return s + "[k=" + std::to_string(k) + "]";
        case zc: return s + "[n=" + std::to_string(k) + "]";
        case a5:
        case a7: return s + "[k=" + std::to_string(k) + ",ident=" + std::to_string(ident) + "]";
        case b5: return s + "[base=" + base->to_string() + ",ident=" + std::to_string(ident) + "]";
        case a6:
        case a8: return s + "[base=" + base->to_string() + "]";
        default: return s;
    }
}

FiniteAlgebra build(const ModelId& id) {
    using enum ModelKind;
    switch (id.kind) {
        case m3: return build_m3();
        case z3c: return group_complex(GroupSpec::cyclic(3));
        case d: return build_d();
        case bra:
            check_rank(id.k, 1, "bra");
            return boolean_relation_algebra(id.k);
        case zc:
            if (id.k < 1) throw CatalogError("zc: n must be positive");
            return group_complex(GroupSpec::cyclic(id.k));
        case a1: return build_a1(id.k);
        case a2: return build_a2();
        case a3: return build_a3(id.k);
        case a4: return complex_of_partial_groupoid(mckinsey_groupoid());
        case a5: return build_a5(id.k, id.ident);
        case b5: return build_b5(build(*id.base), id.ident);
        case a6: return build_a6(build(*id.base));
        case a7: return build_a7(id.k, id.ident);
        case a8: return build_a8(build(*id.base));
        case a9: return build_a9();
        case a10: return build_a10(id.k);
        case b9: return build_b9();
        case b10: return build_b10();
    }
    throw CatalogError("unknown model kind");
}

FiniteAlgebra build(std::string_view id) { return build(ModelId::parse(id)); }

std::vector<CatalogEntry> list_models() {
    std::vector<CatalogEntry> out;
    for (const auto& k : kKinds) out.push_back({ModelId::defaults(k.kind).to_string(), std::string(k.description)});
    return out;
}

FiniteAlgebra group_complex(const GroupSpec& g) {
    try {
        g.validate();
    } catch (const AlgebraError& e) {
        throw CatalogError(e.what());
    }
    AlgebraTables t = powerset_skeleton(g.size);
    for (Element x = 0; x < t.size; ++x) {
        Element inv = 0;
        for (std::size_t f = 0; f < g.size; ++f)
            if (x >> f & 1) inv |= Element{1} << g.inv[f];
        t.conv[x] = inv;
        for (Element y = 0; y < t.size; ++y) {
            Element v = 0;
            for (std::size_t f = 0; f < g.size; ++f)
                for (std::size_t h = 0; h < g.size; ++h)
                    if ((x >> f & 1) && (y >> h & 1))
                        v |= Element{1} << g.times(static_cast<Element>(f), static_cast<Element>(h));
            t.comp_at(x, y) = v;
        }
    }
    t.ident = Element{1} << g.unit;
    return make(std::move(t));
}

FiniteAlgebra complex_of_partial_groupoid(const PartialGroupoidSpec& p) {
    try {
        p.validate();
    } catch (const AlgebraError& e) {
        throw CatalogError(e.what());
    }
    AlgebraTables t = powerset_skeleton(p.size);
    for (Element x = 0; x < t.size; ++x) {
        Element inv = 0;
        for (std::size_t f = 0; f < p.size; ++f)
            if (x >> f & 1) inv |= Element{1} << p.inv[f];
        t.conv[x] = inv;
        for (Element y = 0; y < t.size; ++y) {
            Element v = 0;
            for (std::size_t f = 0; f < p.size; ++f)
                for (std::size_t h = 0; h < p.size; ++h)
                    if ((x >> f & 1) && (y >> h & 1))
                        if (auto prod = p.times(static_cast<Element>(f), static_cast<Element>(h)))
                            v |= Element{1} << *prod;
            t.comp_at(x, y) = v;
        }
    }
    t.ident = Element{1} << p.unit;
    return make(std::move(t));
}

PartialGroupoidSpec mckinsey_groupoid() {
    PartialGroupoidSpec p;
    p.size = 3;
    p.mul = {0, 1, 2, 1, 0, std::nullopt, 2, std::nullopt, 0};
    p.inv = {0, 1, 2};
    p.unit = 0;
    return p;
}

FiniteAlgebra boolean_relation_algebra(unsigned k) {
    AlgebraTables t = boolean_skeleton(k);
    for (Element x = 0; x < t.size; ++x)
        for (Element y = 0; y < t.size; ++y) t.comp_at(x, y) = x & y;
    t.ident = static_cast<Element>(t.size - 1);
    t.names = boolean_names(k, letter_names(k));
    return make(std::move(t));
}

bool is_symmetric_integral(const FiniteAlgebra& a) {
    if (a.size() < 2) return false;
    for (Element x = 0; x < a.size(); ++x)
        if (a.conv(x) != x) return false;
    const auto tarski = AxiomSystem::tarski();
    if (!satisfies_all(a, tarski.members)) return false;
    const Element zero = derived_element(a, Derived::zero);
    for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y)
            if (a.comp(x, y) == zero && x != zero && y != zero) return false;
    return true;
}

}  // namespace relalg
