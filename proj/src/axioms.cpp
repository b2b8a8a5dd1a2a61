#include "relalg/axioms.hpp"

#include <algorithm>
#include <cctype>

namespace relalg {

namespace {

struct AxiomEntry {
    AxiomId id;
    std::string_view name;
    std::string_view text;
};

constexpr std::array<AxiomEntry, kAllAxioms.size()> kEntries = {{
    {AxiomId::R1, "R1", "r+s = s+r"},
    {AxiomId::R2, "R2", "r+(s+t) = (r+s)+t"},
    {AxiomId::R3, "R3", "-(-r+s) + -(-r+-s) = r"},
    {AxiomId::R4, "R4", "r;(s;t) = (r;s);t"},
    {AxiomId::R5, "R5", "r;1' = r"},
    {AxiomId::R6, "R6", "r^^ = r"},
    {AxiomId::R7, "R7", "(r;s)^ = s^;r^"},
    {AxiomId::R8, "R8", "(r+s);t = r;t + s;t"},
    {AxiomId::R9, "R9", "(r+s)^ = r^ + s^"},
    {AxiomId::R10, "R10", "r^;-(r;s) + -s = -s"},
    {AxiomId::R8p, "R8p", "r;(s+t) = r;s + r;t"},
    {AxiomId::R10p, "R10p", "r^;-(r;s) <= -s"},
    {AxiomId::R11, "R11", "(r;s).t = 0 -> (r^;t).s = 0"},
    {AxiomId::R11p, "R11p", "(r;s).t = 0 <-> (r^;t).s = 0"},
    {AxiomId::monL, "monL", "r <= s -> r;t <= s;t"},
    {AxiomId::monR, "monR", "r <= s -> t;r <= t;s"},
}};

const AxiomEntry& entry(AxiomId id) { return kEntries[static_cast<std::size_t>(id)]; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int numbered(AxiomId id) {
    const auto i = static_cast<int>(id);
    return i <= static_cast<int>(AxiomId::R10) ? i + 1 : 0;
}

}  // namespace

std::string_view axiom_name(AxiomId id) { return entry(id).name; }

std::optional<AxiomId> parse_axiom_id(std::string_view text) {
    text = trim(text);
    for (const auto& e : kEntries) {
        if (e.name.size() != text.size()) continue;
        bool same = std::equal(e.name.begin(), e.name.end(), text.begin(), [](char a, char b) {
            return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
        });
        if (same) return e.id;
    }
    return std::nullopt;
}

std::vector<AxiomId> parse_axiom_list(std::string_view text) {
    std::vector<AxiomId> out;
    auto add = [&](AxiomId id) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    };
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = trim(text.substr(start, comma - start));
        start = comma + 1;
        if (item.empty()) throw std::invalid_argument("empty axiom id in list");
        if (auto dash = item.find('-'); dash != std::string_view::npos) {
            auto lo = parse_axiom_id(item.substr(0, dash));
            auto hi = parse_axiom_id(item.substr(dash + 1));
            if (!lo || !hi || !numbered(*lo) || !numbered(*hi) || numbered(*lo) > numbered(*hi))
                throw std::invalid_argument("bad axiom range \"" + std::string(item) + "\"");
            for (int i = numbered(*lo); i <= numbered(*hi); ++i) add(static_cast<AxiomId>(i - 1));
        } else {
            auto id = parse_axiom_id(item);
            if (!id) throw std::invalid_argument("unknown axiom \"" + std::string(item) + "\"");
            add(*id);
        }
        if (comma == text.size()) break;
    }
    return out;
}

std::string_view axiom_text(AxiomId id) { return entry(id).text; }

const Sentence& axiom_sentence(AxiomId id) {
    static const std::vector<Sentence> sentences = [] {
        std::vector<Sentence> v;
        for (const auto& e : kEntries) v.push_back(parse_sentence(e.text));
        return v;
    }();
    return sentences[static_cast<std::size_t>(id)];
}

AxiomSystem AxiomSystem::tarski() {
    using enum AxiomId;
    return {"tarski", {R1, R2, R3, R4, R5, R6, R7, R8, R9, R10}};
}

AxiomSystem AxiomSystem::r() {
    using enum AxiomId;
    return {"r", {R1, R2, R3, R4, R5, R6, R8p, R9, R10}};
}

AxiomSystem AxiomSystem::s() {
    using enum AxiomId;
    return {"s", {R1, R2, R3, R4, R5, R6, R8, R8p, R10}};
}

std::optional<AxiomSystem> AxiomSystem::named(std::string_view name) {
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "tarski") return tarski();
    if (lower == "r") return r();
    if (lower == "s") return s();
    return std::nullopt;
}

bool AxiomSystem::contains(AxiomId id) const {
    return std::find(members.begin(), members.end(), id) != members.end();
}

std::vector<AxiomId> AxiomSystem::without(AxiomId id) const {
    std::vector<AxiomId> out;
    for (AxiomId m : members)
        if (m != id) out.push_back(m);
    return out;
}

std::vector<AxiomId> StatusVector::failing() const {
    std::vector<AxiomId> out;
    for (const auto& e : entries)
        if (!e.holds()) out.push_back(e.id);
    return out;
}

const AxiomStatus& StatusVector::at(AxiomId id) const {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw std::out_of_range("axiom " + std::string(axiom_name(id)) + " is not in the status vector");
}

StatusVector status_vector(const FiniteAlgebra& a, const AxiomSystem& sys) {
    StatusVector v;
    for (AxiomId id : sys.members) v.entries.push_back({id, check_validity(a, axiom_sentence(id)).counterexample});
    return v;
}

bool satisfies(const FiniteAlgebra& a, AxiomId id) { return check_validity(a, axiom_sentence(id)).valid(); }

bool satisfies_all(const FiniteAlgebra& a, std::span<const AxiomId> ids) {
    return std::all_of(ids.begin(), ids.end(), [&](AxiomId id) { return satisfies(a, id); });
}

bool is_independence_model(const FiniteAlgebra& a, const AxiomSystem& sys, AxiomId target) {
    if (!sys.contains(target))
        throw std::invalid_argument(std::string(axiom_name(target)) + " is not a member of system " + sys.name);
    if (satisfies(a, target)) return false;
    const auto rest = sys.without(target);
    return satisfies_all(a, rest);
}

std::optional<AtomTriple> atom_form_r11(const FiniteAlgebra& a) {
    using enum AxiomId;
    const std::array boolean{R1, R2, R3};
    if (!satisfies_all(a, boolean)) throw AlgebraError("atom form of R11 needs R1-R3 to hold");
    const auto at = atoms(a);
    for (Element r : at)
        for (Element s : at)
            for (Element t : at)
                if (leq(a, s, a.comp(a.conv(r), t)) && !leq(a, t, a.comp(r, s))) return AtomTriple{r, s, t};
    return std::nullopt;
}

EquivalenceResult semantic_equivalence(const FiniteAlgebra& a, std::span<const AxiomId> hypotheses,
                                       AxiomId first, AxiomId second) {
    if (!satisfies_all(a, hypotheses)) return {Equivalence::not_applicable};
    EquivalenceResult r;
    r.first_holds = satisfies(a, first);
    r.second_holds = satisfies(a, second);
    r.verdict = r.first_holds == r.second_holds ? Equivalence::equivalent : Equivalence::violated;
    return r;
}

std::optional<Element> exists_right_identity(const FiniteAlgebra& a) {
    auto is_right_identity = [&](Element e) {
        for (Element r = 0; r < a.size(); ++r)
            if (a.comp(r, e) != r) return false;
        return true;
    };
    if (is_right_identity(a.ident())) return a.ident();
    for (Element e = 0; e < a.size(); ++e)
        if (is_right_identity(e)) return e;
    return std::nullopt;
}

const std::vector<SemanticLemma>& semantic_lemmas() {
    using enum AxiomId;
    static const std::vector<SemanticLemma> lemmas = {
        {"r10-r10p", "under R1-R3, R10 is equivalent to R10p", {R1, R2, R3}, {R10, R10p}, true},
        {"monotony-left", "under R1-R3, R8 implies left monotony", {R1, R2, R3, R8}, {monL}, false},
        {"monotony-right", "under R1-R3, R8p implies right monotony", {R1, R2, R3, R8p}, {monR}, false},
        {"r10-r11p", "under R1-R3, R6 and R8p, R10 is equivalent to R11p", {R1, R2, R3, R6, R8p}, {R10, R11p}, true},
        {"r10-r11", "under R1-R3 and R8p, R10 is equivalent to R11", {R1, R2, R3, R8p}, {R10, R11}, true},
        {"r10-r11-tarski",
         "under R1-R3 and R6-R9, R10 is equivalent to R11",
         {R1, R2, R3, R6, R7, R8, R9},
         {R10, R11},
         true},
        {"r8-r8p", "under R6, R7 and R9, R8 is equivalent to R8p", {R6, R7, R9}, {R8, R8p}, true},
        {"second-involution", "R1-R5 and R11p imply R7", {R1, R2, R3, R4, R5, R11p}, {R7}, false},
        {"converse-additivity", "R1-R3, R5, R8 and R11p imply R9", {R1, R2, R3, R5, R8, R11p}, {R9}, false},
        {"system-r", "every model of system r satisfies R7 and R8", AxiomSystem::r().members, {R7, R8}, false},
        {"system-s", "every model of system s satisfies R7 and R9", AxiomSystem::s().members, {R7, R9}, false},
    };
    return lemmas;
}

LemmaOutcome check_lemma(const FiniteAlgebra& a, const SemanticLemma& lemma) {
    LemmaOutcome out;
    if (!satisfies_all(a, lemma.hypotheses)) return out;
    out.applicable = true;
    if (lemma.equivalence) {
        out.violated = satisfies(a, lemma.conclusions[0]) != satisfies(a, lemma.conclusions[1]);
    } else {
        out.violated = !satisfies_all(a, lemma.conclusions);
    }
    return out;
}

}  // namespace relalg
