#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/algebra.hpp"
#include "relalg/term.hpp"

namespace relalg {

enum class AxiomId { R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R8p, R10p, R11, R11p, monL, monR };

inline constexpr std::array kAllAxioms = {
    AxiomId::R1,  AxiomId::R2,   AxiomId::R3,  AxiomId::R4,   AxiomId::R5,   AxiomId::R6,
    AxiomId::R7,  AxiomId::R8,   AxiomId::R9,  AxiomId::R10,  AxiomId::R8p,  AxiomId::R10p,
    AxiomId::R11, AxiomId::R11p, AxiomId::monL, AxiomId::monR,
};

/// Stable string ids: "R1".."R10", "R8p", "R10p", "R11", "R11p", "monL", "monR".
std::string_view axiom_name(AxiomId id);
std::optional<AxiomId> parse_axiom_id(std::string_view text);

/// Comma-separated ids; "R3-R10" expands to the numbered axioms R3 through R10.
/// Throws std::invalid_argument on unknown ids or malformed ranges.
std::vector<AxiomId> parse_axiom_list(std::string_view text);

/// Concrete syntax of the axiom, e.g. "r;1' = r" for R5.
std::string_view axiom_text(AxiomId id);
const Sentence& axiom_sentence(AxiomId id);

struct AxiomSystem {
    std::string name;
    std::vector<AxiomId> members;

    static AxiomSystem tarski();
    static AxiomSystem r();
    static AxiomSystem s();
    /// "tarski", "r" or "s" (case-insensitive).
    static std::optional<AxiomSystem> named(std::string_view name);

    bool contains(AxiomId id) const;
    std::vector<AxiomId> without(AxiomId id) const;
};

struct AxiomStatus {
    AxiomId id;
    std::optional<Assignment> witness;  // first counterexample when the axiom fails

    bool holds() const { return !witness; }
};

struct StatusVector {
    std::vector<AxiomStatus> entries;

    std::vector<AxiomId> failing() const;
    const AxiomStatus& at(AxiomId id) const;
};

StatusVector status_vector(const FiniteAlgebra& a, const AxiomSystem& sys);

bool satisfies(const FiniteAlgebra& a, AxiomId id);
bool satisfies_all(const FiniteAlgebra& a, std::span<const AxiomId> ids);

/// Throws std::invalid_argument unless target is a member of sys.
bool is_independence_model(const FiniteAlgebra& a, const AxiomSystem& sys, AxiomId target);

/// Atoms r, s, t with s <= r^;t but not t <= r;s.
struct AtomTriple {
    Element r, s, t;
};

/// R11 restricted to atoms.  Throws AlgebraError when R1-R3 fail in `a`.
std::optional<AtomTriple> atom_form_r11(const FiniteAlgebra& a);

enum class Equivalence { not_applicable, equivalent, violated };

struct EquivalenceResult {
    Equivalence verdict;
    bool first_holds = false;
    bool second_holds = false;
};

EquivalenceResult semantic_equivalence(const FiniteAlgebra& a, std::span<const AxiomId> hypotheses,
                                       AxiomId first, AxiomId second);

/// Some e with r;e = r for every r.  Prefers 1' when it qualifies.
std::optional<Element> exists_right_identity(const FiniteAlgebra& a);

/// A semantic consequence claim: every algebra satisfying `hypotheses`
/// satisfies all of `conclusions` (implication) or agrees on the two
/// conclusions (equivalence).
struct SemanticLemma {
    std::string id;
    std::string description;
    std::vector<AxiomId> hypotheses;
    std::vector<AxiomId> conclusions;
    bool equivalence = false;
};

const std::vector<SemanticLemma>& semantic_lemmas();

struct LemmaOutcome {
    bool applicable = false;
    bool violated = false;
};

LemmaOutcome check_lemma(const FiniteAlgebra& a, const SemanticLemma& lemma);

}  // namespace relalg
