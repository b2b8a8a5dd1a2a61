#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"
#include "relalg/axioms.hpp"
#include "relalg/term.hpp"

namespace relalg {

class SearchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kMaxSearchSize = kCanonicalSizeLimit;

/// Find the algebras of one size satisfying every must_hold sentence and
/// violating each must_fail sentence individually.
struct SearchSpec {
    std::size_t size = 1;
    std::vector<Sentence> must_hold;
    std::vector<Sentence> must_fail;
    bool up_to_iso = false;
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
    /// Check ground instances on partial tables; off means generate-and-test.
    bool propagate = true;
    unsigned threads = 1;

    static SearchSpec from_axioms(std::size_t size, const std::vector<AxiomId>& hold,
                                  const std::vector<AxiomId>& fail, bool up_to_iso);
};

struct SearchResult {
    /// Canonical representatives when up_to_iso, otherwise every labeled
    /// model; sorted by table encoding either way.
    std::vector<FiniteAlgebra> models;
    std::uint64_t labeled_count = 0;
    std::uint64_t iso_class_count = 0;
    /// False when a node or time limit stopped the search early.
    bool exhaustive = true;
    std::uint64_t nodes_explored = 0;
};

/// Cell-by-cell backtracking over ident, neg, conv, add and comp.
SearchResult search(const SearchSpec& spec);

/// Same result set as search() for specs containing R1-R3: add and neg are
/// fixed to the Boolean algebra of the given size and only ident, conv and
/// comp are enumerated, with rows/columns generated by additivity when R8,
/// R8p or R9 must hold.  Throws SearchError unless R1-R3 are in must_hold.
SearchResult boolean_guided_search(const SearchSpec& spec);

struct SizeCheck {
    std::size_t size = 0;
    bool searched = false;
    std::string method;  // "generic", "boolean", or the reason the size was excluded
    std::uint64_t models = 0;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
};

struct MinimalityResult {
    AxiomId target;
    std::string system;
    std::size_t claimed_size = 0;
    std::vector<SizeCheck> smaller;
    std::string certificate;  // catalog id of the independence model at claimed_size
    bool certificate_ok = false;

    bool passed() const;
};

/// Searches every admissible size below claimed_size for an independence
/// model of target within sys and certifies claimed_size with a catalog model.
MinimalityResult verify_minimality(AxiomId target, const AxiomSystem& sys, std::size_t claimed_size,
                                   const SearchSpec& limits = {});

/// The catalog model serving as independence model for target within sys.
std::string independence_model_id(AxiomId target, const AxiomSystem& sys);

}  // namespace relalg
