#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ModelKind { m3, z3c, d, bra, zc, a1, a2, a3, a4, a5, b5, a6, a7, a8, a9, a10, b9, b10 };

/// A catalog entry with its parameters.  String syntax: `m3`, `bra[k=2]`,
/// `a7[k=2,ident=1]`, `b5[base=d,ident=0]`; omitted parameters take defaults.
struct ModelId {
    ModelKind kind = ModelKind::m3;
    unsigned k = 0;                        // bra, a1, a3, a5, a7, a10; group order n for zc
    Element ident = 0;                     // a5, a7, b5
    std::shared_ptr<const ModelId> base;   // b5, a6, a8

    static ModelId defaults(ModelKind kind);
    /// Throws CatalogError on unknown names or bad parameters.
    static ModelId parse(std::string_view text);
    std::string to_string() const;
};

FiniteAlgebra build(const ModelId& id);
FiniteAlgebra build(std::string_view id);

struct CatalogEntry {
    std::string id;
    std::string description;
};

/// Every model kind with default parameters.
std::vector<CatalogEntry> list_models();

/// Powerset algebra of a group: union, complement, complex product, complex
/// inverse, 1' = {unit}.  Elements are bitmasks over group elements.
FiniteAlgebra group_complex(const GroupSpec& g);

/// Same construction where undefined products contribute nothing.
FiniteAlgebra complex_of_partial_groupoid(const PartialGroupoidSpec& p);

/// The three-element partial groupoid on {0,1,2} with 1∘2 and 2∘1 undefined.
PartialGroupoidSpec mckinsey_groupoid();

/// The 2^k-element Boolean relation algebra (; = meet, ^ = identity, 1' = 1).
FiniteAlgebra boolean_relation_algebra(unsigned k);

/// Satisfies R1-R10, has identity converse, at least two elements, and no
/// zero divisors for ;.
bool is_symmetric_integral(const FiniteAlgebra& a);

}  // namespace relalg
