#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

/// Index of an element inside a finite algebra, always in [0, size).
using Element = std::uint32_t;

/// Permutation of element indices: `perm[x]` is the image of `x`.
using Permutation = std::vector<Element>;

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raw operation tables, row-major for the binary operations.  This is the
/// mutable staging form; FiniteAlgebra is the validated, immutable one.
struct AlgebraTables {
    std::size_t size = 0;
    std::vector<Element> add;
    std::vector<Element> neg;
    std::vector<Element> comp;
    std::vector<Element> conv;
    Element ident = 0;
    std::vector<std::string> names;

    Element& add_at(Element x, Element y) { return add[x * size + y]; }
    Element& comp_at(Element x, Element y) { return comp[x * size + y]; }
};

/// A finite structure of signature (+, -, ;, ^, 1') given by explicit tables.
/// No axiom is assumed to hold.
class FiniteAlgebra {
public:
    /// Validates closure, dimensions and name uniqueness; throws AlgebraError.
    explicit FiniteAlgebra(AlgebraTables tables);

    std::size_t size() const { return size_; }

    Element add(Element x, Element y) const { return add_[x * size_ + y]; }
    Element neg(Element x) const { return neg_[x]; }
    Element comp(Element x, Element y) const { return comp_[x * size_ + y]; }
    Element conv(Element x) const { return conv_[x]; }
    Element ident() const { return ident_; }

    std::span<const Element> add_table() const { return add_; }
    std::span<const Element> neg_table() const { return neg_; }
    std::span<const Element> comp_table() const { return comp_; }
    std::span<const Element> conv_table() const { return conv_; }

    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    /// Display name; falls back to the decimal index.
    std::string name(Element x) const;
    std::optional<Element> find_name(std::string_view name) const;

    /// Copy of the tables, for building modified algebras.
    AlgebraTables tables() const;

    /// Table equality; names are presentation-only and ignored.
    friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);

private:
    std::size_t size_;
    std::vector<Element> add_;
    std::vector<Element> neg_;
    std::vector<Element> comp_;
    std::vector<Element> conv_;
    Element ident_;
    std::vector<std::string> names_;
};

/// Builds an algebra from nested tables, as they would be typed in.
FiniteAlgebra make_algebra(std::size_t size,
                           const std::vector<std::vector<Element>>& add,
                           const std::vector<Element>& neg,
                           const std::vector<std::vector<Element>>& comp,
                           const std::vector<Element>& conv,
                           Element ident,
                           std::vector<std::string> names = {});

/// A finite group given by its multiplication table.
struct GroupSpec {
    std::size_t size = 0;
    std::vector<Element> mul;  // row-major
    std::vector<Element> inv;
    Element unit = 0;

    /// Throws AlgebraError unless the group axioms hold.
    void validate() const;
    Element times(Element x, Element y) const { return mul[x * size + y]; }

    static GroupSpec cyclic(std::size_t n);
    /// The Boolean group (Z_2)^k, with multiplication as XOR.
    static GroupSpec boolean(unsigned k);
};

/// A group-like structure whose multiplication may be undefined on some pairs.
struct PartialGroupoidSpec {
    std::size_t size = 0;
    std::vector<std::optional<Element>> mul;  // row-major, nullopt = undefined
    std::vector<Element> inv;
    Element unit = 0;

    /// Throws AlgebraError unless the unit is a two-sided identity wherever
    /// defined and every entry is in range.
    void validate() const;
    std::optional<Element> times(Element x, Element y) const { return mul[x * size + y]; }
};

enum class Derived { zero, one, diversity };

/// one = 1' + -1', zero = -one, diversity = -1'.
Element derived_element(const FiniteAlgebra& a, Derived which);

/// x . y = -(-x + -y)
Element meet(const FiniteAlgebra& a, Element x, Element y);

/// x <= y iff x + y = y, read literally from the add table.
bool leq(const FiniteAlgebra& a, Element x, Element y);

/// Minimal non-zero elements under the literal order, sorted by index.
std::vector<Element> atoms(const FiniteAlgebra& a);

/// Least upper bound under leq, if one exists.  The empty set yields the
/// least element when there is one.
std::optional<Element> sup(const FiniteAlgebra& a, std::span<const Element> subset);

enum class DistributiveOp { comp, conv };

/// Complete distributivity of ; or ^ over all existing sums.  Subset
/// enumeration is exponential, so sizes above 12 are rejected.
bool is_completely_distributive(const FiniteAlgebra& a, DistributiveOp which);

/// `b` has element perm[x] where `a` has x.
FiniteAlgebra relabel(const FiniteAlgebra& a, const Permutation& perm);

/// A bijection carrying every table of `a` onto `b`, if one exists.
std::optional<Permutation> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Number of automorphisms (including the identity).
std::size_t automorphism_count(const FiniteAlgebra& a);

/// Flat table encoding: size, ident, neg, conv, add, comp (one byte per entry).
std::string encode_tables(const FiniteAlgebra& a);

constexpr std::size_t kCanonicalSizeLimit = 8;

/// Lexicographically least encode_tables() over all relabelings.
std::string canonical_form(const FiniteAlgebra& a);

/// The relabeling of `a` whose encoding is canonical_form(a).
FiniteAlgebra canonical_representative(const FiniteAlgebra& a);

enum class TableKind { add, neg, comp, conv, ident };

std::string_view table_name(TableKind kind);

struct CellDiff {
    TableKind table;
    Element x = 0;  // row (or argument of unary operations)
    Element y = 0;  // column, binary tables only
};

/// Cells in which two equally sized algebras differ, in table order.
std::vector<CellDiff> diff_tables(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace relalg
