#pragma once

// Flat evaluation of sentences over "cell" arrays: every table entry of an
// algebra (ident, neg, conv, add, comp) gets a fixed cell index, so the same
// evaluator serves complete algebras and the partially filled tables of the
// model search.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"
#include "relalg/term.hpp"

namespace relalg {

/// Cell numbering: ident, neg[x], conv[x], add[x][y], comp[x][y].
class CellLayout {
public:
    explicit CellLayout(std::size_t n) : n_(n) {}

    std::size_t size() const { return n_; }
    std::size_t cell_count() const { return 1 + 2 * n_ + 2 * n_ * n_; }

    std::size_t ident() const { return 0; }
    std::size_t neg(Element x) const { return 1 + x; }
    std::size_t conv(Element x) const { return 1 + n_ + x; }
    std::size_t add(Element x, Element y) const { return 1 + 2 * n_ + x * n_ + y; }
    std::size_t comp(Element x, Element y) const { return 1 + 2 * n_ + n_ * n_ + x * n_ + y; }

    TableKind table_of(std::size_t cell) const;

private:
    std::size_t n_;
};

constexpr int kUndecided = -1;

/// Cell values of a complete algebra.
class CellTables {
public:
    explicit CellTables(const FiniteAlgebra& a);
    const CellLayout& layout() const { return layout_; }
    std::span<const int> cells() const { return cells_; }

private:
    CellLayout layout_;
    std::vector<int> cells_;
};

/// Rebuilds an algebra from fully decided cells.
FiniteAlgebra algebra_from_cells(const CellLayout& layout, std::span<const int> cells);

struct Instr {
    enum class Op : std::uint8_t { var, ident, neg, conv, add, comp };
    Op op;
    std::uint8_t arg = 0;  // variable slot for Op::var
};

/// Postfix program for one term, with sugar expanded.
struct Program {
    std::vector<Instr> code;
    std::size_t max_stack = 0;
};

/// Outcome of evaluating over possibly undecided cells.  `forced` means the
/// sentence holds exactly when blocked_cell takes forced_value: one side of an
/// equation is known and the other is only missing its outermost cell.
struct Partial {
    enum class State : std::uint8_t { holds, fails, blocked, forced };
    State state;
    std::size_t blocked_cell = 0;  // first undecided cell hit, when blocked or forced
    int forced_value = 0;
};

class CompiledSentence {
public:
    explicit CompiledSentence(const Sentence& s);

    /// Variables in alphabetical order; slot i of an assignment binds variables()[i].
    const std::vector<std::string>& variables() const { return variables_; }

    bool holds(const CellTables& tables, std::span<const Element> values) const;

    /// Evaluates against a cell array in which kUndecided marks open cells.
    Partial evaluate(const CellLayout& layout, std::span<const int> cells,
                     std::span<const Element> values) const;

private:
    struct Comparison {
        Program lhs;
        Program rhs;
    };
    enum class Shape : std::uint8_t { atomic, quasi, biconditional };

    Shape shape_;
    std::vector<Comparison> antecedents_;  // quasi: antecedents; biconditional: left
    Comparison main_;                      // atomic / consequent / right
    std::vector<std::string> variables_;
};

}  // namespace relalg
