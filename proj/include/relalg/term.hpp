#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

enum class TermKind { var, ident, zero, one, neg, conv, add, meet, comp };

/// Immutable term tree over the relation-algebra signature.  Copies share
/// structure.  `meet`, `zero` and `one` are sugar evaluated through their
/// Boolean expansions.
class Term {
public:
    static Term var(std::string name);
    static Term ident();
    static Term zero();
    static Term one();
    static Term neg(Term child);
    static Term conv(Term child);
    static Term add(Term lhs, Term rhs);
    static Term meet(Term lhs, Term rhs);
    static Term comp(Term lhs, Term rhs);

    TermKind kind() const;
    /// Variable name; empty for other kinds.
    const std::string& name() const;
    /// Operand of neg/conv, left operand of binaries.
    const Term& lhs() const;
    const Term& rhs() const;

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class Relation { equals, includes };

/// `lhs = rhs`, or `lhs <= rhs` (sugar for lhs + rhs = rhs).
struct Atomic {
    Term lhs;
    Relation relation = Relation::equals;
    Term rhs;

    friend bool operator==(const Atomic&, const Atomic&) = default;
};

/// antecedent_1, ..., antecedent_k -> consequent
struct QuasiEquation {
    std::vector<Atomic> antecedents;
    Atomic consequent;

    friend bool operator==(const QuasiEquation&, const QuasiEquation&) = default;
};

struct Biconditional {
    Atomic left;
    Atomic right;

    friend bool operator==(const Biconditional&, const Biconditional&) = default;
};

using Sentence = std::variant<Atomic, QuasiEquation, Biconditional>;

using Assignment = std::map<std::string, Element, std::less<>>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grammar, loosest first: `+`, `.`, `;`, prefix `-`, postfix `^`.  Binaries
/// associate to the left.  Constants are `1'`, `0` and `1`.
Term parse_term(std::string_view text);

/// Accepts `t = u`, `t <= u`, `e1, e2 -> e3` and `e1 <-> e2`.
Sentence parse_sentence(std::string_view text);

/// Minimal parenthesization; parse_term(to_string(t)) == t.
std::string to_string(const Term& t);
std::string to_string(const Atomic& a);
std::string to_string(const Sentence& s);

/// Sorted, duplicate-free.
std::vector<std::string> free_variables(const Term& t);
std::vector<std::string> free_variables(const Sentence& s);

/// Tree-walking evaluation.  Throws EvalError on unbound variables.
Element eval_term(const FiniteAlgebra& a, const Term& t, const Assignment& sigma);

/// Truth of a sentence under one assignment (tree-walking).
bool holds(const FiniteAlgebra& a, const Sentence& s, const Assignment& sigma);

struct Validity {
    /// First falsifying assignment: variables in alphabetical order, the
    /// first variable varying slowest, elements by index.
    std::optional<Assignment> counterexample;

    bool valid() const { return !counterexample.has_value(); }
};

Validity check_validity(const FiniteAlgebra& a, const Sentence& s);

}  // namespace relalg
