#include "relalg/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "relalg/compiled.hpp"

namespace relalg {

struct Term::Node {
    TermKind kind;
    std::string name;
    std::optional<Term> lhs;
    std::optional<Term> rhs;
};

namespace {

const std::string& empty_name() {
    static const std::string empty;
    return empty;
}

}  // namespace

Term Term::var(std::string name) {
    if (name.empty()) throw std::invalid_argument("variable names must be non-empty");
    return Term(std::make_shared<const Node>(Node{TermKind::var, std::move(name), {}, {}}));
}
Term Term::ident() { return Term(std::make_shared<const Node>(Node{TermKind::ident, {}, {}, {}})); }
Term Term::zero() { return Term(std::make_shared<const Node>(Node{TermKind::zero, {}, {}, {}})); }
Term Term::one() { return Term(std::make_shared<const Node>(Node{TermKind::one, {}, {}, {}})); }
Term Term::neg(Term child) {
    return Term(std::make_shared<const Node>(Node{TermKind::neg, {}, std::move(child), {}}));
}
Term Term::conv(Term child) {
    return Term(std::make_shared<const Node>(Node{TermKind::conv, {}, std::move(child), {}}));
}
Term Term::add(Term lhs, Term rhs) {
    return Term(std::make_shared<const Node>(Node{TermKind::add, {}, std::move(lhs), std::move(rhs)}));
}
Term Term::meet(Term lhs, Term rhs) {
    return Term(std::make_shared<const Node>(Node{TermKind::meet, {}, std::move(lhs), std::move(rhs)}));
}
Term Term::comp(Term lhs, Term rhs) {
    return Term(std::make_shared<const Node>(Node{TermKind::comp, {}, std::move(lhs), std::move(rhs)}));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->kind == TermKind::var ? node_->name : empty_name(); }
const Term& Term::lhs() const {
    if (!node_->lhs) throw std::logic_error("term has no operand");
    return *node_->lhs;
}
const Term& Term::rhs() const {
    if (!node_->rhs) throw std::logic_error("term has no right operand");
    return *node_->rhs;
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case TermKind::var: return a.name() == b.name();
        case TermKind::ident:
        case TermKind::zero:
        case TermKind::one: return true;
        case TermKind::neg:
        case TermKind::conv: return a.lhs() == b.lhs();
        case TermKind::add:
        case TermKind::meet:
        case TermKind::comp: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser

namespace {

enum class Tok {
    ident_var,
    ident_const,  // 1'
    zero,
    one,
    plus,
    dot,
    semi,
    minus,
    caret,
    lparen,
    rparen,
    equals,
    leq,
    arrow,
    iff,
    comma,
    end
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::string_view describe(Tok kind) {
    switch (kind) {
        case Tok::ident_var: return "variable";
        case Tok::ident_const: return "'1''";
        case Tok::zero: return "'0'";
        case Tok::one: return "'1'";
        case Tok::plus: return "'+'";
        case Tok::dot: return "'.'";
        case Tok::semi: return "';'";
        case Tok::minus: return "'-'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::equals: return "'='";
        case Tok::leq: return "'<='";
        case Tok::arrow: return "'->'";
        case Tok::iff: return "'<->'";
        case Tok::comma: return "','";
        case Tok::end: return "end of input";
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (c >= 'a' && c <= 'z') {
            while (i < text.size() && (std::islower(static_cast<unsigned char>(text[i])) ||
                                       std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
            }
            out.push_back({Tok::ident_var, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (c == '1' && i + 1 < text.size() && text[i + 1] == '\'') {
            out.push_back({Tok::ident_const, "1'", start});
            i += 2;
            continue;
        }
        if (c == '0' || c == '1') {
            if (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                throw ParseError("unexpected numeral", start);
            }
            out.push_back({c == '0' ? Tok::zero : Tok::one, std::string(1, c), start});
            ++i;
            continue;
        }
        auto single = [&](Tok kind) {
            out.push_back({kind, std::string(1, c), start});
            ++i;
        };
        switch (c) {
            case '+': single(Tok::plus); continue;
            case '.': single(Tok::dot); continue;
            case ';': single(Tok::semi); continue;
            case '^': single(Tok::caret); continue;
            case '(': single(Tok::lparen); continue;
            case ')': single(Tok::rparen); continue;
            case '=': single(Tok::equals); continue;
            case ',': single(Tok::comma); continue;
            case '-':
                if (i + 1 < text.size() && text[i + 1] == '>') {
                    out.push_back({Tok::arrow, "->", start});
                    i += 2;
                } else {
                    single(Tok::minus);
                }
                continue;
            case '<':
                if (text.substr(i, 3) == "<->") {
                    out.push_back({Tok::iff, "<->", start});
                    i += 3;
                    continue;
                }
                if (text.substr(i, 2) == "<=") {
                    out.push_back({Tok::leq, "<=", start});
                    i += 2;
                    continue;
                }
                throw ParseError("unexpected '<'", start);
            default: break;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({Tok::end, "", text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    Term term() {
        Term left = meet_level();
        while (peek().kind == Tok::plus) {
            advance();
            left = Term::add(std::move(left), meet_level());
        }
        return left;
    }

    Atomic atomic() {
        Term lhs = term();
        Relation relation;
        if (peek().kind == Tok::equals) {
            relation = Relation::equals;
        } else if (peek().kind == Tok::leq) {
            relation = Relation::includes;
        } else {
            fail("expected '=' or '<='");
        }
        advance();
        Term rhs = term();
        return Atomic{std::move(lhs), relation, std::move(rhs)};
    }

    Sentence sentence() {
        Atomic first = atomic();
        if (peek().kind == Tok::iff) {
            advance();
            Atomic second = atomic();
            return Biconditional{std::move(first), std::move(second)};
        }
        if (peek().kind == Tok::comma || peek().kind == Tok::arrow) {
            std::vector<Atomic> antecedents{std::move(first)};
            while (peek().kind == Tok::comma) {
                advance();
                antecedents.push_back(atomic());
            }
            expect(Tok::arrow);
            Atomic consequent = atomic();
            return QuasiEquation{std::move(antecedents), std::move(consequent)};
        }
        return first;
    }

    void expect_end() {
        if (peek().kind != Tok::end) fail("unexpected " + std::string(describe(peek().kind)));
    }

private:
    Term meet_level() {
        Term left = relprod();
        while (peek().kind == Tok::dot) {
            advance();
            left = Term::meet(std::move(left), relprod());
        }
        return left;
    }

    Term relprod() {
        Term left = unary();
        while (peek().kind == Tok::semi) {
            advance();
            left = Term::comp(std::move(left), unary());
        }
        return left;
    }

    Term unary() {
        if (peek().kind == Tok::minus) {
            advance();
            return Term::neg(unary());
        }
        return postfix();
    }

    Term postfix() {
        Term t = atom();
        while (peek().kind == Tok::caret) {
            advance();
            t = Term::conv(std::move(t));
        }
        return t;
    }

    Term atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::ident_var: {
                Term t = Term::var(tok.text);
                advance();
                return t;
            }
            case Tok::ident_const: advance(); return Term::ident();
            case Tok::zero: advance(); return Term::zero();
            case Tok::one: advance(); return Term::one();
            case Tok::lparen: {
                const std::size_t open = tok.pos;
                advance();
                Term inner = term();
                if (peek().kind != Tok::rparen) {
                    throw ParseError("unbalanced parenthesis opened at position " + std::to_string(open) +
                                         ", found " + std::string(describe(peek().kind)),
                                     peek().pos);
                }
                advance();
                return inner;
            }
            case Tok::rparen: throw ParseError("unbalanced ')'", tok.pos);
            default: fail("expected a term, found " + std::string(describe(tok.kind)));
        }
    }

    const Token& peek() const { return tokens_[index_]; }
    void advance() {
        if (index_ + 1 < tokens_.size()) ++index_;
    }
    void expect(Tok kind) {
        if (peek().kind != kind) {
            fail("expected " + std::string(describe(kind)) + ", found " + std::string(describe(peek().kind)));
        }
        advance();
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, peek().pos); }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

// Binding strength for printing; higher binds tighter.
int precedence(TermKind kind) {
    switch (kind) {
        case TermKind::add: return 1;
        case TermKind::meet: return 2;
        case TermKind::comp: return 3;
        case TermKind::neg: return 4;
        case TermKind::conv: return 5;
        default: return 6;
    }
}

void print(const Term& t, std::string& out);

void print_operand(const Term& t, int min_precedence, std::string& out) {
    if (precedence(t.kind()) < min_precedence) {
        out += '(';
        print(t, out);
        out += ')';
    } else {
        print(t, out);
    }
}

void print(const Term& t, std::string& out) {
    switch (t.kind()) {
        case TermKind::var: out += t.name(); return;
        case TermKind::ident: out += "1'"; return;
        case TermKind::zero: out += '0'; return;
        case TermKind::one: out += '1'; return;
        case TermKind::neg:
            out += '-';
            print_operand(t.lhs(), precedence(TermKind::neg), out);
            return;
        case TermKind::conv:
            print_operand(t.lhs(), precedence(TermKind::conv), out);
            out += '^';
            return;
        case TermKind::add:
        case TermKind::meet:
        case TermKind::comp: {
            const int p = precedence(t.kind());
            print_operand(t.lhs(), p, out);
            out += t.kind() == TermKind::add ? " + " : (t.kind() == TermKind::meet ? "." : ";");
            print_operand(t.rhs(), p + 1, out);
            return;
        }
    }
}

void collect_vars(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
        case TermKind::var: out.insert(t.name()); return;
        case TermKind::ident:
        case TermKind::zero:
        case TermKind::one: return;
        case TermKind::neg:
        case TermKind::conv: collect_vars(t.lhs(), out); return;
        default:
            collect_vars(t.lhs(), out);
            collect_vars(t.rhs(), out);
            return;
    }
}

void collect_vars(const Atomic& a, std::set<std::string>& out) {
    collect_vars(a.lhs, out);
    collect_vars(a.rhs, out);
}

}  // namespace

Term parse_term(std::string_view text) {
    Parser parser(text);
    Term t = parser.term();
    parser.expect_end();
    return t;
}

Sentence parse_sentence(std::string_view text) {
    Parser parser(text);
    Sentence s = parser.sentence();
    parser.expect_end();
    return s;
}

std::string to_string(const Term& t) {
    std::string out;
    print(t, out);
    return out;
}

std::string to_string(const Atomic& a) {
    return to_string(a.lhs) + (a.relation == Relation::equals ? " = " : " <= ") + to_string(a.rhs);
}

std::string to_string(const Sentence& s) {
    struct Printer {
        std::string operator()(const Atomic& a) const { return to_string(a); }
        std::string operator()(const QuasiEquation& q) const {
            std::string out;
            for (std::size_t i = 0; i < q.antecedents.size(); ++i) {
                if (i > 0) out += ", ";
                out += to_string(q.antecedents[i]);
            }
            return out + " -> " + to_string(q.consequent);
        }
        std::string operator()(const Biconditional& b) const {
            return to_string(b.left) + " <-> " + to_string(b.right);
        }
    };
    return std::visit(Printer{}, s);
}

std::vector<std::string> free_variables(const Term& t) {
    std::set<std::string> vars;
    collect_vars(t, vars);
    return {vars.begin(), vars.end()};
}

std::vector<std::string> free_variables(const Sentence& s) {
    std::set<std::string> vars;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Atomic>) {
                collect_vars(v, vars);
            } else if constexpr (std::is_same_v<T, QuasiEquation>) {
                for (const auto& a : v.antecedents) collect_vars(a, vars);
                collect_vars(v.consequent, vars);
            } else {
                collect_vars(v.left, vars);
                collect_vars(v.right, vars);
            }
        },
        s);
    return {vars.begin(), vars.end()};
}

// ---------------------------------------------------------------------------
// Evaluation

Element eval_term(const FiniteAlgebra& a, const Term& t, const Assignment& sigma) {
    switch (t.kind()) {
        case TermKind::var: {
            auto it = sigma.find(t.name());
            if (it == sigma.end()) throw EvalError("unbound variable '" + t.name() + "'");
            if (it->second >= a.size()) throw EvalError("variable '" + t.name() + "' bound to an out-of-range element");
            return it->second;
        }
        case TermKind::ident: return a.ident();
        case TermKind::zero: return derived_element(a, Derived::zero);
        case TermKind::one: return derived_element(a, Derived::one);
        case TermKind::neg: return a.neg(eval_term(a, t.lhs(), sigma));
        case TermKind::conv: return a.conv(eval_term(a, t.lhs(), sigma));
        case TermKind::add: return a.add(eval_term(a, t.lhs(), sigma), eval_term(a, t.rhs(), sigma));
        case TermKind::meet: return meet(a, eval_term(a, t.lhs(), sigma), eval_term(a, t.rhs(), sigma));
        case TermKind::comp: return a.comp(eval_term(a, t.lhs(), sigma), eval_term(a, t.rhs(), sigma));
    }
    throw EvalError("unknown term kind");
}

namespace {

bool holds_atomic(const FiniteAlgebra& a, const Atomic& at, const Assignment& sigma) {
    const Element lhs = eval_term(a, at.lhs, sigma);
    const Element rhs = eval_term(a, at.rhs, sigma);
    return at.relation == Relation::equals ? lhs == rhs : a.add(lhs, rhs) == rhs;
}

}  // namespace

bool holds(const FiniteAlgebra& a, const Sentence& s, const Assignment& sigma) {
    struct Visitor {
        const FiniteAlgebra& a;
        const Assignment& sigma;
        bool operator()(const Atomic& at) const { return holds_atomic(a, at, sigma); }
        bool operator()(const QuasiEquation& q) const {
            for (const auto& ante : q.antecedents) {
                if (!holds_atomic(a, ante, sigma)) return true;
            }
            return holds_atomic(a, q.consequent, sigma);
        }
        bool operator()(const Biconditional& b) const {
            return holds_atomic(a, b.left, sigma) == holds_atomic(a, b.right, sigma);
        }
    };
    return std::visit(Visitor{a, sigma}, s);
}

Validity check_validity(const FiniteAlgebra& a, const Sentence& s) {
    const CompiledSentence compiled(s);
    const CellTables tables(a);
    const std::size_t vars = compiled.variables().size();
    std::vector<Element> values(vars, 0);
    const std::size_t n = a.size();
    while (true) {
        if (!compiled.holds(tables, values)) {
            Assignment witness;
            for (std::size_t i = 0; i < vars; ++i) witness.emplace(compiled.variables()[i], values[i]);
            return Validity{std::move(witness)};
        }
        // Odometer with the last variable varying fastest.
        std::size_t i = vars;
        while (i > 0) {
            --i;
            if (++values[i] < n) break;
            values[i] = 0;
            if (i == 0) return Validity{};
        }
        if (vars == 0) return Validity{};
    }
}

}  // namespace relalg
