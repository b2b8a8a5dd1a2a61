#include "relalg/compiled.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace relalg {

TableKind CellLayout::table_of(std::size_t cell) const {
    if (cell == 0) return TableKind::ident;
    if (cell < 1 + n_) return TableKind::neg;
    if (cell < 1 + 2 * n_) return TableKind::conv;
    if (cell < 1 + 2 * n_ + n_ * n_) return TableKind::add;
    return TableKind::comp;
}

CellTables::CellTables(const FiniteAlgebra& a) : layout_(a.size()), cells_(layout_.cell_count()) {
    const std::size_t n = a.size();
    cells_[layout_.ident()] = static_cast<int>(a.ident());
    for (Element x = 0; x < n; ++x) {
        cells_[layout_.neg(x)] = static_cast<int>(a.neg(x));
        cells_[layout_.conv(x)] = static_cast<int>(a.conv(x));
        for (Element y = 0; y < n; ++y) {
            cells_[layout_.add(x, y)] = static_cast<int>(a.add(x, y));
            cells_[layout_.comp(x, y)] = static_cast<int>(a.comp(x, y));
        }
    }
}

FiniteAlgebra algebra_from_cells(const CellLayout& layout, std::span<const int> cells) {
    const std::size_t n = layout.size();
    AlgebraTables t;
    t.size = n;
    t.neg.resize(n);
    t.conv.resize(n);
    t.add.resize(n * n);
    t.comp.resize(n * n);
    auto value = [&](std::size_t cell) {
        if (cells[cell] < 0) throw AlgebraError("cannot build an algebra from undecided cells");
        return static_cast<Element>(cells[cell]);
    };
    t.ident = value(layout.ident());
    for (Element x = 0; x < n; ++x) {
        t.neg[x] = value(layout.neg(x));
        t.conv[x] = value(layout.conv(x));
        for (Element y = 0; y < n; ++y) {
            t.add[x * n + y] = value(layout.add(x, y));
            t.comp[x * n + y] = value(layout.comp(x, y));
        }
    }
    return FiniteAlgebra(std::move(t));
}

namespace {

constexpr std::size_t kMaxStack = 64;

class Compiler {
public:
    explicit Compiler(const std::vector<std::string>& variables) : variables_(variables) {}

    Program compile(const Term& t) {
        Program p;
        depth_ = 0;
        emit(t, p);
        return p;
    }

private:
    void push(Program& p, Instr instr) {
        p.code.push_back(instr);
        p.max_stack = std::max(p.max_stack, ++depth_);
        if (depth_ > kMaxStack) throw std::invalid_argument("term is nested too deeply to evaluate");
    }
    void unary(Program& p, Instr::Op op) { p.code.push_back({op, 0}); }
    void binary(Program& p, Instr::Op op) {
        p.code.push_back({op, 0});
        --depth_;
    }

    void emit_one(Program& p) {
        push(p, {Instr::Op::ident, 0});
        push(p, {Instr::Op::ident, 0});
        unary(p, Instr::Op::neg);
        binary(p, Instr::Op::add);
    }

    void emit(const Term& t, Program& p) {
        switch (t.kind()) {
            case TermKind::var: {
                auto it = std::lower_bound(variables_.begin(), variables_.end(), t.name());
                push(p, {Instr::Op::var, static_cast<std::uint8_t>(it - variables_.begin())});
                return;
            }
            case TermKind::ident: push(p, {Instr::Op::ident, 0}); return;
            case TermKind::one: emit_one(p); return;
            case TermKind::zero:
                emit_one(p);
                unary(p, Instr::Op::neg);
                return;
            case TermKind::neg:
                emit(t.lhs(), p);
                unary(p, Instr::Op::neg);
                return;
            case TermKind::conv:
                emit(t.lhs(), p);
                unary(p, Instr::Op::conv);
                return;
            case TermKind::add:
                emit(t.lhs(), p);
                emit(t.rhs(), p);
                binary(p, Instr::Op::add);
                return;
            case TermKind::comp:
                emit(t.lhs(), p);
                emit(t.rhs(), p);
                binary(p, Instr::Op::comp);
                return;
            case TermKind::meet:
                // -(-a + -b)
                emit(t.lhs(), p);
                unary(p, Instr::Op::neg);
                emit(t.rhs(), p);
                unary(p, Instr::Op::neg);
                binary(p, Instr::Op::add);
                unary(p, Instr::Op::neg);
                return;
        }
    }

    const std::vector<std::string>& variables_;
    std::size_t depth_ = 0;
};

struct Value {
    bool blocked;
    std::size_t cell;  // blocked cell, or the value when not blocked
    bool at_root = false;  // blocked on the program's final cell
};

Value run(const Program& p, const CellLayout& layout, std::span<const int> cells,
          std::span<const Element> values) {
    std::array<int, kMaxStack> stack;
    std::size_t top = 0;
    auto read = [&](std::size_t cell, int& out) {
        out = cells[cell];
        return out != kUndecided;
    };
    for (std::size_t pc = 0; pc < p.code.size(); ++pc) {
        const Instr& instr = p.code[pc];
        std::size_t cell = 0;
        switch (instr.op) {
            case Instr::Op::var: stack[top++] = static_cast<int>(values[instr.arg]); continue;
            case Instr::Op::ident: cell = layout.ident(); break;
            case Instr::Op::neg: cell = layout.neg(static_cast<Element>(stack[--top])); break;
            case Instr::Op::conv: cell = layout.conv(static_cast<Element>(stack[--top])); break;
            case Instr::Op::add: {
                const int y = stack[--top];
                const int x = stack[--top];
                cell = layout.add(static_cast<Element>(x), static_cast<Element>(y));
                break;
            }
            case Instr::Op::comp: {
                const int y = stack[--top];
                const int x = stack[--top];
                cell = layout.comp(static_cast<Element>(x), static_cast<Element>(y));
                break;
            }
        }
        int v;
        if (!read(cell, v)) return {true, cell, pc + 1 == p.code.size()};
        stack[top++] = v;
    }
    return {false, static_cast<std::size_t>(stack[0])};
}

Partial compare(const Program& lhs, const Program& rhs, const CellLayout& layout,
                std::span<const int> cells, std::span<const Element> values) {
    const Value l = run(lhs, layout, cells, values);
    const Value r = run(rhs, layout, cells, values);
    if (!l.blocked && !r.blocked) return {l.cell == r.cell ? Partial::State::holds : Partial::State::fails, 0};
    if (!l.blocked && r.at_root) return {Partial::State::forced, r.cell, static_cast<int>(l.cell)};
    if (!r.blocked && l.at_root) return {Partial::State::forced, l.cell, static_cast<int>(r.cell)};
    return {Partial::State::blocked, l.blocked ? l.cell : r.cell};
}

}  // namespace

CompiledSentence::CompiledSentence(const Sentence& s) : variables_(free_variables(s)) {
    if (variables_.size() > 255) throw std::invalid_argument("too many variables");
    Compiler compiler(variables_);
    auto comparison = [&](const Atomic& a) {
        if (a.relation == Relation::equals) return Comparison{compiler.compile(a.lhs), compiler.compile(a.rhs)};
        return Comparison{compiler.compile(Term::add(a.lhs, a.rhs)), compiler.compile(a.rhs)};
    };
    if (const auto* atomic = std::get_if<Atomic>(&s)) {
        shape_ = Shape::atomic;
        main_ = comparison(*atomic);
    } else if (const auto* quasi = std::get_if<QuasiEquation>(&s)) {
        shape_ = Shape::quasi;
        for (const auto& a : quasi->antecedents) antecedents_.push_back(comparison(a));
        main_ = comparison(quasi->consequent);
    } else {
        const auto& bi = std::get<Biconditional>(s);
        shape_ = Shape::biconditional;
        antecedents_.push_back(comparison(bi.left));
        main_ = comparison(bi.right);
    }
}

bool CompiledSentence::holds(const CellTables& tables, std::span<const Element> values) const {
    return evaluate(tables.layout(), tables.cells(), values).state == Partial::State::holds;
}

Partial CompiledSentence::evaluate(const CellLayout& layout, std::span<const int> cells,
                                   std::span<const Element> values) const {
    switch (shape_) {
        case Shape::atomic: return compare(main_.lhs, main_.rhs, layout, cells, values);
        case Shape::quasi: {
            std::optional<std::size_t> blocked;
            for (const auto& ante : antecedents_) {
                const Partial p = compare(ante.lhs, ante.rhs, layout, cells, values);
                if (p.state == Partial::State::fails) return {Partial::State::holds, 0};
                if (p.state != Partial::State::holds && !blocked) blocked = p.blocked_cell;
            }
            const Partial consequent = compare(main_.lhs, main_.rhs, layout, cells, values);
            if (consequent.state == Partial::State::holds) return consequent;
            if (blocked) return {Partial::State::blocked, *blocked};
            return consequent;
        }
        case Shape::biconditional: {
            const Partial left = compare(antecedents_[0].lhs, antecedents_[0].rhs, layout, cells, values);
            const Partial right = compare(main_.lhs, main_.rhs, layout, cells, values);
            const bool left_known = left.state == Partial::State::holds || left.state == Partial::State::fails;
            const bool right_known = right.state == Partial::State::holds || right.state == Partial::State::fails;
            if (left_known && right_known)
                return {left.state == right.state ? Partial::State::holds : Partial::State::fails, 0};
            if (left.state == Partial::State::holds && right.state == Partial::State::forced) return right;
            if (right.state == Partial::State::holds && left.state == Partial::State::forced) return left;
            return {Partial::State::blocked, left_known ? right.blocked_cell : left.blocked_cell};
        }
    }
    return {Partial::State::fails, 0};
}

}  // namespace relalg
