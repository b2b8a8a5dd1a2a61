#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "relalg/axioms.hpp"
#include "relalg/catalog.hpp"
#include "relalg/compiled.hpp"
#include "relalg/term.hpp"

using namespace relalg;

namespace {

using Rng = std::mt19937;

Term random_term(Rng& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 10);
    static const char* vars[] = {"r", "s", "t"};
    switch (pick(rng)) {
        case 0: return Term::var(vars[rng() % 3]);
        case 1: return Term::ident();
        case 2: return Term::var(vars[rng() % 3]);
        case 3: return rng() % 2 ? Term::zero() : Term::one();
        case 4: return Term::neg(random_term(rng, depth - 1));
        case 5: return Term::conv(random_term(rng, depth - 1));
        case 6:
        case 7: return Term::add(random_term(rng, depth - 1), random_term(rng, depth - 1));
        case 8: return Term::meet(random_term(rng, depth - 1), random_term(rng, depth - 1));
        default: return Term::comp(random_term(rng, depth - 1), random_term(rng, depth - 1));
    }
}

FiniteAlgebra random_algebra(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<Element> el(0, static_cast<Element>(n - 1));
    AlgebraTables t;
    t.size = n;
    for (std::size_t i = 0; i < n * n; ++i) {
        t.add.push_back(el(rng));
        t.comp.push_back(el(rng));
    }
    for (std::size_t i = 0; i < n; ++i) {
        t.neg.push_back(el(rng));
        t.conv.push_back(el(rng));
    }
    t.ident = el(rng);
    return FiniteAlgebra(std::move(t));
}

Permutation random_permutation(Rng& rng, std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Assignment random_assignment(Rng& rng, const FiniteAlgebra& a) {
    std::uniform_int_distribution<Element> el(0, static_cast<Element>(a.size() - 1));
    return {{"r", el(rng)}, {"s", el(rng)}, {"t", el(rng)}};
}

std::vector<FiniteAlgebra> sample_algebras(Rng& rng) {
    std::vector<FiniteAlgebra> out;
    for (const auto& e : list_models()) out.push_back(build(e.id));
    for (int i = 0; i < 20; ++i) out.push_back(random_algebra(rng, 1 + rng() % 5));
    return out;
}

}  // namespace

TEST_CASE("printing then parsing returns the same term") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Term t = random_term(rng, 5);
        const std::string text = to_string(t);
        CHECK_MESSAGE(parse_term(text) == t, text);
        CHECK(to_string(parse_term(text)) == text);
    }
}

TEST_CASE("sugar agrees with its expansion") {
    Rng rng(11);
    const Term one = parse_term("1' + -1'");
    const Term zero = parse_term("-(1' + -1')");
    for (const auto& a : sample_algebras(rng)) {
        CHECK(eval_term(a, Term::one(), {}) == eval_term(a, one, {}));
        CHECK(eval_term(a, Term::zero(), {}) == eval_term(a, zero, {}));
        for (int i = 0; i < 20; ++i) {
            const Assignment sigma = random_assignment(rng, a);
            CHECK(eval_term(a, parse_term("r.s"), sigma) == eval_term(a, parse_term("-(-r + -s)"), sigma));
            CHECK(eval_term(a, parse_term("r.s"), sigma) == meet(a, sigma.at("r"), sigma.at("s")));
        }
    }
}

TEST_CASE("inclusion agrees with its expansion") {
    Rng rng(13);
    const Sentence inc = parse_sentence("r;s <= t");
    const Sentence eq = parse_sentence("r;s + t = t");
    for (const auto& a : sample_algebras(rng)) {
        for (int i = 0; i < 20; ++i) {
            const Assignment sigma = random_assignment(rng, a);
            CHECK(holds(a, inc, sigma) == holds(a, eq, sigma));
            CHECK(holds(a, inc, sigma) == leq(a, a.comp(sigma.at("r"), sigma.at("s")), sigma.at("t")));
        }
    }
}

TEST_CASE("compiled evaluation agrees with the tree walk") {
    Rng rng(17);
    std::vector<Sentence> sentences;
    for (auto id : kAllAxioms) sentences.push_back(axiom_sentence(id));
    for (int i = 0; i < 30; ++i) sentences.push_back(Atomic{random_term(rng, 4), Relation::equals, random_term(rng, 4)});
    for (const auto& a : sample_algebras(rng)) {
        const CellTables tables(a);
        for (const auto& s : sentences) {
            const CompiledSentence c(s);
            for (int i = 0; i < 10; ++i) {
                const Assignment sigma = random_assignment(rng, a);
                std::vector<Element> values;
                for (const auto& v : c.variables()) values.push_back(sigma.at(v));
                CHECK(c.holds(tables, values) == holds(a, s, sigma));
            }
        }
    }
}

TEST_CASE("canonical forms are invariant under relabeling") {
    Rng rng(19);
    for (const auto& a : sample_algebras(rng)) {
        const std::string form = canonical_form(a);
        for (int i = 0; i < 5; ++i) {
            const FiniteAlgebra b = relabel(a, random_permutation(rng, a.size()));
            CHECK(canonical_form(b) == form);
            CHECK(canonical_representative(b) == canonical_representative(a));
        }
    }
}

TEST_CASE("isomorphism is symmetric and composes") {
    Rng rng(23);
    for (const auto& a : sample_algebras(rng)) {
        const FiniteAlgebra b = relabel(a, random_permutation(rng, a.size()));
        const FiniteAlgebra c = relabel(b, random_permutation(rng, a.size()));
        const auto ab = find_isomorphism(a, b);
        const auto ba = find_isomorphism(b, a);
        REQUIRE(ab.has_value());
        REQUIRE(ba.has_value());
        CHECK(relabel(a, *ab) == b);
        CHECK(relabel(b, *ba) == a);
        CHECK(find_isomorphism(a, c).has_value());
        CHECK(automorphism_count(a) == automorphism_count(b));
    }
}

TEST_CASE("status vectors are invariant under relabeling") {
    Rng rng(29);
    for (const auto& a : sample_algebras(rng)) {
        if (a.size() > 6) continue;
        const FiniteAlgebra b = relabel(a, random_permutation(rng, a.size()));
        for (auto id : kAllAxioms) CHECK(satisfies(a, id) == satisfies(b, id));
    }
}
