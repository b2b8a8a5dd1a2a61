#include <doctest.h>

#include "oracle.hpp"
#include "relalg/axioms.hpp"
#include "relalg/catalog.hpp"

using namespace relalg;
using enum AxiomId;

namespace {

Element el(const FiniteAlgebra& a, const char* name) {
    auto x = a.find_name(name);
    REQUIRE(x.has_value());
    return *x;
}

}  // namespace

TEST_CASE("axiom ids and texts") {
    for (auto id : kAllAxioms) {
        CHECK(parse_axiom_id(axiom_name(id)) == id);
        CHECK(parse_sentence(axiom_text(id)) == axiom_sentence(id));
    }
    CHECK(axiom_text(R3) == "-(-r+s) + -(-r+-s) = r");
    CHECK(axiom_text(R11p) == "(r;s).t = 0 <-> (r^;t).s = 0");
    CHECK(axiom_text(monR) == "r <= s -> t;r <= t;s");
    CHECK(parse_axiom_id("r11P") == R11p);
    CHECK(parse_axiom_id("MONR") == monR);
    CHECK_FALSE(parse_axiom_id("R12").has_value());

    CHECK(parse_axiom_list("R1,R3-R10") == std::vector<AxiomId>{R1, R3, R4, R5, R6, R7, R8, R9, R10});
    CHECK(parse_axiom_list("R8p, R2") == std::vector<AxiomId>{R8p, R2});
    CHECK_THROWS_AS(parse_axiom_list("R1,R12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_axiom_list("R5-R3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_axiom_list("R8p-R10"), std::invalid_argument);
}

TEST_CASE("axiom systems") {
    CHECK(AxiomSystem::tarski().members == std::vector<AxiomId>{R1, R2, R3, R4, R5, R6, R7, R8, R9, R10});
    CHECK(AxiomSystem::r().members == std::vector<AxiomId>{R1, R2, R3, R4, R5, R6, R8p, R9, R10});
    CHECK(AxiomSystem::s().members == std::vector<AxiomId>{R1, R2, R3, R4, R5, R6, R8, R8p, R10});
    CHECK(AxiomSystem::named("R").has_value());
    CHECK_FALSE(AxiomSystem::named("nonsense").has_value());
    CHECK(AxiomSystem::tarski().without(R7).size() == 9);
}

TEST_CASE("status vectors") {
    const FiniteAlgebra a9 = build("a9");
    const StatusVector v = status_vector(a9, AxiomSystem::tarski());
    CHECK(v.failing() == std::vector<AxiomId>{R9});
    CHECK(v.at(R9).witness == Assignment{{"r", el(a9, "{0}")}, {"s", el(a9, "{1}")}});
    CHECK_FALSE(holds(a9, axiom_sentence(R9), {{"r", el(a9, "{0}")}, {"s", el(a9, "{2}")}}));

    const FiniteAlgebra b9 = build("b9");
    const StatusVector vr = status_vector(b9, AxiomSystem::r());
    CHECK(vr.failing() == std::vector<AxiomId>{R9});
    CHECK(vr.at(R9).witness == Assignment{{"r", el(b9, "1'")}, {"s", el(b9, "a")}});

    CHECK(status_vector(build("m3"), AxiomSystem::tarski()).failing().empty());
}

TEST_CASE("library and oracle agree on every catalog model") {
    std::vector<AxiomId> ids{R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R8p};
    for (const auto& e : list_models()) {
        const FiniteAlgebra a = build(e.id);
        for (auto id : ids) CHECK_MESSAGE(satisfies(a, id) == oracle::axiom_holds(a, id), e.id, " ", axiom_name(id));
    }
}

TEST_CASE("independence models") {
    const std::string a7 = ModelId::defaults(ModelKind::a7).to_string();
    CHECK(is_independence_model(build(a7), AxiomSystem::tarski(), R7));
    CHECK(is_independence_model(build(a7), AxiomSystem::s(), R8p));
    CHECK_FALSE(is_independence_model(build("a9"), AxiomSystem::r(), R9));
    CHECK_THROWS_AS(is_independence_model(build("a9"), AxiomSystem::r(), R7), std::invalid_argument);
}

TEST_CASE("atom form of R11") {
    CHECK_FALSE(atom_form_r11(build("a4")).has_value());
    CHECK_FALSE(atom_form_r11(build("z3c")).has_value());
    CHECK_FALSE(atom_form_r11(build("a10[k=1]")).has_value());
    CHECK_THROWS_AS(atom_form_r11(build("a2")), AlgebraError);
    // b9 breaks R9 without breaking the atom condition for R11.
    CHECK_FALSE(atom_form_r11(build("b9")).has_value());
}

TEST_CASE("semantic equivalence") {
    const std::vector<AxiomId> hyp{R1, R2, R3, R6, R8p};
    const auto m3 = semantic_equivalence(build("m3"), hyp, R10, R11p);
    CHECK(m3.verdict == Equivalence::equivalent);
    CHECK(m3.first_holds);
    CHECK(m3.second_holds);

    const auto a10 = semantic_equivalence(build("a10[k=1]"), hyp, R10, R11p);
    CHECK(a10.verdict == Equivalence::equivalent);
    CHECK_FALSE(a10.first_holds);
    CHECK_FALSE(a10.second_holds);

    const std::vector<AxiomId> hyp6{R6, R7, R9};
    CHECK(semantic_equivalence(build("a6[base=m3]"), hyp6, R8, R8p).verdict == Equivalence::not_applicable);
}

TEST_CASE("right identities") {
    const FiniteAlgebra b5 = build("b5[base=m3,ident=0]");
    const auto e = exists_right_identity(b5);
    REQUIRE(e.has_value());
    CHECK(b5.name(*e) == "1'");
    CHECK_FALSE(satisfies(b5, R5));
    CHECK_FALSE(exists_right_identity(build("a5[k=1,ident=1]")).has_value());
    CHECK_FALSE(exists_right_identity(build("a5[k=2,ident=0]")).has_value());
    const FiniteAlgebra d = build("d");
    CHECK(exists_right_identity(d) == d.ident());
}

TEST_CASE("lemmas over the catalog") {
    for (const auto& lemma : semantic_lemmas()) {
        for (const auto& e : list_models()) {
            const LemmaOutcome o = check_lemma(build(e.id), lemma);
            CHECK_MESSAGE(!o.violated, lemma.id, " on ", e.id);
        }
    }
    const auto& lemmas = semantic_lemmas();
    auto by_id = [&](const std::string& id) {
        return *std::find_if(lemmas.begin(), lemmas.end(), [&](const SemanticLemma& l) { return l.id == id; });
    };
    CHECK(check_lemma(build("m3"), by_id("system-r")).applicable);
    CHECK_FALSE(check_lemma(build("b9"), by_id("system-r")).applicable);
}
