#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "relalg/catalog.hpp"
#include "relalg/search.hpp"

using namespace relalg;
using enum AxiomId;

namespace {

std::set<std::string> encodings(const SearchResult& r) {
    std::set<std::string> out;
    for (const auto& m : r.models) out.insert(encode_tables(m));
    return out;
}

bool contains_iso(const SearchResult& r, const FiniteAlgebra& a) {
    return std::any_of(r.models.begin(), r.models.end(),
                       [&](const FiniteAlgebra& m) { return find_isomorphism(m, a).has_value(); });
}

const AxiomSystem kTarski = AxiomSystem::tarski();

}  // namespace

TEST_CASE("small searches") {
    CHECK(search(SearchSpec::from_axioms(1, {}, {}, false)).labeled_count == 1);
    CHECK(search(SearchSpec::from_axioms(2, kTarski.without(R2), {R2}, false)).labeled_count == 0);

    const SearchResult r2 = search(SearchSpec::from_axioms(3, kTarski.without(R2), {R2}, true));
    CHECK(r2.exhaustive);
    CHECK(r2.iso_class_count == 1);
    CHECK(r2.labeled_count == 6);
    CHECK(contains_iso(r2, build("a2")));

    const SearchResult labeled = search(SearchSpec::from_axioms(3, kTarski.without(R2), {R2}, false));
    CHECK(labeled.models.size() == 6);
    for (const auto& m : labeled.models) CHECK(find_isomorphism(m, build("a2")).has_value());
}

TEST_CASE("independence searches at size 4") {
    CHECK(boolean_guided_search(SearchSpec::from_axioms(4, kTarski.without(R4), {R4}, true)).labeled_count == 0);
    CHECK(search(SearchSpec::from_axioms(2, kTarski.without(R7), {R7}, true)).labeled_count == 0);

    const SearchResult r7 = boolean_guided_search(SearchSpec::from_axioms(4, kTarski.without(R7), {R7}, true));
    CHECK(r7.iso_class_count >= 1);
    CHECK(contains_iso(r7, build("a7")));

    const AxiomSystem r = AxiomSystem::r();
    CHECK(boolean_guided_search(SearchSpec::from_axioms(4, r.without(R9), {R9}, true)).labeled_count == 0);
}

TEST_CASE("search agrees with the naive enumerator at size 2") {
    const std::vector<std::pair<std::vector<AxiomId>, std::vector<AxiomId>>> specs = {
        {{}, {}},
        {kTarski.members, {}},
        {{R1, R2, R3}, {R5}},
        {{R4, R6}, {R7}},
        {{R8p, R10}, {R8}},
    };
    for (const auto& [hold, fail] : specs) {
        const auto expected = oracle::naive_size2(hold, fail);
        const SearchResult r = search(SearchSpec::from_axioms(2, hold, fail, false));
        CHECK(r.labeled_count == expected.size());
        CHECK(encodings(r) == expected);

        SearchSpec plain = SearchSpec::from_axioms(2, hold, fail, false);
        plain.propagate = false;
        CHECK(encodings(search(plain)) == expected);
    }
}

TEST_CASE("isomorphism classes are counted consistently") {
    const SearchResult iso = search(SearchSpec::from_axioms(2, {}, {}, true));
    const SearchResult all = search(SearchSpec::from_axioms(2, {}, {}, false));
    CHECK(iso.labeled_count == 8192);
    CHECK(all.labeled_count == 8192);
    CHECK(iso.models.size() == iso.iso_class_count);
    std::set<std::string> forms;
    for (const auto& m : all.models) forms.insert(canonical_form(m));
    CHECK(forms.size() == iso.iso_class_count);
}

TEST_CASE("Boolean-guided search matches the generic search") {
    for (std::size_t n : {1, 2, 4}) {
        const SearchSpec spec = SearchSpec::from_axioms(n, kTarski.members, {}, true);
        const SearchResult generic = search(spec);
        const SearchResult guided = boolean_guided_search(spec);
        CHECK(encodings(generic) == encodings(guided));
        CHECK(generic.labeled_count == guided.labeled_count);
    }
    const SearchSpec labeled = SearchSpec::from_axioms(2, kTarski.without(R7), {}, false);
    CHECK(encodings(search(labeled)) == encodings(boolean_guided_search(labeled)));

    CHECK(boolean_guided_search(SearchSpec::from_axioms(3, kTarski.members, {}, true)).labeled_count == 0);
    CHECK_THROWS_AS(boolean_guided_search(SearchSpec::from_axioms(2, {R1, R2}, {}, true)), SearchError);
}

TEST_CASE("additivity shortcuts do not change results") {
    // The same distributive laws written differently are not recognized, so
    // no rows or columns are generated from them.
    const Sentence r8 = parse_sentence("(s+r);t = s;t + r;t");
    const Sentence r9 = parse_sentence("(s+r)^ = s^ + r^");
    SearchSpec fast = SearchSpec::from_axioms(4, kTarski.members, {}, true);
    SearchSpec slow = SearchSpec::from_axioms(4, {R1, R2, R3, R4, R5, R6, R7, R10}, {}, true);
    slow.must_hold.push_back(r8);
    slow.must_hold.push_back(r9);
    CHECK(encodings(boolean_guided_search(fast)) == encodings(boolean_guided_search(slow)));
}

TEST_CASE("parallel search is deterministic") {
    SearchSpec spec = SearchSpec::from_axioms(4, kTarski.without(R7), {R7}, false);
    const SearchResult one = boolean_guided_search(spec);
    spec.threads = 4;
    const SearchResult four = boolean_guided_search(spec);
    CHECK(encodings(one) == encodings(four));
    CHECK(one.labeled_count == four.labeled_count);

    SearchSpec generic = SearchSpec::from_axioms(3, kTarski.without(R2), {R2}, true);
    generic.threads = 3;
    CHECK(search(generic).iso_class_count == 1);
}

TEST_CASE("limits stop the search") {
    SearchSpec spec = SearchSpec::from_axioms(3, {}, {}, false);
    spec.node_limit = 1000;
    const SearchResult r = search(spec);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.nodes_explored <= 1100);

    SearchSpec timed = SearchSpec::from_axioms(4, {R1, R2, R3}, {}, false);
    timed.time_limit = std::chrono::milliseconds(50);
    CHECK_FALSE(boolean_guided_search(timed).exhaustive);

    CHECK_THROWS_AS(search(SearchSpec::from_axioms(9, {}, {}, false)), SearchError);
    CHECK_THROWS_AS(search(SearchSpec::from_axioms(0, {}, {}, false)), SearchError);
}

TEST_CASE("minimality") {
    const MinimalityResult r4 = verify_minimality(R4, kTarski, 8);
    CHECK(r4.passed());
    std::vector<std::size_t> searched;
    for (const auto& s : r4.smaller)
        if (s.searched) searched.push_back(s.size);
    CHECK(searched == std::vector<std::size_t>{1, 2, 4});
    CHECK(r4.certificate == "a4");

    const MinimalityResult r9 = verify_minimality(R9, kTarski, 8);
    CHECK(r9.passed());

    const MinimalityResult r2 = verify_minimality(R2, kTarski, 3);
    CHECK(r2.passed());
    REQUIRE(r2.smaller.size() == 2);
    CHECK(r2.smaller[0].method == "generic");

    CHECK(verify_minimality(R9, AxiomSystem::r(), 8).certificate == "b9");
    // A claimed size that is too large is refuted by the smaller model.
    CHECK_FALSE(verify_minimality(R7, kTarski, 8).passed());
}

TEST_CASE("size-8 independence models for R9 within Tarski's axioms") {
    const SearchResult r = boolean_guided_search(SearchSpec::from_axioms(8, kTarski.without(R9), {R9}, true));
    CHECK(r.exhaustive);
    CHECK(r.iso_class_count == 1);
    CHECK(contains_iso(r, build("a9")));
    CHECK(r.labeled_count * automorphism_count(build("a9")) == 40320);
    for (const auto& m : r.models) CHECK(oracle::failing(m, kTarski.members) == std::vector<AxiomId>{R9});
}
