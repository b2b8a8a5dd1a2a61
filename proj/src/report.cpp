#include "relalg/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "relalg/axioms.hpp"
#include "relalg/catalog.hpp"
#include "relalg/golden.hpp"
#include "relalg/search.hpp"

namespace relalg {

std::string_view to_string(ClaimKind kind) {
    switch (kind) {
        case ClaimKind::independence: return "independence";
        case ClaimKind::minimality: return "minimality";
        case ClaimKind::uniqueness: return "uniqueness";
        case ClaimKind::lemma_semantic: return "lemma-semantic";
        case ClaimKind::table_golden: return "table-golden";
        case ClaimKind::extra_fact: return "extra-fact";
    }
    return "unknown";
}

std::string_view to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::skipped_long_running: return "skipped-long-running";
    }
    return "unknown";
}

bool Report::passed() const { return count(ClaimStatus::fail) == 0; }

std::size_t Report::count(ClaimStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.status == status; }));
}

namespace {

using Clock = std::chrono::steady_clock;
using enum AxiomId;

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string join(const std::vector<std::string>& items, std::string_view sep = ", ") {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string axiom_list(const std::vector<AxiomId>& ids) {
    std::vector<std::string> names;
    for (auto id : ids) names.emplace_back(axiom_name(id));
    return names.empty() ? "none" : join(names);
}

std::string format_assignment(const FiniteAlgebra& a, const Assignment& sigma) {
    std::vector<std::string> parts;
    for (const auto& [var, value] : sigma) parts.push_back(var + "=" + a.name(value));
    return "(" + join(parts) + ")";
}

class Suite {
public:
    explicit Suite(const VerificationOptions& options) : options_(options) {
        if (!options_.model_source) options_.model_source = [](std::string_view id) { return build(id); };
    }

    Report run() {
        const auto start = Clock::now();
        golden();
        tarski_suite();
        system_suite(AxiomSystem::r(), "s14", "r");
        system_suite(AxiomSystem::s(), "s16", "s");
        extra_facts();
        lemmas();
        minimality();
        uniqueness();
        report_.seconds = elapsed(start);
        return std::move(report_);
    }

private:
    struct Pending {
        Claim claim;
        Clock::time_point start = Clock::now();
    };

    Pending open(std::string id, std::string description, ClaimKind kind) {
        Pending p;
        p.claim.id = std::move(id);
        p.claim.description = std::move(description);
        p.claim.kind = kind;
        return p;
    }

    void close(Pending& p, bool ok) {
        p.claim.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
        p.claim.seconds = elapsed(p.start);
        report_.claims.push_back(std::move(p.claim));
    }

    void skip(Pending& p, std::string reason) {
        p.claim.status = ClaimStatus::skipped_long_running;
        p.claim.evidence.emplace_back("reason", std::move(reason));
        report_.claims.push_back(std::move(p.claim));
    }

    /// Runs body and turns an exception into a failed claim.
    template <typename Body>
    void guarded(Pending& p, Body body) {
        bool ok = false;
        try {
            ok = body(p.claim);
        } catch (const std::exception& e) {
            p.claim.evidence.emplace_back("error", e.what());
        }
        close(p, ok);
    }

    FiniteAlgebra model(std::string_view id) { return options_.model_source(id); }

    static std::string golden_section(int table) {
        if (table <= 5) return "s3";
        if (table == 6) return "s6";
        if (table <= 8) return "s7";
        if (table == 9) return "s11";
        if (table == 10) return "s12";
        return "s14";
    }

    void golden() {
        for (const auto& g : golden_tables()) {
            std::string name = "table" + std::to_string(g.number);
            if (!g.part.empty()) name += "-" + g.part;
            name += "-" + g.model;
            Pending p = open("paper." + golden_section(g.number) + "." + name,
                             g.label() + ": " + std::string(table_name(g.table)) + " table of " + g.model,
                             ClaimKind::table_golden);
            guarded(p, [&](Claim& c) {
                const auto mismatches =
                    g.model == "mckinsey" ? compare_golden(g) : compare_golden(g, model(g.model));
                std::size_t cells = 0;
                for (const auto& row : g.cells) cells += row.size();
                c.evidence.emplace_back("cells", std::to_string(cells));
                c.evidence.emplace_back("mismatches", std::to_string(mismatches.size()));
                for (const auto& m : mismatches) {
                    std::string where = m.column.empty() ? m.row : m.row + ", " + m.column;
                    c.evidence.emplace_back("cell (" + where + ")",
                                            "expected " + m.expected + ", got " + (m.actual.empty() ? "undefined" : m.actual));
                }
                return mismatches.empty();
            });
        }
        cell_diff("s11", "a9", "z3c", "a9", {{TableKind::comp, 6}, {TableKind::conv, 2}});
        cell_diff("s14", "b9", "d", "b9", {{TableKind::comp, 4}, {TableKind::conv, 2}});
        cell_diff("s12", "b10", "m3", "b10", {{TableKind::comp, 7}});
        cell_diff("s10", "a8", "bra[k=1]", "a8", {{TableKind::comp, 1}});
    }

    void cell_diff(const std::string& section, const std::string& name, const std::string& base_id,
                   const std::string& model_id, const std::vector<std::pair<TableKind, std::size_t>>& expected) {
        std::vector<std::string> parts;
        for (const auto& [table, n] : expected) parts.push_back(std::to_string(n) + " " + std::string(table_name(table)));
        Pending p = open("paper." + section + "." + name + "-cell-diff",
                         model_id + " differs from " + base_id + " in exactly " + join(parts, " and ") + " cells",
                         ClaimKind::table_golden);
        guarded(p, [&](Claim& c) {
            const FiniteAlgebra base = model(base_id);
            const FiniteAlgebra changed = model(model_id);
            const auto diffs = diff_tables(base, changed);
            bool ok = true;
            std::size_t accounted = 0;
            for (const auto& [table, n] : expected) {
                std::vector<std::string> cells;
                for (const auto& d : diffs) {
                    if (d.table != table) continue;
                    const bool binary = table == TableKind::add || table == TableKind::comp;
                    cells.push_back(binary ? "(" + changed.name(d.x) + ", " + changed.name(d.y) + ")" : changed.name(d.x));
                }
                accounted += cells.size();
                ok = ok && cells.size() == n;
                c.evidence.emplace_back(std::string(table_name(table)) + " cells", join(cells, " "));
            }
            c.evidence.emplace_back("total", std::to_string(diffs.size()));
            return ok && accounted == diffs.size();
        });
    }

    static std::string model_section(AxiomId target) {
        switch (target) {
            case R1: return "s5";
            case R2: return "s6";
            case R3: return "r3";
            case R4: return "s7";
            case R5: return "s8";
            case R6: return "r6";
            case R7: return "s9";
            case R8: return "s10";
            case R9: return "s11";
            default: return "s12";
        }
    }

    static std::string lower(std::string_view s) {
        std::string out(s);
        for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return out;
    }

    static std::string short_model(const std::string& id) { return id.substr(0, id.find('[')); }

    void independence(const std::string& claim_id, const std::string& model_id, const AxiomSystem& sys,
                      AxiomId target) {
        Pending p = open(claim_id,
                         model_id + " fails " + std::string(axiom_name(target)) + " and satisfies the rest of " +
                             (sys.name == "tarski" ? std::string("Tarski's axioms") : "system " + sys.name),
                         ClaimKind::independence);
        guarded(p, [&](Claim& c) {
            const FiniteAlgebra a = model(model_id);
            const StatusVector v = status_vector(a, sys);
            const auto failing = v.failing();
            c.evidence.emplace_back("model", model_id);
            c.evidence.emplace_back("failing", axiom_list(failing));
            const auto& st = v.at(target);
            if (st.witness) c.evidence.emplace_back("witness", format_assignment(a, *st.witness));
            for (auto id : failing) {
                if (id == target) continue;
                c.evidence.emplace_back(std::string(axiom_name(id)) + " witness",
                                        format_assignment(a, *v.at(id).witness));
            }
            return failing == std::vector<AxiomId>{target};
        });
    }

    void tarski_suite() {
        const AxiomSystem t = AxiomSystem::tarski();
        for (auto target : t.members) {
            const std::string id = independence_model_id(target, t);
            independence("paper." + model_section(target) + "." + short_model(id) + "-independence", id, t, target);
        }
    }

    void system_suite(const AxiomSystem& sys, const std::string& section, const std::string& prefix) {
        for (auto target : sys.members) {
            std::vector<std::string> ids{independence_model_id(target, sys)};
            // Both A8 and A7 serve for R8p within r.
            if (target == R8p && sys.name == "r") ids = {ModelId::defaults(ModelKind::a8).to_string(),
                                                         ModelId::defaults(ModelKind::a7).to_string()};
            for (const auto& id : ids)
                independence("paper." + section + "." + prefix + "-" + short_model(id) + "-" + lower(axiom_name(target)),
                             id, sys, target);
        }
    }

    /// The axiom fails in the model at the given named assignment.
    void witness(const std::string& claim_id, const std::string& model_id, AxiomId axiom,
                 const std::vector<std::pair<std::string, std::string>>& binding) {
        std::vector<std::string> shown;
        for (const auto& [var, value] : binding) shown.push_back(var + "=" + value);
        Pending p = open(claim_id,
                         std::string(axiom_name(axiom)) + " fails in " + model_id + " at (" + join(shown) + ")",
                         ClaimKind::extra_fact);
        guarded(p, [&](Claim& c) {
            const FiniteAlgebra a = model(model_id);
            Assignment sigma;
            for (const auto& [var, value] : binding) {
                auto x = a.find_name(value);
                // In the two-element algebras 1' coincides with the unit 1.
                if (!x && value == "1'") x = a.ident();
                if (!x) throw AlgebraError("no element named " + value + " in " + model_id);
                sigma[var] = *x;
            }
            const Sentence& s = axiom_sentence(axiom);
            c.evidence.emplace_back("axiom", std::string(axiom_text(axiom)));
            c.evidence.emplace_back("assignment", format_assignment(a, sigma));
            if (const auto* atomic = std::get_if<Atomic>(&s)) {
                c.evidence.emplace_back("lhs", a.name(eval_term(a, atomic->lhs, sigma)));
                c.evidence.emplace_back("rhs", a.name(eval_term(a, atomic->rhs, sigma)));
            }
            return !holds(a, s, sigma);
        });
    }

    void extra_facts() {
        const AxiomSystem t = AxiomSystem::tarski();
        const std::vector<std::pair<std::string, std::string>> relation_algebras = {
            {"m3", "m3"},        {"z3c", "z3c"},      {"d", "d"},          {"bra[k=1]", "bra1"},
            {"bra[k=2]", "bra2"}, {"zc[n=2]", "zc2"}, {"zc[n=4]", "zc4"},
        };
        for (const auto& [id, slug] : relation_algebras) {
            Pending p = open("paper.s3." + slug + "-relation-algebra", id + " satisfies all of Tarski's axioms",
                             ClaimKind::extra_fact);
            guarded(p, [&](Claim& c) {
                const auto failing = status_vector(model(id), t).failing();
                c.evidence.emplace_back("failing", axiom_list(failing));
                return failing.empty();
            });
        }

        witness("paper.s6.a2-r2-witness", "a2", R2, {{"r", "1'"}, {"s", "1'"}, {"t", "1"}});
        witness("paper.s7.a4-r4-witness", "a4", R4, {{"r", "{1}"}, {"s", "{2}"}, {"t", "{2}"}});
        witness("paper.s10.a8-r8-witness", "a8", R8, {{"r", "0"}, {"s", "1'"}, {"t", "0"}});
        witness("paper.s11.a9-r9-witness", "a9", R9, {{"r", "{0}"}, {"s", "{2}"}});
        witness("paper.s11.a9-r8p-witness", "a9", R8p, {{"r", "{1}"}, {"s", "{0}"}, {"t", "{2}"}});
        witness("paper.s12.b10-r10-witness", "b10", R10, {{"r", "0'"}, {"s", "0'"}});
        witness("paper.s14.b9-r9-witness", "b9", R9, {{"r", "1'"}, {"s", "a"}});
        witness("paper.s14.b9-r8-witness", "b9", R8, {{"r", "1'"}, {"s", "a"}, {"t", "b"}});

        const std::string b5 = ModelId::defaults(ModelKind::b5).to_string();
        independence("paper.s8.b5-independence", b5, t, R5);
        independence("paper.s12.b10-independence", "b10", t, R10);
        {
            Pending p = open("paper.s8.b5-right-identity", b5 + " has a right identity for ; although R5 fails",
                             ClaimKind::extra_fact);
            guarded(p, [&](Claim& c) {
                const FiniteAlgebra a = model(b5);
                const auto e = exists_right_identity(a);
                c.evidence.emplace_back("right identity", e ? a.name(*e) : "none");
                c.evidence.emplace_back("1'", a.name(a.ident()));
                return e.has_value() && !satisfies(a, R5);
            });
        }
        {
            const std::string a5 = ModelId::defaults(ModelKind::a5).to_string();
            Pending p = open("paper.s8.a5-no-right-identity", a5 + " has no right identity for ;",
                             ClaimKind::extra_fact);
            guarded(p, [&](Claim& c) {
                const FiniteAlgebra a = model(a5);
                const auto e = exists_right_identity(a);
                c.evidence.emplace_back("right identity", e ? a.name(*e) : "none");
                return !e.has_value();
            });
        }
        {
            Pending p = open("paper.s13.a9-not-r-independence",
                             "a9 is not an independence model for R9 within system r", ClaimKind::extra_fact);
            guarded(p, [&](Claim& c) {
                const FiniteAlgebra a = model("a9");
                c.evidence.emplace_back("failing in r", axiom_list(status_vector(a, AxiomSystem::r()).failing()));
                return !is_independence_model(a, AxiomSystem::r(), R9);
            });
        }
    }

    /// Catalog models and search results the lemmas are checked against.
    std::vector<std::pair<std::string, FiniteAlgebra>> lemma_population() {
        std::vector<std::pair<std::string, FiniteAlgebra>> out;
        std::vector<std::string> ids;
        for (const auto& e : list_models()) ids.push_back(e.id);
        for (const char* extra : {"bra[k=2]", "bra[k=3]", "zc[n=2]", "zc[n=4]", "a1[k=2]", "a3[k=2]",
                                  "a5[k=2,ident=0]", "a5[k=2,ident=3]", "a7[k=3,ident=1]", "a7[k=2,ident=2]",
                                  "a10[k=2]", "b5[base=d,ident=0]", "b5[base=z3c,ident=0]", "a6[base=d]",
                                  "a6[base=z3c]", "a8[base=m3]", "a8[base=d]"})
            ids.emplace_back(extra);
        for (const auto& id : ids) out.emplace_back(id, model(id));

        auto add_search = [&](const std::string& label, const SearchSpec& spec, bool boolean) {
            const SearchResult r = boolean ? boolean_guided_search(spec) : search(spec);
            for (const auto& m : r.models) out.emplace_back(label, m);
        };
        add_search("size 1", SearchSpec::from_axioms(1, {}, {}, true), false);
        add_search("size 2", SearchSpec::from_axioms(2, {}, {}, true), false);
        add_search("size 3 R2", SearchSpec::from_axioms(3, AxiomSystem::tarski().without(R2), {R2}, true), false);
        const AxiomSystem t = AxiomSystem::tarski();
        add_search("size 4 tarski", SearchSpec::from_axioms(4, t.members, {}, true), true);
        add_search("size 4 R7", SearchSpec::from_axioms(4, t.without(R7), {R7}, true), true);
        add_search("size 4 r", SearchSpec::from_axioms(4, AxiomSystem::r().members, {}, true), true);
        add_search("size 4 s", SearchSpec::from_axioms(4, AxiomSystem::s().members, {}, true), true);
        return out;
    }

    void lemmas() {
        const auto population = lemma_population();
        for (const auto& lemma : semantic_lemmas()) {
            Pending p = open("paper.s13.lemma-" + lemma.id, lemma.description, ClaimKind::lemma_semantic);
            if (lemma.id == "converse-additivity" || lemma.id == "system-s") p.claim.id = "paper.s15.lemma-" + lemma.id;
            guarded(p, [&](Claim& c) {
                std::size_t applicable = 0;
                std::vector<std::string> violators;
                for (const auto& [label, a] : population) {
                    const LemmaOutcome o = check_lemma(a, lemma);
                    applicable += o.applicable;
                    if (o.violated) violators.push_back(label);
                }
                c.evidence.emplace_back("population", std::to_string(population.size()));
                c.evidence.emplace_back("satisfying hypotheses", std::to_string(applicable));
                c.evidence.emplace_back("violations", violators.empty() ? "0" : join(violators));
                const bool searched_ok = counterexample_searches(lemma, c);
                return violators.empty() && searched_ok;
            });
        }
    }

    /// Searches sizes 1-4 for an algebra satisfying the hypotheses and
    /// breaking the conclusion.  Searches hitting the node cap are reported
    /// as bounded rather than exhaustive.
    bool counterexample_searches(const SemanticLemma& lemma, Claim& c) {
        std::vector<std::pair<std::vector<AxiomId>, AxiomId>> runs;
        if (lemma.equivalence) {
            for (std::size_t i = 0; i < 2; ++i) {
                auto hold = lemma.hypotheses;
                hold.push_back(lemma.conclusions[i]);
                runs.emplace_back(hold, lemma.conclusions[1 - i]);
            }
        } else {
            for (auto concl : lemma.conclusions) runs.emplace_back(lemma.hypotheses, concl);
        }
        bool ok = true;
        for (const auto& [hold, fail] : runs) {
            const auto in_hold = [&](AxiomId id) { return std::find(hold.begin(), hold.end(), id) != hold.end(); };
            const bool boolean = in_hold(R1) && in_hold(R2) && in_hold(R3);
            std::vector<std::string> sizes;
            for (std::size_t n = 1; n <= 4; ++n) {
                SearchSpec spec = SearchSpec::from_axioms(n, hold, {fail}, true);
                spec.node_limit = kLemmaNodeLimit;
                spec.threads = options_.threads;
                const SearchResult r = boolean ? boolean_guided_search(spec) : search(spec);
                std::string entry = std::to_string(n) + ": " + std::to_string(r.iso_class_count);
                if (!r.exhaustive) entry += " (bounded, " + std::to_string(r.nodes_explored) + " nodes)";
                sizes.push_back(entry);
                ok = ok && r.iso_class_count == 0;
            }
            c.evidence.emplace_back("counterexamples to " + std::string(axiom_name(fail)) + " by size", join(sizes, "; "));
        }
        return ok;
    }

    static constexpr std::uint64_t kLemmaNodeLimit = 200000;

    void minimality() {
        struct Case {
            AxiomId target;
            AxiomSystem sys;
            std::size_t size;
            std::string section;
        };
        const std::vector<Case> cases = {
            {R2, AxiomSystem::tarski(), 3, "s6"}, {R4, AxiomSystem::tarski(), 8, "s7"},
            {R7, AxiomSystem::tarski(), 4, "s9"}, {R9, AxiomSystem::tarski(), 8, "s11"},
            {R9, AxiomSystem::r(), 8, "s14"},
        };
        for (const auto& cs : cases) {
            const std::string sys_label = cs.sys.name == "tarski" ? "" : cs.sys.name + "-";
            Pending p = open("paper." + cs.section + "." + sys_label + lower(axiom_name(cs.target)) + "-minimality",
                             "no independence model for " + std::string(axiom_name(cs.target)) + " within " +
                                 cs.sys.name + " has fewer than " + std::to_string(cs.size) + " elements",
                             ClaimKind::minimality);
            guarded(p, [&](Claim& c) {
                SearchSpec limits;
                limits.threads = options_.threads;
                const MinimalityResult m = verify_minimality(cs.target, cs.sys, cs.size, limits);
                for (const auto& s : m.smaller) {
                    std::string v = s.method;
                    if (s.searched) {
                        v += ", " + std::to_string(s.models) + " models, " + std::to_string(s.nodes) + " nodes";
                        if (!s.exhaustive) v += ", not exhaustive";
                    }
                    c.evidence.emplace_back("size " + std::to_string(s.size), v);
                }
                c.evidence.emplace_back("certificate", m.certificate + (m.certificate_ok ? " (verified)" : " (rejected)"));
                return m.passed();
            });
        }
    }

    void uniqueness_search(Pending& p, const AxiomSystem& sys, AxiomId target, std::size_t size,
                           const std::string& expected_id, bool expect_unique, bool long_running) {
        guarded(p, [&](Claim& c) {
            SearchSpec spec = SearchSpec::from_axioms(size, sys.without(target), {target}, true);
            spec.threads = options_.threads;
            if (long_running) spec.time_limit = options_.budget;
            const bool boolean = sys.contains(R1) && sys.contains(R2) && sys.contains(R3) && target != R1 &&
                                 target != R2 && target != R3;
            const SearchResult r = boolean ? boolean_guided_search(spec) : search(spec);
            const FiniteAlgebra expected = model(expected_id);
            std::size_t matches = 0;
            for (const auto& m : r.models) matches += find_isomorphism(m, expected).has_value();
            c.evidence.emplace_back("method", boolean ? "boolean" : "generic");
            c.evidence.emplace_back("iso classes", std::to_string(r.iso_class_count));
            c.evidence.emplace_back("labeled models", std::to_string(r.labeled_count));
            c.evidence.emplace_back("nodes", std::to_string(r.nodes_explored));
            c.evidence.emplace_back("exhaustive", r.exhaustive ? "yes" : "no (resource abort)");
            c.evidence.emplace_back("isomorphic to " + expected_id, matches ? "yes" : "no");
            if (!r.exhaustive) return false;
            return matches == 1 && (!expect_unique || r.iso_class_count == 1);
        });
    }

    void uniqueness() {
        {
            Pending p = open("paper.s6.r2-size3-uniqueness",
                             "a2 is the only independence model for R2 with 3 elements, up to isomorphism",
                             ClaimKind::uniqueness);
            uniqueness_search(p, AxiomSystem::tarski(), R2, 3, "a2", true, false);
        }
        {
            Pending p = open("paper.s11.r9-size8-uniqueness",
                             "a9 is the only independence model for R9 with 8 elements, up to isomorphism",
                             ClaimKind::uniqueness);
            if (options_.include_long_running)
                uniqueness_search(p, AxiomSystem::tarski(), R9, 8, "a9", true, true);
            else
                skip(p, "exhaustive size-8 search; run with --long");
        }
        {
            // Only minimality is claimed within r; b9 must be among the models.
            Pending p = open("paper.s14.r-r9-size8-models",
                             "b9 is among the independence models for R9 within system r with 8 elements",
                             ClaimKind::extra_fact);
            if (options_.include_long_running)
                uniqueness_search(p, AxiomSystem::r(), R9, 8, "b9", false, true);
            else
                skip(p, "exhaustive size-8 search; run with --long");
        }
    }

    VerificationOptions options_;
    Report report_;
};

}  // namespace

Report run_verification_suite(const VerificationOptions& options) { return Suite(options).run(); }

Report run_verification_suite(bool include_long_running) {
    VerificationOptions options;
    options.include_long_running = include_long_running;
    return run_verification_suite(options);
}

std::string render_text(const Report& report, bool color) {
    auto paint = [&](std::string_view text, const char* code) {
        return color ? std::string("\x1b[") + code + "m" + std::string(text) + "\x1b[0m" : std::string(text);
    };
    std::ostringstream out;
    out << "relalg " << report.tool_version << " verification report\n\n";
    for (const auto& c : report.claims) {
        std::string tag;
        switch (c.status) {
            case ClaimStatus::pass: tag = paint("PASS", "32"); break;
            case ClaimStatus::fail: tag = paint("FAIL", "31"); break;
            case ClaimStatus::skipped_long_running: tag = paint("SKIP", "33"); break;
        }
        out << tag << "  " << c.id << "  [" << to_string(c.kind) << ", " << std::fixed << std::setprecision(3)
            << c.seconds << " s]\n";
        out << "      " << c.description << "\n";
        for (const auto& [key, value] : c.evidence) out << "      " << key << ": " << value << "\n";
    }
    out << "\n"
        << "overall: " << (report.passed() ? paint("PASS", "32") : paint("FAIL", "31")) << " ("
        << report.count(ClaimStatus::pass) << " passed, " << report.count(ClaimStatus::fail) << " failed, "
        << report.count(ClaimStatus::skipped_long_running) << " skipped) in " << std::fixed << std::setprecision(2)
        << report.seconds << " s\n";
    return out.str();
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json j;
    j["tool_version"] = report.tool_version;
    j["overall"] = report.passed() ? "pass" : "fail";
    j["seconds"] = report.seconds;
    j["summary"] = {{"pass", report.count(ClaimStatus::pass)},
                    {"fail", report.count(ClaimStatus::fail)},
                    {"skipped_long_running", report.count(ClaimStatus::skipped_long_running)}};
    auto claims = nlohmann::ordered_json::array();
    for (const auto& c : report.claims) {
        nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
        for (const auto& [key, value] : c.evidence) evidence[key] = value;
        claims.push_back({{"id", c.id},
                          {"description", c.description},
                          {"kind", to_string(c.kind)},
                          {"status", to_string(c.status)},
                          {"seconds", c.seconds},
                          {"evidence", evidence}});
    }
    j["claims"] = claims;
    return j.dump(2) + "\n";
}

}  // namespace relalg
