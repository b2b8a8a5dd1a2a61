#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>

#include <CLI11.hpp>
#include <json.hpp>

#include "relalg/axioms.hpp"
#include "relalg/catalog.hpp"
#include "relalg/model_io.hpp"
#include "relalg/report.hpp"
#include "relalg/search.hpp"
#include "relalg/term.hpp"

namespace relalg {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A catalog id, or a path to a model file.
FiniteAlgebra load_model(const std::string& ref) {
    const std::filesystem::path path(ref);
    if (path.extension() == ".json" || std::filesystem::is_regular_file(path)) {
        try {
            return load_model_file(path);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    try {
        return build(ref);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

AxiomSystem system_named(const std::string& name) {
    auto sys = AxiomSystem::named(name);
    if (!sys) throw UsageError("unknown axiom system '" + name + "' (expected tarski, r or s)");
    return *sys;
}

std::vector<AxiomId> axioms_from(const std::string& text) {
    if (text.empty()) return {};
    try {
        return parse_axiom_list(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::string format_assignment(const FiniteAlgebra& a, const Assignment& sigma) {
    std::string out;
    for (const auto& [var, value] : sigma) {
        if (!out.empty()) out += ", ";
        out += var + "=" + a.name(value);
    }
    return "(" + out + ")";
}

nlohmann::ordered_json assignment_json(const FiniteAlgebra& a, const Assignment& sigma) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [var, value] : sigma) j[var] = a.name(value);
    return j;
}

/// Element by index or by name.
Element element_ref(const FiniteAlgebra& a, const std::string& text) {
    if (auto x = a.find_name(text)) return *x;
    Element value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || value >= a.size())
        throw UsageError("no element '" + text + "' in a model of size " + std::to_string(a.size()));
    return value;
}

Assignment parse_let(const FiniteAlgebra& a, const std::string& text) {
    Assignment sigma;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("malformed binding '" + item + "' (expected var=IDX)");
        sigma[item.substr(0, eq)] = element_ref(a, item.substr(eq + 1));
        start = comma + 1;
    }
    return sigma;
}

int cmd_list_models(std::ostream& out) {
    const auto models = list_models();
    std::size_t width = 0;
    for (const auto& m : models) width = std::max(width, m.id.size());
    for (const auto& m : models) out << std::left << std::setw(static_cast<int>(width) + 2) << m.id << m.description << "\n";
    return kExitOk;
}

int cmd_show(const std::string& ref, bool json, std::ostream& out) {
    const FiniteAlgebra a = load_model(ref);
    out << render_model(a, json ? RenderFormat::structured : RenderFormat::ascii_table);
    return kExitOk;
}

int cmd_check(const std::string& ref, const std::string& system, bool json, std::ostream& out) {
    const FiniteAlgebra a = load_model(ref);
    const AxiomSystem sys = system_named(system);
    const StatusVector v = status_vector(a, sys);
    if (json) {
        nlohmann::ordered_json j;
        j["model"] = ref;
        j["system"] = sys.name;
        auto entries = nlohmann::ordered_json::array();
        for (const auto& e : v.entries) {
            nlohmann::ordered_json item{{"id", axiom_name(e.id)}, {"holds", e.holds()}};
            if (e.witness) item["witness"] = assignment_json(a, *e.witness);
            entries.push_back(item);
        }
        j["axioms"] = entries;
        auto failing = nlohmann::ordered_json::array();
        for (auto id : v.failing()) failing.push_back(axiom_name(id));
        j["failing"] = failing;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "model " << ref << ", system " << sys.name << "\n";
    for (const auto& e : v.entries) {
        out << std::left << std::setw(6) << axiom_name(e.id);
        if (e.holds())
            out << "holds\n";
        else
            out << "fails at " << format_assignment(a, *e.witness) << "\n";
    }
    return kExitOk;
}

int cmd_eval(const std::string& ref, const std::string& text, const std::string& let, std::ostream& out) {
    const FiniteAlgebra a = load_model(ref);
    Term t = [&] {
        try {
            return parse_term(text);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
    }();
    const Assignment sigma = parse_let(a, let);
    try {
        const Element v = eval_term(a, t, sigma);
        out << a.name(v) << "\n";
    } catch (const EvalError& e) {
        throw UsageError(e.what());
    }
    return kExitOk;
}

int cmd_independence(const std::string& ref, const std::string& target_text, const std::string& system,
                     std::ostream& out) {
    const FiniteAlgebra a = load_model(ref);
    const AxiomSystem sys = system_named(system);
    const auto target = parse_axiom_id(target_text);
    if (!target) throw UsageError("unknown axiom '" + target_text + "'");
    if (!sys.contains(*target))
        throw UsageError(std::string(axiom_name(*target)) + " is not a member of system " + sys.name);
    const StatusVector v = status_vector(a, sys);
    std::string failing;
    for (auto id : v.failing()) failing += (failing.empty() ? "" : ", ") + std::string(axiom_name(id));
    const bool ok = v.failing() == std::vector<AxiomId>{*target};
    out << "failing: " << (failing.empty() ? "none" : failing) << "\n";
    if (const auto& w = v.at(*target).witness) out << axiom_name(*target) << " fails at " << format_assignment(a, *w) << "\n";
    out << ref << (ok ? " is" : " is not") << " an independence model for " << axiom_name(*target) << " within "
        << sys.name << "\n";
    return ok ? kExitOk : kExitClaimFailed;
}

struct SearchArgs {
    std::size_t size = 0;
    std::string hold;
    std::string fail;
    bool iso = false;
    std::optional<std::uint64_t> limit;
    std::optional<double> time_limit;
    bool json = false;
    bool no_propagate = false;
    bool boolean = false;
    unsigned threads = 1;
    std::size_t print = 10;
};

int cmd_search(const SearchArgs& args, std::ostream& out) {
    SearchSpec spec = SearchSpec::from_axioms(args.size, axioms_from(args.hold), axioms_from(args.fail), args.iso);
    spec.node_limit = args.limit;
    if (args.time_limit)
        spec.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*args.time_limit * 1000));
    spec.propagate = !args.no_propagate;
    spec.threads = std::max(1u, args.threads);
    SearchResult r;
    try {
        r = args.boolean ? boolean_guided_search(spec) : search(spec);
    } catch (const SearchError& e) {
        throw UsageError(e.what());
    }
    if (args.json) {
        nlohmann::ordered_json j;
        j["size"] = args.size;
        j["labeled_count"] = r.labeled_count;
        j["iso_class_count"] = r.iso_class_count;
        j["exhaustive"] = r.exhaustive;
        j["nodes_explored"] = r.nodes_explored;
        auto models = nlohmann::ordered_json::array();
        for (const auto& m : r.models) models.push_back(nlohmann::ordered_json::parse(write_model_json(m)));
        j["models"] = models;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "labeled models: " << r.labeled_count << "\n"
        << "isomorphism classes: " << r.iso_class_count << "\n"
        << "exhaustive: " << (r.exhaustive ? "yes" : "no") << "\n"
        << "nodes explored: " << r.nodes_explored << "\n";
    const std::size_t shown = std::min(args.print, r.models.size());
    for (std::size_t i = 0; i < shown; ++i) out << "\nmodel " << i + 1 << "\n" << render_ascii(r.models[i]);
    if (shown < r.models.size()) out << "\n(" << r.models.size() - shown << " more models not shown)\n";
    return kExitOk;
}

int cmd_verify(bool long_running, bool json, std::optional<double> budget, unsigned threads, bool color,
               std::ostream& out) {
    VerificationOptions options;
    options.include_long_running = long_running;
    if (budget) options.budget = std::chrono::milliseconds(static_cast<std::int64_t>(*budget * 1000));
    options.threads = std::max(1u, threads);
    const Report report = run_verification_suite(options);
    out << (json ? render_json(report) : render_text(report, color));
    return report.passed() ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    if (std::getenv("NO_COLOR")) color = false;

    CLI::App app{"Finite relation-algebra toolkit: catalog, axiom checks, model search"};
    app.name("relalg");
    app.require_subcommand(1);

    app.add_subcommand("list-models", "List catalog models with default parameters");

    std::string model_ref;
    bool json = false;
    auto* show = app.add_subcommand("show", "Print the operation tables of a model");
    show->add_option("model", model_ref, "Catalog id or model file")->required();
    show->add_flag("--json", json, "Print the model file format");

    std::string system = "tarski";
    auto* check = app.add_subcommand("check", "Evaluate every axiom of a system");
    check->add_option("model", model_ref, "Catalog id or model file")->required();
    check->add_option("--system", system, "tarski, r or s");
    check->add_flag("--json", json, "Machine-readable output");

    std::string term_text, let;
    auto* eval = app.add_subcommand("eval", "Evaluate a term");
    eval->add_option("model", model_ref, "Catalog id or model file")->required();
    eval->add_option("term", term_text, "Term, e.g. \"r;(s+t)\"")->required();
    eval->add_option("--let", let, "Bindings such as r=1,s=2 (index or element name)");

    std::string target;
    auto* independence = app.add_subcommand("independence", "Test whether a model is an independence model");
    independence->add_option("model", model_ref, "Catalog id or model file")->required();
    independence->add_option("--target", target, "Axiom that should fail")->required();
    independence->add_option("--system", system, "tarski, r or s");

    SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "Enumerate finite models of axiom constraints");
    search_cmd->add_option("--size", sa.size, "Number of elements")->required();
    search_cmd->add_option("--hold", sa.hold, "Axioms that must hold, e.g. R1,R3-R10");
    search_cmd->add_option("--fail", sa.fail, "Axioms that must each fail");
    search_cmd->add_flag("--iso", sa.iso, "One representative per isomorphism class");
    search_cmd->add_option("--limit", sa.limit, "Node limit");
    search_cmd->add_option("--time-limit", sa.time_limit, "Wall-clock limit in seconds");
    search_cmd->add_flag("--json", sa.json, "Machine-readable output");
    search_cmd->add_flag("--no-propagate", sa.no_propagate, "Generate and test without pruning");
    search_cmd->add_flag("--boolean", sa.boolean, "Fix the Boolean part (requires R1-R3 in --hold)");
    search_cmd->add_option("--threads", sa.threads, "Worker threads");
    search_cmd->add_option("--print", sa.print, "Number of models to print as tables");

    bool long_running = false;
    std::optional<double> budget;
    unsigned threads = 1;
    auto* verify = app.add_subcommand("verify-paper", "Check every published claim and print a report");
    verify->add_flag("--long", long_running, "Include the exhaustive size-8 searches");
    verify->add_flag("--json", json, "Machine-readable report");
    verify->add_option("--budget", budget, "Wall-clock budget per long search, in seconds");
    verify->add_option("--threads", threads, "Worker threads for searches");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("list-models")) return cmd_list_models(out);
        if (show->parsed()) return cmd_show(model_ref, json, out);
        if (check->parsed()) return cmd_check(model_ref, system, json, out);
        if (eval->parsed()) return cmd_eval(model_ref, term_text, let, out);
        if (independence->parsed()) return cmd_independence(model_ref, target, system, out);
        if (search_cmd->parsed()) return cmd_search(sa, out);
        if (verify->parsed()) return cmd_verify(long_running, json, budget, threads, color, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SearchError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace relalg
