#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class ClaimKind { independence, minimality, uniqueness, lemma_semantic, table_golden, extra_fact };
enum class ClaimStatus { pass, fail, skipped_long_running };

/// "independence", "lemma-semantic", "skipped-long-running", ...
std::string_view to_string(ClaimKind kind);
std::string_view to_string(ClaimStatus status);

struct Claim {
    std::string id;  // "paper.<section>.<short-name>"
    std::string description;
    ClaimKind kind = ClaimKind::extra_fact;
    ClaimStatus status = ClaimStatus::pass;
    /// Ordered key/value facts: witnesses, counts, model ids.
    std::vector<std::pair<std::string, std::string>> evidence;
    double seconds = 0;
};

struct Report {
    std::string tool_version{kToolVersion};
    std::vector<Claim> claims;
    double seconds = 0;

    bool passed() const;
    std::size_t count(ClaimStatus status) const;
};

struct VerificationOptions {
    bool include_long_running = false;
    /// Wall-clock budget for each long-running search; a search that runs
    /// out is reported as a non-exhaustive abort.
    std::chrono::milliseconds budget{std::chrono::minutes(10)};
    unsigned threads = 1;
    /// Supplies catalog models by id; defaults to the catalog.  Tests swap in
    /// corrupted models here.
    std::function<FiniteAlgebra(std::string_view)> model_source;
};

Report run_verification_suite(const VerificationOptions& options = {});
Report run_verification_suite(bool include_long_running);

std::string render_text(const Report& report, bool color = false);
std::string render_json(const Report& report);

}  // namespace relalg
