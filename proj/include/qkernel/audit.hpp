#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qkernel/carlitz.hpp"
#include "qkernel/qbernstein.hpp"

namespace qkernel {

// Exact counterexample: the lexicographically smallest failing parameter
// tuple together with both canonically serialized sides.
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
};

enum class VerdictStatus { HOLDS, FAILS, HOLDS_UNDER_CORRECTION };

std::string to_string(VerdictStatus s);

struct Verdict {
    std::string id;
    std::string binding;
    VerdictStatus status = VerdictStatus::HOLDS;
    std::optional<Counterexample> counterexample;
    std::string note;
};

// One reading of an identity: either an interpretation of ambiguous notation
// or a registered corrected form. A corrected form that passes is reported
// HOLDS_UNDER_CORRECTION, never silently substituted.
struct BindingSpec {
    std::string tag;
    bool is_correction = false;
    std::string note;
    std::function<std::optional<Counterexample>(int n_max)> check;
};

struct IdentitySpec {
    std::string id;
    // display/theorem labels this entry accounts for
    std::vector<std::string> covers;
    std::string statement;
    std::vector<BindingSpec> bindings;
};

const std::vector<IdentitySpec>& identity_registry();

// Union of all covers entries; compared against the hard-coded checklist in
// the coverage test.
std::vector<std::string> registry_coverage();

struct AuditConfig {
    int n_max = 6;
    std::vector<std::string> identities; // empty = all
    int threads = 0;                     // 0 = auto; capped by QKERNEL_THREADS
};

struct AuditReport {
    std::string version;
    AuditConfig config;
    std::vector<Verdict> verdicts; // sorted by (id, binding)
};

// Evaluates every identity x binding over its parameter grid. The grid of
// checks is embarrassingly parallel; verdict assembly imposes the ordering,
// so reports are byte-identical regardless of thread count.
AuditReport run_audit(const AuditConfig& config);

// Effective thread count after the QKERNEL_THREADS cap.
int resolve_threads(int requested);

std::string report_to_json(const AuditReport& report);
std::string report_to_csv(const AuditReport& report);

} // namespace qkernel
