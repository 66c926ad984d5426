#ifndef TAUTRING_VERIFY_HPP
#define TAUTRING_VERIFY_HPP

#include <string>
#include <vector>

namespace tautring {

/// One named verification check. `criterion` groups checks under the twelve
/// acceptance criteria; ids are stable across runs.
struct CheckResult {
    std::string id;
    int criterion = 0;
    bool passed = false;
    std::string detail;
};

/// Run the complete verification suite, sorted by check id. `max_degree`
/// caps the phi-family degree ranges: the oracle-agreement and
/// signature-membership checks run to max_degree and the kernel lower bound
/// to max_degree + 8, so the default of 12 reproduces the published ranges
/// (a+b <= 12, d <= 20) exactly.
std::vector<CheckResult> run_all_checks(int max_degree = 12);

/// Subset selection by exact id. Unknown ids yield an empty vector.
std::vector<CheckResult> run_check(const std::string& id, int max_degree = 12);

/// Criterion descriptions, indexed 1..12.
const std::vector<std::string>& criterion_summaries();

}  // namespace tautring

#endif
