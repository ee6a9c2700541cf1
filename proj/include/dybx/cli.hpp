#pragma once

#include "dybx/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dybx {

/// One bundled instance group of the regression corpus.
struct SuiteResult {
    std::string name;
    Report report;
    double seconds = 0;
};

/// S3/Z3 twists, D4/Z4 classification, the S3 functor relation, the classical
/// suite and the rank-one and gl(2) x C^2 formal suites.
std::vector<SuiteResult> runCorpus();

/// Entry point behind the `dybx` executable. Exit codes: 0 every verdict passes,
/// 1 some verdict fails (or a precondition does not hold), 2 malformed input,
/// 3 internal invariant violation.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dybx
