#pragma once

// Seeded property suites, one per claim under test.  Deterministic given
// the seed; failures carry full reproduction inputs.

#include "siegel/document.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace siegel {

struct UnknownSuite : Error {
    using Error::Error;
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    long trials = 1000;
    Index n = 2;
    Tolerance tol;
};

const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace siegel
