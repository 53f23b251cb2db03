#ifndef BOTT_SELFTEST_HPP
#define BOTT_SELFTEST_HPP

#include <string>
#include <vector>

namespace bott {

/// One line of the built-in sanity battery: a named suite and whether all of
/// its checks passed.  Suites are deterministic and take well under a second
/// each; an exception inside a suite counts as a failure of that suite.
struct SelfTestSuite {
    std::string name;
    bool passed = false;
};

struct SelfTestResult {
    std::vector<SelfTestSuite> suites;
    bool all_passed = false;
};

SelfTestResult run_selftest();

} // namespace bott

#endif // BOTT_SELFTEST_HPP
