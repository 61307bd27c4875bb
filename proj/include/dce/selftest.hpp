#pragma once
#include <string>
#include <vector>

namespace dce {

struct SelfTestResult {
    std::string name;
    bool passed;
    std::string detail; // empty when passed
};

// Compact built-in invariant suite (Fresnel identities, quadrature sanity,
// Green's function continuity/reciprocity, quadrature-vs-closed-form oracle
// agreement, frequency cutoff, mirror shape).  Used by the `selftest` CLI
// subcommand; independent of any test framework.
std::vector<SelfTestResult> run_selftest();

} // namespace dce
