#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cantor {

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;  // 0 = per-suite default
    std::size_t arity = 4;     // max cochain arity for the homotopy suite
    std::size_t kmax = 8;      // delta-pattern depth
    int M = 0;                 // dissipator level override (0 = suite defaults)
};

struct VerifyFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
    std::string text() const;
    std::string json() const;
};

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one property suite deterministically; unknown names throw
/// std::invalid_argument.  "all" runs every suite and concatenates the
/// failures into one report.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace cantor
