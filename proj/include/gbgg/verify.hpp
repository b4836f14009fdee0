#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbgg/form_algebra.hpp"

namespace gbgg {

struct VerifyOptions {
    std::uint64_t seed = 0;
    int samples = 10;
    std::vector<long> primes = {5, 7, 11};
    long long budget = 10000000;
};

// exit_code: 0 when every applicable bound holds (including the vacuous cases),
// 2 when a bound fails while its rank hypothesis is certified. Input problems
// surface as exceptions, not as codes.
struct VerifyResult {
    int exit_code = 0;
    std::string report;
};

// End-to-end check on one algebra: find the minimal rank in ker psi_2 by
// multi-prime consensus, derive the admissible step range, compare each step
// bound (and the aggregate) against h[2], and sample generic exactness of the
// quadratic complex at every admissible step. The report is line-oriented
// `key = value` text, byte-stable for a fixed input and seed.
VerifyResult verify_bounds(const FormAlgebra& a, const std::string& label,
                           const VerifyOptions& opts = {});

}  // namespace gbgg
