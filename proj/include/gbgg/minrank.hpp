#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbgg/bivector.hpp"

namespace gbgg {

/// Machine-checkable record of the minimal bivector rank found in a subspace.
/// min_rank is empty when the subspace has no nonzero element (rank infinity).
struct RankCertificate {
    std::optional<int> min_rank;
    std::string method;  // "exhaustive-fp" | "randomized-q" | "consensus-fp"
    std::optional<Bivector> witness;
    std::vector<Scalar> witness_coeffs;  // coordinates of the witness in the given basis
    std::vector<long> primes;
    std::vector<int> per_prime_min;  // parallel to primes in consensus mode
    bool consensus_agree = true;
    int samples = 0;
    std::uint64_t seed = 0;
    /// Finite-field minima can understate the characteristic-zero minimum (never
    /// overstate it, for integrally defined inputs with good reduction).
    bool char0_caveat = false;
    /// Randomized search only bounds the minimum from above.
    bool upper_bound_only = false;
    /// Rank over Q of the symmetric lift of an F_p witness, when liftable.
    std::optional<int> lifted_rank;
};

struct MinRankMode {
    enum class Kind { ExhaustiveFp, RandomizedQ, ConsensusFp };
    Kind kind = Kind::ExhaustiveFp;
    long p = 5;
    std::vector<long> primes = {5, 7, 11};
    int samples = 200;
    std::uint64_t seed = 0;
    long long budget = 10000000;  // max projective points an enumeration may visit

    static MinRankMode exhaustive_fp(long p);
    static MinRankMode randomized_q(int samples, std::uint64_t seed);
    static MinRankMode consensus_fp(std::vector<long> primes = {5, 7, 11});
};

/// Minimal rank over the nonzero elements of span(K).
///
/// Exhaustive-Fp enumerates every point of P(span K) over F_p in ascending
/// lexicographic order of normalized coefficient tuples; the witness is the
/// first tuple attaining the minimum. Randomized-Q samples small rational
/// combinations and then walks rational lines through the best point, dropping
/// rank at common roots of the principal sub-Pfaffians. Consensus-Fp runs the
/// enumeration at several primes and reports the strongest (largest) certified
/// minimum together with the per-prime values.
RankCertificate min_rank_in_subspace(const std::vector<Bivector>& K, const MinRankMode& mode);

/// Re-validates a certificate: the witness (when present) has the claimed rank
/// and lies in span(K).
bool recheck_certificate(const RankCertificate& cert, const std::vector<Bivector>& K);

/// Text block for reports: stable `minrank.* = ...` lines.
std::string certificate_report(const RankCertificate& cert, const std::string& prefix);

}  // namespace gbgg
