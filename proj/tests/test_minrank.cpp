#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gbgg/minrank.hpp"

using namespace gbgg;

namespace {

const Field& rat() {
    static Field f = Field::rationals();
    return f;
}

ExteriorElement biv(int q, int i, int j) {
    return ExteriorElement::basis(q, {i, j}, rat());
}

std::vector<Bivector> single(const ExteriorElement& v) { return {Bivector(v)}; }

}  // namespace

TEST_CASE("a line through a decomposable bivector has minimum rank 2") {
    RankCertificate cert = min_rank_in_subspace(single(biv(4, 0, 1)), MinRankMode::exhaustive_fp(5));
    CHECK(cert.method == "exhaustive-fp");
    REQUIRE(cert.min_rank.has_value());
    CHECK(*cert.min_rank == 2);
    CHECK(cert.primes == std::vector<long>{5});
    CHECK(cert.char0_caveat);
    CHECK_FALSE(cert.upper_bound_only);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->field() == Field::prime(5));
    REQUIRE(cert.lifted_rank.has_value());
    CHECK(*cert.lifted_rank == 2);
    CHECK(recheck_certificate(cert, single(biv(4, 0, 1))));
}

TEST_CASE("a line through a rank-4 bivector never drops rank") {
    std::vector<Bivector> K = single(biv(4, 0, 1) + biv(4, 2, 3));
    RankCertificate cert = min_rank_in_subspace(K, MinRankMode::exhaustive_fp(5));
    REQUIRE(cert.min_rank.has_value());
    CHECK(*cert.min_rank == 4);
    REQUIRE(cert.lifted_rank.has_value());
    CHECK(*cert.lifted_rank == 4);
    CHECK(recheck_certificate(cert, K));
}

TEST_CASE("enumeration reports the lexicographically first witness") {
    // Kernel of the (2,3) product fixture: e0^e1, e2^e3, e2^e4, e3^e4. The lead
    // coefficient walks from the last basis vector towards the first, so the
    // first rank-2 point found is e3^e4 with coefficient tuple (0,0,0,1).
    std::vector<Bivector> K = kernel_bivectors(FormAlgebra::fixture_product_of_curves(2, 3));
    RankCertificate cert = min_rank_in_subspace(K, MinRankMode::exhaustive_fp(5));
    REQUIRE(cert.min_rank.has_value());
    CHECK(*cert.min_rank == 2);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->element().str() == "e3^e4");
    REQUIRE(cert.witness_coeffs.size() == 4);
    CHECK(cert.witness_coeffs[0].is_zero());
    CHECK(cert.witness_coeffs[1].is_zero());
    CHECK(cert.witness_coeffs[2].is_zero());
    CHECK(cert.witness_coeffs[3].is_one());
    CHECK(recheck_certificate(cert, K));
}

TEST_CASE("the certified minimum does not depend on the basis order") {
    std::vector<Bivector> K = kernel_bivectors(FormAlgebra::fixture_product_of_curves(2, 3));
    std::vector<Bivector> reversed(K.rbegin(), K.rend());
    RankCertificate a = min_rank_in_subspace(K, MinRankMode::exhaustive_fp(7));
    RankCertificate b = min_rank_in_subspace(reversed, MinRankMode::exhaustive_fp(7));
    REQUIRE(a.min_rank.has_value());
    REQUIRE(b.min_rank.has_value());
    CHECK(*a.min_rank == *b.min_rank);
    CHECK(recheck_certificate(b, reversed));
}

TEST_CASE("consensus runs every prime and keeps the strongest minimum") {
    std::vector<Bivector> K = {Bivector(biv(5, 0, 1) + biv(5, 2, 3)),
                               Bivector(biv(5, 0, 2) + biv(5, 3, 4))};
    RankCertificate cert = min_rank_in_subspace(K, MinRankMode::consensus_fp({5, 7, 11}));
    CHECK(cert.method == "consensus-fp");
    CHECK(cert.primes == std::vector<long>{5, 7, 11});
    CHECK(cert.per_prime_min == std::vector<int>{4, 4, 4});
    CHECK(cert.consensus_agree);
    REQUIRE(cert.min_rank.has_value());
    CHECK(*cert.min_rank == 4);
    CHECK(cert.char0_caveat);
    CHECK(recheck_certificate(cert, K));
    CHECK_THROWS_AS(min_rank_in_subspace(K, MinRankMode::consensus_fp({5})), DimensionError);
}

TEST_CASE("disagreeing primes are reported with the largest minimum winning") {
    // c1 (e01+e23) + c2 (e01+6 e23) has rank 2 iff c1+c2 = 0 or c1+6c2 = 0.
    // Mod 5 the basis collapses (6 = 1); mod 7 and 11 rank-2 points exist.
    std::vector<Bivector> K = {Bivector(biv(4, 0, 1) + biv(4, 2, 3)),
                               Bivector(biv(4, 0, 1) + biv(4, 2, 3).scaled(Scalar::rational(6)))};
    CHECK_THROWS_AS(min_rank_in_subspace(K, MinRankMode::exhaustive_fp(5)), DimensionError);
    RankCertificate cert = min_rank_in_subspace(K, MinRankMode::exhaustive_fp(7));
    REQUIRE(cert.min_rank.has_value());
    CHECK(*cert.min_rank == 2);
}

TEST_CASE("randomized descent lands on the rational rank-2 point") {
    std::vector<Bivector> K = {Bivector(biv(4, 0, 1) + biv(4, 2, 3)),
                               Bivector(biv(4, 0, 1).scaled(Scalar::rational(9)) +
                                        biv(4, 2, 3).scaled(Scalar::rational(-7)))};
    RankCertificate cert = min_rank_in_subspace(K, MinRankMode::randomized_q(6, 3));
    CHECK(cert.method == "randomized-q");
    CHECK(cert.samples == 6);
    CHECK(cert.seed == 3);
    CHECK(cert.upper_bound_only);
    CHECK_FALSE(cert.char0_caveat);
    REQUIRE(cert.min_rank.has_value());
    CHECK(*cert.min_rank == 2);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->element().str() == "-32*e0^e1");
    CHECK(recheck_certificate(cert, K));
    // The recorded coefficients recombine to the witness.
    REQUIRE(cert.witness_coeffs.size() == 2);
    Bivector recombined = K[0].scaled(cert.witness_coeffs[0]) + K[1].scaled(cert.witness_coeffs[1]);
    CHECK(recombined == *cert.witness);
}

TEST_CASE("randomized search is deterministic in the seed") {
    std::vector<Bivector> K = kernel_bivectors(FormAlgebra::fixture_product_of_curves(2, 2));
    RankCertificate a = min_rank_in_subspace(K, MinRankMode::randomized_q(12, 17));
    RankCertificate b = min_rank_in_subspace(K, MinRankMode::randomized_q(12, 17));
    REQUIRE(a.min_rank.has_value());
    REQUIRE(b.min_rank.has_value());
    CHECK(*a.min_rank == *b.min_rank);
    CHECK(*a.witness == *b.witness);
    CHECK(a.witness_coeffs == b.witness_coeffs);
}

TEST_CASE("enumeration budget cuts off oversized subspaces") {
    // Twelve independent bivectors in q = 6 would need (5^12 - 1) / 4 points.
    const SubsetBasis& basis = cached_subset_basis(6, 2);
    std::vector<Bivector> K;
    for (int t = 0; t < 12; ++t)
        K.push_back(Bivector(ExteriorElement::basis(6, basis.tuple(t), rat())));
    CHECK_THROWS_AS(min_rank_in_subspace(K, MinRankMode::exhaustive_fp(5)), BudgetExceededError);
    // A five-dimensional subspace fits comfortably.
    std::vector<Bivector> small(K.begin(), K.begin() + 5);
    CHECK_NOTHROW(min_rank_in_subspace(small, MinRankMode::exhaustive_fp(5)));
}

TEST_CASE("dependent input is rejected before any enumeration") {
    std::vector<Bivector> K = {Bivector(biv(4, 0, 1)),
                               Bivector(biv(4, 0, 1).scaled(Scalar::rational(2)))};
    CHECK_THROWS_AS(min_rank_in_subspace(K, MinRankMode::exhaustive_fp(5)), DimensionError);
    CHECK_THROWS_AS(min_rank_in_subspace(K, MinRankMode::randomized_q(4, 0)), DimensionError);
    std::vector<Bivector> mixed = {Bivector(biv(4, 0, 1)), Bivector(biv(5, 0, 1))};
    CHECK_THROWS_AS(min_rank_in_subspace(mixed, MinRankMode::exhaustive_fp(5)), DimensionError);
}

TEST_CASE("the empty subspace certifies rank infinity") {
    RankCertificate a = min_rank_in_subspace({}, MinRankMode::exhaustive_fp(5));
    CHECK_FALSE(a.min_rank.has_value());
    CHECK_FALSE(a.witness.has_value());
    CHECK(recheck_certificate(a, {}));
    RankCertificate b = min_rank_in_subspace({}, MinRankMode::randomized_q(4, 0));
    CHECK_FALSE(b.min_rank.has_value());
    RankCertificate c = min_rank_in_subspace({}, MinRankMode::consensus_fp());
    CHECK_FALSE(c.min_rank.has_value());
}

TEST_CASE("tampered certificates fail the recheck") {
    std::vector<Bivector> K = single(biv(4, 0, 1) + biv(4, 2, 3));
    RankCertificate cert = min_rank_in_subspace(K, MinRankMode::exhaustive_fp(5));
    REQUIRE(recheck_certificate(cert, K));

    RankCertificate wrong_rank = cert;
    wrong_rank.min_rank = 2;
    CHECK_FALSE(recheck_certificate(wrong_rank, K));

    RankCertificate foreign_witness = cert;
    // Same rank as the claim but outside span(K mod 5).
    foreign_witness.witness =
        Bivector(4, Bivector(biv(4, 0, 2) + biv(4, 1, 3)).matrix().to_prime_field(5));
    CHECK_FALSE(recheck_certificate(foreign_witness, K));

    RankCertificate missing_claim = cert;
    missing_claim.min_rank.reset();
    CHECK_FALSE(recheck_certificate(missing_claim, K));

    RankCertificate claim_without_witness = cert;
    claim_without_witness.witness.reset();
    CHECK_FALSE(recheck_certificate(claim_without_witness, K));
}

TEST_CASE("certificate reports are stable line by line") {
    RankCertificate cert = min_rank_in_subspace(single(biv(4, 0, 1)), MinRankMode::exhaustive_fp(5));
    CHECK(certificate_report(cert, "minrank.") ==
          "minrank.method = exhaustive-fp\n"
          "minrank.min_rank = 2\n"
          "minrank.primes = 5\n"
          "minrank.witness = e0^e1\n"
          "minrank.witness_coeffs = 1\n"
          "minrank.lifted_witness_rank = 2\n"
          "minrank.char0_caveat = yes\n");

    RankCertificate inf = min_rank_in_subspace({}, MinRankMode::exhaustive_fp(5));
    CHECK(certificate_report(inf, "minrank.") ==
          "minrank.method = exhaustive-fp\n"
          "minrank.min_rank = inf\n"
          "minrank.witness = none\n"
          "minrank.char0_caveat = no\n");
}
