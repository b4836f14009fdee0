#include "gbgg/minrank.hpp"

#include <sstream>

#include "gbgg/polynomial.hpp"

namespace gbgg {

MinRankMode MinRankMode::exhaustive_fp(long p) {
    MinRankMode mode;
    mode.kind = Kind::ExhaustiveFp;
    mode.p = p;
    return mode;
}

MinRankMode MinRankMode::randomized_q(int samples, std::uint64_t seed) {
    MinRankMode mode;
    mode.kind = Kind::RandomizedQ;
    mode.samples = samples;
    mode.seed = seed;
    return mode;
}

MinRankMode MinRankMode::consensus_fp(std::vector<long> primes) {
    MinRankMode mode;
    mode.kind = Kind::ConsensusFp;
    mode.primes = std::move(primes);
    return mode;
}

namespace {

int common_ambient(const std::vector<Bivector>& K) {
    int q = K.front().ambient_dim();
    for (const Bivector& v : K)
        if (v.ambient_dim() != q) throw DimensionError("subspace basis mixes ambient dimensions");
    return q;
}

void check_independent(const std::vector<Bivector>& K, const std::string& where) {
    std::vector<Vec> rows;
    rows.reserve(K.size());
    for (const Bivector& v : K) rows.push_back(v.element().coordinates());
    ExactMatrix stacked = ExactMatrix::from_rows(rows, K.front().field());
    if (stacked.rank() != static_cast<int>(K.size()))
        throw DimensionError("dependent subspace basis" + where);
}

long long projective_point_count(int m, long p, long long budget) {
    long long points = 0, power = 1;
    for (int l = 0; l < m; ++l) {
        points += power;
        if (points > budget)
            throw BudgetExceededError("enumeration needs more than " + std::to_string(budget) +
                                      " projective points");
        if (l + 1 < m) {
            if (power > budget / p + 1)
                throw BudgetExceededError("enumeration needs more than " + std::to_string(budget) +
                                          " projective points");
            power *= p;
        }
    }
    return points;
}

RankCertificate empty_subspace_certificate(const std::string& method) {
    RankCertificate cert;
    cert.method = method;
    return cert;  // min_rank stays empty: no nonzero element exists
}

RankCertificate run_exhaustive_fp(const std::vector<Bivector>& K, long p, long long budget) {
    RankCertificate cert;
    cert.method = "exhaustive-fp";
    cert.primes = {p};
    cert.char0_caveat = true;
    if (K.empty()) return empty_subspace_certificate("exhaustive-fp");
    int q = common_ambient(K);
    Field fp = Field::prime(p);
    bool input_rational = K.front().field().kind() == ScalarKind::Rational;
    if (!input_rational && K.front().field() != fp)
        throw ScalarMismatchError("subspace basis lives over " + K.front().field().name() +
                                  ", not F" + std::to_string(p));
    std::vector<Bivector> reduced;
    reduced.reserve(K.size());
    for (const Bivector& v : K)
        reduced.push_back(input_rational ? Bivector(q, v.matrix().to_prime_field(p)) : v);
    check_independent(reduced, " modulo " + std::to_string(p));
    int m = static_cast<int>(K.size());
    projective_point_count(m, p, budget);

    std::optional<int> best;
    std::vector<long> best_tuple;
    // Ascending lexicographic order over normalized tuples: the leading 1 moves
    // from the last coordinate to the first, the tail counts up like an odometer.
    for (int lead = m - 1; lead >= 0; --lead) {
        int tail_len = m - 1 - lead;
        std::vector<long> tail(tail_len, 0);
        while (true) {
            ExactMatrix sum = reduced[lead].matrix();
            for (int t = 0; t < tail_len; ++t) {
                if (tail[t] == 0) continue;
                sum = sum + reduced[lead + 1 + t].matrix().scaled(fp.integer(tail[t]));
            }
            int rank = Bivector(q, sum).matrix().rank();
            if (!best || rank < *best) {
                best = rank;
                best_tuple.assign(m, 0);
                best_tuple[lead] = 1;
                for (int t = 0; t < tail_len; ++t) best_tuple[lead + 1 + t] = tail[t];
            }
            int pos = tail_len - 1;
            while (pos >= 0 && tail[pos] == p - 1) tail[pos--] = 0;
            if (pos < 0) break;
            ++tail[pos];
        }
        if (best && *best == 2) break;  // nothing below 2 exists for nonzero bivectors
    }
    cert.min_rank = best;
    ExactMatrix witness_matrix(q, q, fp);
    for (int t = 0; t < m; ++t) {
        if (best_tuple[t] == 0) continue;
        witness_matrix = witness_matrix + reduced[t].matrix().scaled(fp.integer(best_tuple[t]));
    }
    cert.witness = Bivector(q, witness_matrix);
    for (long c : best_tuple) cert.witness_coeffs.push_back(fp.integer(c));
    if (input_rational) {
        // Symmetric lift of the witness tuple, to see whether the rational point
        // already attains the F_p minimum.
        ExactMatrix lifted(q, q, K.front().field());
        for (int t = 0; t < m; ++t) {
            long c = best_tuple[t] > p / 2 ? best_tuple[t] - p : best_tuple[t];
            if (c == 0) continue;
            lifted = lifted + K[t].matrix().scaled(Scalar::rational(c));
        }
        if (!lifted.is_zero()) cert.lifted_rank = Bivector(q, lifted).matrix().rank();
    }
    return cert;
}

// Principal sub-Pfaffian of a polynomial-entried skew matrix, by first-row expansion.
Polynomial poly_pfaffian(const std::vector<std::vector<Polynomial>>& m, std::vector<int> active,
                         const Field& field) {
    if (active.empty()) return Polynomial::constant(field.one());
    Polynomial acc(field);
    int first = active.front();
    for (size_t t = 1; t < active.size(); ++t) {
        const Polynomial& value = m[first][active[t]];
        if (value.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(active.size() - 2);
        for (size_t s = 1; s < active.size(); ++s)
            if (s != t) rest.push_back(active[s]);
        Polynomial term = value * poly_pfaffian(m, std::move(rest), field);
        if (t % 2 == 0) term = -term;
        acc = acc + term;
    }
    return acc;
}

// Rational t values at which rank(base + t * dir) can drop below the rank of base.
std::vector<Scalar> rank_drop_candidates(const Bivector& base, const Bivector& dir, int rank) {
    const Field& field = base.field();
    int q = base.ambient_dim();
    std::vector<std::vector<Polynomial>> entries(q, std::vector<Polynomial>(q, Polynomial(field)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            entries[i][j] = Polynomial::linear(base.matrix().at(i, j), dir.matrix().at(i, j));
    // The rank stays >= `rank` until every principal sub-Pfaffian of that size
    // vanishes, so candidate drops are the rational roots of their gcd.
    Polynomial common(field);
    for (const IndexTuple& subset : subsets_lex(q, rank)) {
        std::vector<int> ids(subset.begin(), subset.end());
        Polynomial pf = poly_pfaffian(entries, ids, field);
        if (pf.is_zero()) continue;
        common = common.is_zero() ? pf.monic() : poly_gcd(common, pf);
        if (common.degree() == 0) return {};
    }
    if (common.is_zero()) return {};
    return rational_roots(common).roots;
}

RankCertificate run_randomized_q(const std::vector<Bivector>& K, int samples, std::uint64_t seed) {
    RankCertificate cert;
    cert.method = "randomized-q";
    cert.samples = samples;
    cert.seed = seed;
    cert.upper_bound_only = true;
    if (K.empty()) {
        cert.min_rank.reset();
        return cert;
    }
    if (K.front().field().kind() != ScalarKind::Rational)
        throw ScalarMismatchError("randomized search works over the rationals");
    int q = common_ambient(K);
    check_independent(K, "");
    int m = static_cast<int>(K.size());
    Field field = K.front().field();

    auto combine = [&](const std::vector<Scalar>& coeffs) {
        ExactMatrix sum(q, q, field);
        for (int t = 0; t < m; ++t) {
            if (coeffs[t].is_zero()) continue;
            sum = sum + K[t].matrix().scaled(coeffs[t]);
        }
        return Bivector(q, sum);
    };

    std::optional<int> best;
    std::vector<Scalar> best_coeffs;
    for (int s = 0; s < samples; ++s) {
        DeterministicRng rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
        std::vector<Scalar> coeffs;
        bool all_zero = true;
        do {
            coeffs.clear();
            all_zero = true;
            for (int t = 0; t < m; ++t) {
                long c = rng.range(-4, 4);
                if (c != 0) all_zero = false;
                coeffs.push_back(Scalar::rational(c));
            }
        } while (all_zero);
        int rank = bivector_rank(combine(coeffs));
        if (!best || rank < *best) {
            best = rank;
            best_coeffs = coeffs;
        }
    }

    // Line descent: walk lines through the best point in each basis direction and
    // jump to any rational point where the rank certifiably drops.
    for (int round = 0; round < 32 && *best > 2; ++round) {
        bool improved = false;
        Bivector current = combine(best_coeffs);
        for (int d = 0; d < m && !improved; ++d) {
            for (const Scalar& root : rank_drop_candidates(current, K[d], *best)) {
                std::vector<Scalar> candidate = best_coeffs;
                candidate[d] += root;
                Bivector moved = combine(candidate);
                if (moved.is_zero()) continue;
                int rank = bivector_rank(moved);
                if (rank < *best) {
                    best = rank;
                    best_coeffs = std::move(candidate);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) break;
    }

    cert.min_rank = best;
    cert.witness = combine(best_coeffs);
    cert.witness_coeffs = best_coeffs;
    return cert;
}

RankCertificate run_consensus(const std::vector<Bivector>& K, const std::vector<long>& primes,
                              long long budget) {
    if (primes.size() < 2) throw DimensionError("consensus mode needs at least two primes");
    RankCertificate cert;
    cert.method = "consensus-fp";
    cert.primes = primes;
    cert.char0_caveat = true;
    if (K.empty()) return empty_subspace_certificate("consensus-fp");
    std::vector<RankCertificate> runs;
    runs.reserve(primes.size());
    for (long p : primes) runs.push_back(run_exhaustive_fp(K, p, budget));
    int strongest = 0;
    for (size_t t = 0; t < runs.size(); ++t) {
        cert.per_prime_min.push_back(*runs[t].min_rank);
        if (*runs[t].min_rank > *runs[strongest].min_rank) strongest = static_cast<int>(t);
        if (*runs[t].min_rank != *runs[0].min_rank) cert.consensus_agree = false;
    }
    // Each good prime certifies "no nonzero element below its minimum", so the
    // largest per-prime minimum is the strongest statement all runs support.
    cert.min_rank = runs[strongest].min_rank;
    cert.witness = runs[strongest].witness;
    cert.witness_coeffs = runs[strongest].witness_coeffs;
    cert.lifted_rank = runs[strongest].lifted_rank;
    return cert;
}

}  // namespace

RankCertificate min_rank_in_subspace(const std::vector<Bivector>& K, const MinRankMode& mode) {
    switch (mode.kind) {
        case MinRankMode::Kind::ExhaustiveFp:
            return run_exhaustive_fp(K, mode.p, mode.budget);
        case MinRankMode::Kind::RandomizedQ:
            return run_randomized_q(K, mode.samples, mode.seed);
        case MinRankMode::Kind::ConsensusFp:
            return run_consensus(K, mode.primes, mode.budget);
    }
    throw InternalError("unhandled min-rank mode");
}

bool recheck_certificate(const RankCertificate& cert, const std::vector<Bivector>& K) {
    if (!cert.witness) return !cert.min_rank;
    if (!cert.min_rank) return false;
    const Bivector& w = *cert.witness;
    if (bivector_rank(w) != *cert.min_rank) return false;
    std::vector<Vec> rows;
    for (const Bivector& v : K) {
        Vec coords = v.element().coordinates();
        if (v.field() != w.field()) {
            if (v.field().kind() != ScalarKind::Rational || w.field().kind() != ScalarKind::PrimeField)
                return false;
            for (Scalar& c : coords) c = c.to_prime_field(w.field().characteristic());
        }
        rows.push_back(coords);
    }
    ExactMatrix span = ExactMatrix::from_rows(rows, w.field());
    ExactMatrix with_witness = span.vstack(ExactMatrix::from_rows({w.element().coordinates()}, w.field()));
    return span.rank() == with_witness.rank();
}

std::string certificate_report(const RankCertificate& cert, const std::string& prefix) {
    std::ostringstream os;
    os << prefix << "method = " << cert.method << "\n";
    os << prefix << "min_rank = ";
    if (cert.min_rank)
        os << *cert.min_rank;
    else
        os << "inf";
    os << "\n";
    if (!cert.primes.empty()) {
        os << prefix << "primes = ";
        for (size_t t = 0; t < cert.primes.size(); ++t) os << (t ? "," : "") << cert.primes[t];
        os << "\n";
    }
    if (!cert.per_prime_min.empty()) {
        os << prefix << "per_prime_min = ";
        for (size_t t = 0; t < cert.per_prime_min.size(); ++t)
            os << (t ? "," : "") << cert.per_prime_min[t];
        os << "\n";
        os << prefix << "consensus_agree = " << (cert.consensus_agree ? "yes" : "no") << "\n";
    }
    if (cert.method == "randomized-q") {
        os << prefix << "samples = " << cert.samples << "\n";
        os << prefix << "seed = " << cert.seed << "\n";
    }
    os << prefix << "witness = " << (cert.witness ? cert.witness->str() : "none") << "\n";
    if (!cert.witness_coeffs.empty()) {
        os << prefix << "witness_coeffs = ";
        for (size_t t = 0; t < cert.witness_coeffs.size(); ++t)
            os << (t ? "," : "") << cert.witness_coeffs[t].str();
        os << "\n";
    }
    if (cert.lifted_rank) os << prefix << "lifted_witness_rank = " << *cert.lifted_rank << "\n";
    os << prefix << "char0_caveat = " << (cert.char0_caveat ? "yes" : "no") << "\n";
    if (cert.upper_bound_only) os << prefix << "upper_bound_only = yes\n";
    return os.str();
}

}  // namespace gbgg
