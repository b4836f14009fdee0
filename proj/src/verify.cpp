#include "gbgg/verify.hpp"

#include <sstream>

#include "gbgg/bgg.hpp"
#include "gbgg/bivector.hpp"
#include "gbgg/bounds.hpp"
#include "gbgg/matrix.hpp"
#include "gbgg/minrank.hpp"

namespace gbgg {

VerifyResult verify_bounds(const FormAlgebra& a, const std::string& label,
                           const VerifyOptions& opts) {
    a.ensure_valid();
    if (a.available_degree() < 2)
        throw DimensionError("verification needs degree-2 data, but h stops at H^" +
                             std::to_string(a.available_degree()));
    int q = a.q();
    int d = a.d();
    int h2 = a.h()[2];

    std::vector<Bivector> kernel = kernel_bivectors(a);
    MinRankMode mode = MinRankMode::consensus_fp(opts.primes);
    mode.budget = opts.budget;
    RankCertificate cert = min_rank_in_subspace(kernel, mode);

    BoundRhs aggregate = bound_rhs(q, d);
    int r_max = aggregate.maximizing_r;
    auto applicable = [&](int r) { return !cert.min_rank || *cert.min_rank > 2 * r; };
    // The hypothesis min_rank > 2r is monotone in r, so the admissible steps
    // form a prefix 1..admissible of the full range.
    int admissible = 0;
    while (admissible < r_max && applicable(admissible + 1)) ++admissible;

    std::ostringstream os;
    os << "report = verify v1\n";
    os << "input = " << label << "\n";
    os << "seed = " << opts.seed << "\n";
    os << "algebra.q = " << q << "\n";
    os << "algebra.d = " << d << "\n";
    os << "algebra.h2 = " << h2 << "\n";
    os << "kernel.dim = " << kernel.size() << "\n";
    os << certificate_report(cert, "minrank.");

    int first_violated = 0;
    for (const auto& [r, value] : aggregate.per_r) {
        os << "bound.r" << r << ".value = " << value << "\n";
        bool ok = r <= admissible;
        os << "bound.r" << r << ".applicable = " << (ok ? "yes" : "no") << "\n";
        std::string verdict = "not-applicable";
        if (ok) {
            verdict = h2 >= value ? "holds" : "violated";
            if (h2 < value && first_violated == 0) first_violated = r;
        }
        os << "bound.r" << r << ".verdict = " << verdict << "\n";
    }
    os << "bound.aggregate.value = " << aggregate.value << "\n";
    os << "bound.aggregate.maximizing_r = " << aggregate.maximizing_r << "\n";
    bool aggregate_applicable = r_max >= 1 && admissible == r_max;
    os << "bound.aggregate.applicable = " << (aggregate_applicable ? "yes" : "no") << "\n";
    std::string aggregate_verdict = "not-applicable";
    if (aggregate_applicable) aggregate_verdict = h2 >= aggregate.value ? "holds" : "violated";
    os << "bound.aggregate.verdict = " << aggregate_verdict << "\n";

    for (int r = 1; r <= admissible; ++r) {
        SampleReport sample =
            generic_exactness_sample(a, r, 2, opts.samples, mix_seed(opts.seed, r));
        os << "exact.r" << r << ".samples = " << sample.n_total << "\n";
        os << "exact.r" << r << ".n_exact = " << sample.n_exact << "\n";
        os << "exact.r" << r << ".all_exact = "
           << (sample.n_exact == sample.n_total ? "yes" : "no") << "\n";
        if (sample.n_exact != sample.n_total)
            os << "exact.r" << r << ".note = inexact sample despite certified rank hypothesis\n";
    }

    VerifyResult out;
    if (first_violated > 0) {
        out.exit_code = 2;
        os << "summary = BOUND VIOLATED at r=" << first_violated
           << ": either an implementation bug or an invalid certificate\n";
    } else if (r_max == 0) {
        os << "summary = no bound levels available for q=" << q << "\n";
    } else if (admissible == 0) {
        os << "summary = hypothesis fails at k=1, bounds not applicable\n";
    } else if (admissible < r_max) {
        os << "summary = bounds hold for r <= " << admissible << "; hypothesis fails at k="
           << admissible + 1 << "\n";
    } else if (h2 == aggregate.value) {
        os << "summary = all bounds hold; h2 = " << h2 << " equals the aggregate bound "
           << aggregate.value << "\n";
    } else {
        os << "summary = all bounds hold; h2 = " << h2 << " exceeds the aggregate bound "
           << aggregate.value << "\n";
    }
    out.report = os.str();
    return out;
}

}  // namespace gbgg
