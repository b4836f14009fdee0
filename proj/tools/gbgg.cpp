#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gbgg/algebra_io.hpp"
#include "gbgg/bgg.hpp"
#include "gbgg/bivector.hpp"
#include "gbgg/bounds.hpp"
#include "gbgg/errors.hpp"
#include "gbgg/minrank.hpp"
#include "gbgg/verify.hpp"

namespace {

using namespace gbgg;

std::string join_ints(const std::vector<int>& values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    return os.str();
}

std::string row_str(const ExactMatrix& m, int i) {
    std::ostringstream os;
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j).str();
    return os.str();
}

Scalar parse_scalar_token(const std::string& token) {
    mpq_class value;
    try {
        value = mpq_class(token);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + token + "'");
    }
    if (value.get_den() == 0) throw ParseError("zero denominator in '" + token + "'");
    value.canonicalize();
    return Scalar::rational(value);
}

// Basis file for --at: one vector per line, q whitespace- or comma-separated
// rational entries; blank lines and lines starting with '#' are skipped.
ExactMatrix load_basis(const std::string& path, int q, const Field& field) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open basis file '" + path + "'");
    std::vector<Vec> rows;
    std::string line;
    while (std::getline(in, line)) {
        for (char& c : line)
            if (c == ',' || c == '\t' || c == '\r') c = ' ';
        std::istringstream fields(line);
        std::string token;
        Vec row;
        while (fields >> token) {
            if (token[0] == '#') break;
            row.push_back(parse_scalar_token(token));
        }
        if (row.empty()) continue;
        if (static_cast<int>(row.size()) != q)
            throw ParseError("basis row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(q));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("basis file '" + path + "' has no rows");
    return ExactMatrix::from_rows(rows, field);
}

MinRankMode parse_minrank_mode(const std::string& text, std::uint64_t seed) {
    if (text == "consensus") return MinRankMode::consensus_fp();
    if (text.rfind("fp:", 0) == 0) {
        long p = std::stol(text.substr(3));
        return MinRankMode::exhaustive_fp(p);
    }
    if (text.rfind("rand:", 0) == 0) {
        int samples = std::stoi(text.substr(5));
        if (samples < 1) throw std::invalid_argument("rand mode needs at least one sample");
        return MinRankMode::randomized_q(samples, seed);
    }
    throw std::invalid_argument("unknown mode '" + text +
                                "' (expected fp:<p>, rand:<samples>, or consensus)");
}

int run_validate(const std::string& path) {
    FormAlgebra a = load_form_algebra(path);
    std::cout << "report = validate v1\n";
    std::cout << "input = " << path << "\n";
    std::cout << "algebra.q = " << a.q() << "\n";
    std::cout << "algebra.d = " << a.d() << "\n";
    std::cout << "algebra.h = " << join_ints(a.h()) << "\n";
    std::cout << "algebra.degrees_stored = " << a.available_degree() << "\n";
    const ValidationReport& report = a.validate();
    std::cout << "valid = " << (report.valid ? "yes" : "no") << "\n";
    if (!report.valid) std::cout << "message = " << report.message << "\n";
    return report.valid ? 0 : 1;
}

int run_psi(const std::string& path, int n) {
    FormAlgebra a = load_form_algebra(path);
    a.ensure_valid();
    PsiMap map = psi(a, n);
    int rank = map.matrix.rank();
    std::cout << "report = psi v1\n";
    std::cout << "input = " << path << "\n";
    std::cout << "n = " << n << "\n";
    std::cout << "rows = " << map.matrix.rows() << "\n";
    std::cout << "cols = " << map.matrix.cols() << "\n";
    std::cout << "rank = " << rank << "\n";
    std::cout << "kernel.dim = " << map.matrix.cols() - rank << "\n";
    for (int i = 0; i < map.matrix.rows(); ++i)
        std::cout << "row" << i << " = " << row_str(map.matrix, i) << "\n";
    return 0;
}

int run_minrank(const std::string& path, const std::string& mode_text, std::uint64_t seed,
                int hypothesis_k) {
    FormAlgebra a = load_form_algebra(path);
    a.ensure_valid();
    if (a.available_degree() < 2)
        throw DimensionError("kernel of psi_2 needs degree-2 data, but h stops at H^" +
                             std::to_string(a.available_degree()));
    std::vector<Bivector> kernel = kernel_bivectors(a);
    MinRankMode mode = parse_minrank_mode(mode_text, seed);
    RankCertificate cert = min_rank_in_subspace(kernel, mode);
    std::cout << "report = minrank v1\n";
    std::cout << "input = " << path << "\n";
    std::cout << "kernel.dim = " << kernel.size() << "\n";
    std::cout << certificate_report(cert, "minrank.");
    if (hypothesis_k > 0) {
        std::cout << "hypothesis.k = " << hypothesis_k << "\n";
        std::cout << "hypothesis.requires = min rank > " << 2 * hypothesis_k << "\n";
        std::string holds = "unknown";
        if (!cert.min_rank) {
            holds = "yes";
        } else if (cert.upper_bound_only) {
            if (*cert.min_rank <= 2 * hypothesis_k) holds = "no";
        } else if (*cert.min_rank > 2 * hypothesis_k) {
            holds = "yes";
        } else if (cert.lifted_rank && *cert.lifted_rank <= 2 * hypothesis_k) {
            holds = "no";
        }
        std::cout << "hypothesis.holds = " << holds << "\n";
    }
    return 0;
}

int run_bgg_probe(const FormAlgebra& a, const std::string& path, const std::string& basis_path,
                  int r) {
    ExactMatrix W = load_basis(basis_path, a.q(), a.field());
    ComplexInstance c = build_complex(a, W, r);
    ExactnessReport report = exactness_at(c);
    std::cout << "report = bgg v1\n";
    std::cout << "input = " << path << "\n";
    std::cout << "r = " << r << "\n";
    std::cout << "k = " << W.rows() << "\n";
    std::cout << "n = " << c.n << "\n";
    std::cout << "truncated = " << (c.truncated ? "yes" : "no") << "\n";
    std::vector<int> terms = c.source_dims;
    terms.push_back(c.target_dims.back());
    std::cout << "terms = " << join_ints(terms) << "\n";
    std::cout << "ranks = " << join_ints(report.ranks) << "\n";
    std::cout << "injective_at_0 = " << (report.injective_at_0 ? "yes" : "no") << "\n";
    for (size_t i = 0; i < report.exact_middle.size(); ++i)
        std::cout << "exact.term" << i + 1 << " = " << (report.exact_middle[i] ? "yes" : "no")
                  << "\n";
    std::cout << "coker_dim = " << report.coker_dim << "\n";
    std::cout << "all_exact = " << (report.all_exact() ? "yes" : "no") << "\n";
    return 0;
}

int run_bgg(const std::string& path, int r, int k, int samples, std::uint64_t seed,
            const std::string& basis_path) {
    FormAlgebra a = load_form_algebra(path);
    a.ensure_valid();
    if (!basis_path.empty()) return run_bgg_probe(a, path, basis_path, r);
    SampleReport report = generic_exactness_sample(a, k, r, samples, seed);
    std::cout << "report = bgg-sample v1\n";
    std::cout << "input = " << path << "\n";
    std::cout << "r = " << r << "\n";
    std::cout << "k = " << k << "\n";
    std::cout << "samples = " << report.n_total << "\n";
    std::cout << "seed = " << seed << "\n";
    std::cout << "n_exact = " << report.n_exact << "\n";
    std::cout << "all_exact = " << (report.n_exact == report.n_total ? "yes" : "no") << "\n";
    if (report.first_failure) {
        std::cout << "first_failure.sample = " << report.first_failure->first << "\n";
        const ExactMatrix& W = report.first_failure->second;
        for (int i = 0; i < W.rows(); ++i)
            std::cout << "first_failure.row" << i << " = " << row_str(W, i) << "\n";
    }
    return 0;
}

int run_bounds(const std::string& path) {
    FormAlgebra a = load_form_algebra(path);
    a.ensure_valid();
    BoundRhs aggregate = bound_rhs(a.q(), a.d());
    std::cout << "report = bounds v1\n";
    std::cout << "input = " << path << "\n";
    std::cout << "algebra.q = " << a.q() << "\n";
    std::cout << "algebra.d = " << a.d() << "\n";
    if (a.available_degree() >= 2) std::cout << "algebra.h2 = " << a.h()[2] << "\n";
    for (const auto& [r, value] : aggregate.per_r)
        std::cout << "bound.r" << r << ".value = " << value << "\n";
    std::cout << "bound.aggregate.value = " << aggregate.value << "\n";
    std::cout << "bound.aggregate.maximizing_r = " << aggregate.maximizing_r << "\n";
    return 0;
}

int run_verify(const std::string& path, std::uint64_t seed, int samples) {
    FormAlgebra a = load_form_algebra(path);
    VerifyOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    VerifyResult result = verify_bounds(a, path, opts);
    std::cout << result.report;
    return result.exit_code;
}

int run_fixtures(const std::string& name, const std::vector<std::string>& params, int depth) {
    auto need = [&](size_t count, const std::string& usage) {
        if (params.size() < count)
            throw std::invalid_argument("fixture '" + name + "' needs " + usage);
    };
    auto as_int = [](const std::string& token) {
        size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
        return value;
    };
    if (name == "abelian") {
        need(1, "one parameter: q");
        std::cout << serialize(FormAlgebra::fixture_abelian(as_int(params[0])));
        return 0;
    }
    if (name == "product") {
        need(2, "two parameters: g1 g2");
        std::cout << serialize(FormAlgebra::fixture_product_of_curves(as_int(params[0]),
                                                                      as_int(params[1])));
        return 0;
    }
    if (name == "quotient") {
        need(3, "parameters: q d <bivector>...");
        int q = as_int(params[0]);
        int d = as_int(params[1]);
        std::vector<ExteriorElement> kernel;
        Field rationals = Field::rationals();
        for (size_t i = 2; i < params.size(); ++i)
            kernel.push_back(parse_bivector_expression(params[i], q, rationals));
        std::cout << serialize(FormAlgebra::fixture_quotient(q, d, kernel, depth));
        return 0;
    }
    throw std::invalid_argument("unknown fixture '" + name +
                                "' (expected abelian, product, or quotient)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic laboratory for graded form algebras: psi maps, "
                 "symmetric-power complexes over Grassmannians, bivector rank "
                 "certificates, and irregularity bounds."};
    app.require_subcommand(1);

    std::string path;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "Parse an algebra file and check its product constraints");
    validate->add_option("file", path, "algebra file, or - for stdin")->required();

    int psi_n = 1;
    auto* psi_cmd = app.add_subcommand("psi", "Print the matrix of psi_n on the wedge basis");
    psi_cmd->add_option("file", path)->required();
    psi_cmd->add_option("--n", psi_n, "degree of the map")->required();

    std::string mode_text = "fp:5";
    int hypothesis_k = 0;
    auto* minrank = app.add_subcommand("minrank", "Minimal bivector rank in ker psi_2");
    minrank->add_option("file", path)->required();
    minrank->add_option("--mode", mode_text, "fp:<p>, rand:<samples>, or consensus");
    minrank->add_option("--seed", seed, "seed for rand mode");
    minrank->add_option("--k", hypothesis_k, "also report whether min rank > 2k");

    int bgg_r = 2, bgg_k = 0, bgg_samples = 50;
    std::string basis_path;
    auto* bgg = app.add_subcommand("bgg", "Exactness of the symmetric-power complex");
    bgg->add_option("file", path)->required();
    bgg->add_option("--r", bgg_r, "symmetric power (complex level)")->required();
    auto* k_opt = bgg->add_option("--k", bgg_k, "sample subspaces of dimension 2k");
    bgg->add_option("--samples", bgg_samples, "number of sampled subspaces");
    bgg->add_option("--seed", seed, "sampling seed");
    auto* at_opt = bgg->add_option("--at", basis_path, "probe one subspace from a basis file");
    at_opt->excludes(k_opt);

    auto* bounds = app.add_subcommand("bounds", "Bound table for the algebra's q and d");
    bounds->add_option("file", path)->required();

    int verify_samples = 10;
    auto* verify = app.add_subcommand("verify", "Certify min rank, then test every applicable bound");
    verify->add_option("file", path)->required();
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--samples", verify_samples, "exactness samples per level");

    std::string fixture_name;
    std::vector<std::string> fixture_params;
    int fixture_depth = 2;
    auto* fixtures = app.add_subcommand("fixtures", "Emit a built-in algebra in file format");
    fixtures->add_option("name", fixture_name, "abelian | product | quotient")->required();
    fixtures->add_option("params", fixture_params, "fixture parameters");
    fixtures->add_option("--depth", fixture_depth, "stored degrees for quotient (2 or 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*validate) return run_validate(path);
        if (*psi_cmd) return run_psi(path, psi_n);
        if (*minrank) return run_minrank(path, mode_text, seed, hypothesis_k);
        if (*bgg) {
            if (basis_path.empty() && k_opt->count() == 0)
                throw std::invalid_argument("bgg needs --k (sampling) or --at (probe)");
            return run_bgg(path, bgg_r, bgg_k, bgg_samples, seed, basis_path);
        }
        if (*bounds) return run_bounds(path);
        if (*verify) return run_verify(path, seed, verify_samples);
        if (*fixtures) return run_fixtures(fixture_name, fixture_params, fixture_depth);
    } catch (const gbgg::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const gbgg::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
