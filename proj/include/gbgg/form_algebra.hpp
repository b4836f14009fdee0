#pragma once

#include <string>
#include <vector>

#include "gbgg/exterior.hpp"
#include "gbgg/matrix.hpp"

namespace gbgg {

struct ValidationReport {
    bool valid = true;
    std::string message;  // names the first violated constraint, empty when valid
};

/// Graded algebra of holomorphic forms, represented abstractly: dimensions
/// h[0..navail] of the graded pieces (navail may stop short of the declared d on
/// truncated instances) and, for each degree 1 <= i < navail, the structure
/// matrices of the degree-one multiplication V (x) H^i -> H^(i+1). The canonical
/// identification V (x) H^0 -> H^1 is implicit. Always over the rationals.
class FormAlgebra {
public:
    /// mult[i-1][j] is the h[i+1] x h[i] matrix of alpha -> e_j * alpha.
    /// Structural requirements: h[0] = 1, h.size() - 1 <= d, mult sized to match.
    /// The semantic (anticommutativity) report is computed once here; read it via
    /// validate().
    FormAlgebra(int d, std::vector<int> h, std::vector<std::vector<ExactMatrix>> mult);

    int d() const { return d_; }
    int q() const { return h_[1]; }
    const std::vector<int>& h() const { return h_; }
    /// Highest degree with a stored dimension; structure maps exist below it.
    int available_degree() const { return static_cast<int>(h_.size()) - 1; }
    const Field& field() const { return field_; }

    /// Structure matrix of multiplication by the basis vector e_j on H^i,
    /// for 1 <= i < available_degree().
    const ExactMatrix& structure_matrix(int i, int j) const;
    /// Matrix of alpha -> v * alpha for an arbitrary v in V; i = 0 returns the
    /// q x 1 matrix of the canonical map H^0 -> H^1.
    ExactMatrix mult_by(int i, const Vec& v) const;

    const ValidationReport& validate() const { return report_; }
    /// Throws std::invalid_argument when the algebra failed validation.
    void ensure_valid() const;

    bool operator==(const FormAlgebra& other) const;

    /// Exterior algebra on q generators: d = q, h[n] = C(q,n), multiplication is
    /// the wedge product. Every psi_n is bijective.
    static FormAlgebra fixture_abelian(int q);
    /// Forms of a product of two curves of genera g1, g2: d = 2, q = g1+g2,
    /// H^2 = V1 (x) V2, so ker psi_2 = L^2 V1 (+) L^2 V2.
    static FormAlgebra fixture_product_of_curves(int g1, int g2);
    /// Synthetic algebra with prescribed ker psi_2: H^2 = L^2 V / K and degree-1
    /// multiplication is the projection. depth 2 stops there (complexes needing
    /// n >= 3 are then unavailable and reported as truncated); depth 3 also
    /// builds H^3 = L^3 V / (V ^ K) with the induced multiplication, which is
    /// what the degree-3 witness checks need.
    static FormAlgebra fixture_quotient(int q, int d, const std::vector<ExteriorElement>& kernel_basis,
                                        int depth = 2);

private:
    int d_;
    std::vector<int> h_;
    Field field_;
    std::vector<std::vector<ExactMatrix>> mult_;
    ValidationReport report_;

    ValidationReport run_validation() const;
};

/// The map psi_n : L^n V -> H^n in the canonical bases, h[n] rows by C(q,n)
/// columns, computed by iterated multiplication down the wedge word.
struct PsiMap {
    int n;
    ExactMatrix matrix;
};

PsiMap psi(const FormAlgebra& a, int n);

}  // namespace gbgg
