#pragma once

#include <string>
#include <vector>

#include "gbgg/exterior.hpp"
#include "gbgg/form_algebra.hpp"

namespace gbgg {

/// Element of L^2 V held as a skew-symmetric q x q matrix (entry (i,j), i < j, is
/// the coefficient of e_i ^ e_j). Interconverts losslessly with the degree-2
/// ExteriorElement view.
class Bivector {
public:
    explicit Bivector(const ExteriorElement& element);
    Bivector(int ambient_dim, ExactMatrix skew);  // validates skew-symmetry
    static Bivector zero(int ambient_dim, const Field& field);

    int ambient_dim() const { return q_; }
    const Field& field() const { return matrix_.field(); }
    const ExactMatrix& matrix() const { return matrix_; }
    ExteriorElement element() const;

    Bivector operator+(const Bivector& other) const;
    Bivector scaled(const Scalar& factor) const;
    bool is_zero() const { return matrix_.is_zero(); }
    bool operator==(const Bivector& other) const;

    std::string str() const { return element().str(); }

private:
    int q_;
    ExactMatrix matrix_;
};

/// Rank of the representing skew matrix; always even, 0 iff the bivector is zero.
int bivector_rank(const Bivector& v);

/// Pfaffian by recursive first-row expansion; requires even-dimensional skew
/// input, and pfaffian(m)^2 = det(m).
Scalar pfaffian(const ExactMatrix& m);

/// 2k independent vectors with v = sum of v_(2i) ^ v_(2i+1) (pairs in order);
/// empty for v = 0. The recomposition and independence are verified before
/// returning (failure would be a bug, raising InternalError).
std::vector<Vec> skew_normal_form(const Bivector& v);

/// True iff rank(v) <= 2k. For q <= 8 the rank route is cross-checked against
/// the vanishing of all principal (2k+2)-subset Pfaffians; a disagreement raises
/// InternalError.
bool secant_membership(const Bivector& v, int k);

/// True iff w is a nonzero wedge of degree(w) independent vectors, decided by
/// the dimension of its support (the span of all (degree-1)-fold contractions).
bool decomposable(const ExteriorElement& w);

/// The degree-(k+1) decomposable element v_1 ^ v_3 ^ ... ^ v_(2k-1) ^ v_(2k)
/// built from skew_normal_form(v), for v in ker psi_2 of rank 2k (for k = 1 this
/// degenerates to v itself). Verifies that the result is decomposable and that
/// psi_(k+1) kills it; VerificationError otherwise.
ExteriorElement pencil_witness(const Bivector& v, const FormAlgebra& a);

/// Kernel of psi_2 as a deterministic list of bivectors.
std::vector<Bivector> kernel_bivectors(const FormAlgebra& a);

}  // namespace gbgg
