#include "gbgg/polynomial.hpp"

#include <algorithm>

#include "gbgg/errors.hpp"

namespace gbgg {

Polynomial::Polynomial(const Field& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (const Scalar& c : coeffs_)
        if (c.field() != field_) throw ScalarMismatchError("polynomial coefficient field mismatch");
    strip();
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& value) {
    return Polynomial(value.field(), {value});
}

Polynomial Polynomial::linear(const Scalar& a, const Scalar& b) {
    return Polynomial(a.field(), {a, b});
}

const Scalar& Polynomial::coeff(int i) const {
    static const Scalar zero_rational = Scalar();
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        if (field_.kind() == ScalarKind::Rational) return zero_rational;
        throw DimensionError("coefficient index out of range for prime-field polynomial");
    }
    return coeffs_[i];
}

const Scalar& Polynomial::lead() const {
    if (coeffs_.empty()) throw DimensionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (field_ != other.field_) throw ScalarMismatchError("polynomial field mismatch");
    std::vector<Scalar> out(std::max(coeffs_.size(), other.coeffs_.size()), field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (Scalar& c : out.coeffs_) c = -c;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (field_ != other.field_) throw ScalarMismatchError("polynomial field mismatch");
    if (is_zero() || other.is_zero()) return Polynomial(field_);
    std::vector<Scalar> out(coeffs_.size() + other.coeffs_.size() - 1, field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& factor) const {
    Polynomial out = *this;
    for (Scalar& c : out.coeffs_) c *= factor;
    out.strip();
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return field_ == other.field_ && coeffs_ == other.coeffs_;
}

Scalar Polynomial::eval(const Scalar& t) const {
    Scalar acc = field_.zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

Polynomial Polynomial::mod(const Polynomial& other) const {
    if (other.is_zero()) throw DimensionError("polynomial modulo zero");
    Polynomial rem = *this;
    Scalar lead_inv = other.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= other.degree()) {
        Scalar factor = rem.lead() * lead_inv;
        int shift = rem.degree() - other.degree();
        std::vector<Scalar> sub(static_cast<size_t>(shift), field_.zero());
        for (const Scalar& c : other.coeffs_) sub.push_back(c * factor);
        rem = rem - Polynomial(field_, std::move(sub));
    }
    return rem;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// Divisors of n (n > 0) by trial division; empty when n is too large to handle.
std::vector<long> small_divisors(const mpz_class& n) {
    if (!n.fits_slong_p()) return {};
    long v = n.get_si();
    if (v <= 0 || v > 1000000000000L) return {};
    std::vector<long> divs;
    for (long f = 1; f * f <= v; ++f) {
        if (v % f) continue;
        divs.push_back(f);
        if (f != v / f) divs.push_back(v / f);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& p) {
    if (p.field().kind() != ScalarKind::Rational)
        throw ScalarMismatchError("rational root search needs a rational polynomial");
    RationalRoots result;
    if (p.is_zero()) throw DimensionError("every value is a root of the zero polynomial");
    Polynomial work = p;
    // Peel off roots at zero first.
    while (work.coeff(0).is_zero() && work.degree() >= 1) {
        std::vector<Scalar> shifted;
        for (int i = 1; i <= work.degree(); ++i) shifted.push_back(work.coeff(i));
        work = Polynomial(p.field(), std::move(shifted));
        if (result.roots.empty()) result.roots.push_back(p.field().zero());
    }
    if (work.degree() < 1) {
        std::sort(result.roots.begin(), result.roots.end(),
                  [](const Scalar& a, const Scalar& b) { return a.rat() < b.rat(); });
        return result;
    }
    // Clear denominators to an integer polynomial.
    mpz_class denom_lcm = 1;
    for (int i = 0; i <= work.degree(); ++i) {
        mpz_class den = work.coeff(i).rat().get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), denom_lcm.get_mpz_t(), den.get_mpz_t());
        denom_lcm = denom_lcm / g * den;
    }
    std::vector<mpz_class> zc(work.degree() + 1);
    for (int i = 0; i <= work.degree(); ++i) {
        mpq_class scaled = work.coeff(i).rat() * mpq_class(denom_lcm);
        zc[i] = scaled.get_num();
    }
    mpz_class content = 0;
    for (const mpz_class& c : zc) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (mpz_class& c : zc) c /= content;
    std::vector<long> nums = small_divisors(abs(zc.front()));
    std::vector<long> dens = small_divisors(abs(zc.back()));
    if (nums.empty() || dens.empty()) {
        result.complete = false;
        return result;
    }
    for (long num : nums)
        for (long den : dens)
            for (int sign : {1, -1}) {
                Scalar candidate = Scalar::rational(sign * num, den);
                if (work.eval(candidate).is_zero()) result.roots.push_back(candidate);
            }
    std::sort(result.roots.begin(), result.roots.end(),
              [](const Scalar& a, const Scalar& b) { return a.rat() < b.rat(); });
    result.roots.erase(std::unique(result.roots.begin(), result.roots.end()), result.roots.end());
    return result;
}

}  // namespace gbgg
