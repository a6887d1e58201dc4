#pragma once

#include <utility>
#include <vector>

#include "qmhs/rational.hpp"

namespace qmhs {

// Dense univariate polynomial over Q, coefficients stored lowest degree
// first.  The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial monomial(int degree, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;  // zero beyond the degree
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Quotient and remainder with deg(rem) < deg(divisor); divisor must be nonzero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

// Inverse of `a` modulo `modulus` via the extended Euclidean algorithm.
// Requires gcd(a, modulus) constant, which holds whenever the modulus is
// irreducible and `a` is a nonzero residue; throws std::domain_error otherwise.
RationalPolynomial invert_mod(const RationalPolynomial& a, const RationalPolynomial& modulus);

}  // namespace qmhs
