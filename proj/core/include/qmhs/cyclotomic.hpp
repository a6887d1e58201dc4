#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmhs/polynomial.hpp"
#include "qmhs/rational.hpp"

namespace qmhs {

namespace detail {
struct CycloField;
}

// n-th cyclotomic polynomial Phi_n, monic with integer coefficients,
// computed by exact division of x^n - 1 by the Phi_d over proper divisors d.
RationalPolynomial cyclotomic_polynomial(int n);

// Element of Q(zeta_n), zeta_n = exp(2*pi*i/n), written in the power basis
// 1, zeta, ..., zeta^(phi(n)-1).  Internally the coefficient vector is kept
// as integer numerators over one positive denominator with common content
// removed, so equal values always have identical representations.
class Cyclotomic {
public:
    static Cyclotomic zero(int n);
    static Cyclotomic one(int n);
    static Cyclotomic root(int n, int k = 1);  // zeta_n^k
    static Cyclotomic from_rational(int n, const Rational& q);
    static Cyclotomic from_coeffs(int n, const std::vector<Rational>& coeffs);

    int order() const;
    int basis_size() const;  // phi(n)
    Rational coeff(int k) const;
    std::vector<Rational> coeffs() const;
    bool is_zero() const;
    bool is_rational() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& c);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& c) { return a *= c; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    Cyclotomic(std::shared_ptr<const detail::CycloField> field,
               std::vector<mpz_class> num, mpz_class den);
    void normalize();

    std::shared_ptr<const detail::CycloField> field_;
    std::vector<mpz_class> num_;
    mpz_class den_;

    friend Cyclotomic inverse(const Cyclotomic&);
    friend Cyclotomic galois_image(const Cyclotomic&, int);
    friend std::complex<double> embed_complex(const Cyclotomic&, int);
};

// Multiplicative inverse via extended polynomial gcd with Phi_n.
Cyclotomic inverse(const Cyclotomic& a);

// a^e for any integer e (negative exponents invert first).
Cyclotomic pow(const Cyclotomic& a, int e);

// Image under the automorphism zeta -> zeta^t; requires gcd(t, n) = 1.
Cyclotomic galois_image(const Cyclotomic& a, int t);

// Complex conjugation, zeta -> zeta^(n-1).
Cyclotomic conjugate(const Cyclotomic& a);

// u_r^s = (1 - zeta_n^r)^(-s) for 1 <= r <= n-1 and s != 0.
Cyclotomic unit_factor(int n, int r, int s);

struct NotRationalError : std::domain_error {
    explicit NotRationalError(Cyclotomic v);
    Cyclotomic value;
};

// The rational a represents, if all coefficients above the constant vanish.
Rational as_rational(const Cyclotomic& a);  // throws NotRationalError
std::optional<Rational> try_rational(const Cyclotomic& a);

// Numerical embedding at zeta_n = exp(2*pi*i/n).  Evaluation runs at the
// requested decimal precision (>= 15) before rounding to double, since the
// exact coefficients can be huge while the value itself is tiny.
std::complex<double> embed_complex(const Cyclotomic& a, int digits = 30);

// Read-only table of the units u_r = 1/(1 - zeta_n^r) for one order n.
// Building it inverts one representative per divisor class of n and reaches
// the rest through Galois images, so construction stays cheap even when
// phi(n) is large.  Safe to share across threads once built.
class UnitTable {
public:
    explicit UnitTable(int n, bool with_inverses = true);

    int order() const { return n_; }
    bool has_inverses() const { return !inv_.empty(); }
    const Cyclotomic& base(int r) const;  // 1 - zeta^r
    const Cyclotomic& u(int r) const;
    Cyclotomic power(int r, int s) const;  // u_r^s, s != 0

private:
    int n_;
    std::vector<Cyclotomic> base_;
    std::vector<Cyclotomic> inv_;
};

}  // namespace qmhs
