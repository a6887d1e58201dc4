#include "qmhs/polynomial.hpp"

#include <stdexcept>

namespace qmhs {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (c.is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& RationalPolynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    RationalPolynomial rem = a;
    if (a.degree() < b.degree()) return {RationalPolynomial{}, rem};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    std::vector<Rational> r = a.coeffs();
    const auto& d = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational c = r[static_cast<size_t>(k + b.degree())] / b.leading();
        q[static_cast<size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < d.size(); ++j) {
            r[static_cast<size_t>(k) + j] -= c * d[j];
        }
    }
    return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

RationalPolynomial invert_mod(const RationalPolynomial& a, const RationalPolynomial& modulus) {
    // Extended Euclid on (modulus, a), tracking only the cofactor of a.
    RationalPolynomial r0 = modulus, r1 = a;
    RationalPolynomial t0, t1(std::vector<Rational>{Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        RationalPolynomial t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) {
        throw std::domain_error("invert_mod: argument shares a factor with the modulus");
    }
    t0 *= Rational(1) / r0.leading();
    return t0;
}

}  // namespace qmhs
