#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qmhs {

// Arbitrary-precision rational number, always in lowest terms with a
// positive denominator.  Backed by GMP; this wrapper pins down canonical
// construction, parsing, and printing.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(const mpz_class& value) : v_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& value);

    // Accepts "p", "-p", "p/q" with decimal digits; anything else throws.
    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

}  // namespace qmhs
