#include "qmhs/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qmhs {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpq_class& value) : v_(value) {
    v_.canonicalize();
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
    size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = all_digits(text, start, text.size());
    } else {
        ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
    }
    if (!ok) throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    mpq_class v(text, 10);
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in \"" + text + "\"");
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

}  // namespace qmhs
