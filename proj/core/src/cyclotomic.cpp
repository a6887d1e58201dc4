#include "qmhs/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace qmhs {

namespace {

std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, RationalPolynomial>& phi_cache() {
    static std::map<int, RationalPolynomial> c;
    return c;
}

RationalPolynomial cyclotomic_poly_locked(int n) {
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by the cyclotomic polynomials of all proper divisors.
    std::vector<Rational> xn(static_cast<size_t>(n) + 1);
    xn[0] = Rational(-1);
    xn[static_cast<size_t>(n)] = Rational(1);
    RationalPolynomial acc{std::move(xn)};
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(acc, cyclotomic_poly_locked(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic: division not exact");
        acc = std::move(q);
    }
    cache.emplace(n, acc);
    return acc;
}

}  // namespace

RationalPolynomial cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex());
    return cyclotomic_poly_locked(n);
}

namespace detail {

// Shared per-order data: the integer coefficients of Phi_n and, for every
// exponent that can appear before reduction, the coefficient row of
// x^e mod Phi_n.  Built once per order and shared by all values.
struct CycloField {
    int n = 0;
    int phi = 0;
    std::vector<mpz_class> modulus;          // Phi_n, monic, length phi+1
    std::vector<std::vector<mpz_class>> row; // x^e mod Phi_n, e = 0..max_e

    static std::shared_ptr<const CycloField> of(int n);
};

std::shared_ptr<const CycloField> CycloField::of(int n) {
    static std::mutex m;
    static std::map<int, std::shared_ptr<const CycloField>> registry;
    std::lock_guard<std::mutex> lock(m);
    auto it = registry.find(n);
    if (it != registry.end()) return it->second;

    auto f = std::make_shared<CycloField>();
    f->n = n;
    RationalPolynomial phi_poly = cyclotomic_polynomial(n);
    f->phi = phi_poly.degree();
    f->modulus.reserve(static_cast<size_t>(f->phi) + 1);
    for (int k = 0; k <= f->phi; ++k) {
        Rational c = phi_poly.coeff(k);
        if (!c.is_integer()) throw std::logic_error("cyclotomic: non-integer coefficient");
        f->modulus.push_back(c.num());
    }

    const size_t phi = static_cast<size_t>(f->phi);
    const int max_e = std::max(n - 1, 2 * f->phi - 2);
    f->row.resize(static_cast<size_t>(max_e) + 1, std::vector<mpz_class>(phi));
    for (size_t e = 0; e < phi; ++e) f->row[e][e] = 1;
    for (size_t e = phi; e <= static_cast<size_t>(max_e); ++e) {
        // x^e = x * x^(e-1); the overflow at degree phi folds back through
        // x^phi = -(c_0 + c_1 x + ...), Phi_n being monic.
        const auto& prev = f->row[e - 1];
        auto& cur = f->row[e];
        const mpz_class& top = prev[phi - 1];
        for (size_t j = phi; j-- > 1;) cur[j] = prev[j - 1] - top * f->modulus[j];
        cur[0] = -top * f->modulus[0];
    }

    registry.emplace(n, f);
    return f;
}

}  // namespace detail

Cyclotomic::Cyclotomic(std::shared_ptr<const detail::CycloField> field,
                       std::vector<mpz_class> num, mpz_class den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Cyclotomic::normalize() {
    if (sgn(den_) == 0) throw std::logic_error("Cyclotomic: zero denominator");
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g > 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    bool zero = true;
    for (const auto& c : num_) {
        if (sgn(c) != 0) { zero = false; break; }
    }
    if (zero) den_ = 1;
}

Cyclotomic Cyclotomic::zero(int n) {
    auto f = detail::CycloField::of(n);
    std::vector<mpz_class> num(static_cast<size_t>(f->phi));
    return Cyclotomic(std::move(f), std::move(num), 1);
}

Cyclotomic Cyclotomic::one(int n) {
    return from_rational(n, Rational(1));
}

Cyclotomic Cyclotomic::from_rational(int n, const Rational& q) {
    auto f = detail::CycloField::of(n);
    std::vector<mpz_class> num(static_cast<size_t>(f->phi));
    num[0] = q.num();
    return Cyclotomic(std::move(f), std::move(num), q.den());
}

Cyclotomic Cyclotomic::root(int n, int k) {
    auto f = detail::CycloField::of(n);
    int e = k % n;
    if (e < 0) e += n;
    std::vector<mpz_class> num = f->row[static_cast<size_t>(e)];
    return Cyclotomic(std::move(f), std::move(num), 1);
}

Cyclotomic Cyclotomic::from_coeffs(int n, const std::vector<Rational>& coeffs) {
    auto f = detail::CycloField::of(n);
    if (coeffs.size() != static_cast<size_t>(f->phi)) {
        throw std::invalid_argument("Cyclotomic::from_coeffs: need exactly phi(n) coefficients");
    }
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> num(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        num[i] = coeffs[i].num() * (den / coeffs[i].den());
    }
    return Cyclotomic(std::move(f), std::move(num), std::move(den));
}

int Cyclotomic::order() const { return field_->n; }
int Cyclotomic::basis_size() const { return field_->phi; }

Rational Cyclotomic::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= num_.size()) {
        throw std::out_of_range("Cyclotomic::coeff: index outside power basis");
    }
    return Rational(num_[static_cast<size_t>(k)], den_);
}

std::vector<Rational> Cyclotomic::coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) out.emplace_back(c, den_);
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : num_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i) {
        if (sgn(num_[i]) != 0) return false;
    }
    return true;
}

namespace {

void check_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("Cyclotomic: mixed orders in arithmetic");
    }
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same_order(*this, o);
    if (den_ == o.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (size_t i = 0; i < num_.size(); ++i) {
            num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        }
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same_order(*this, o);
    if (den_ == o.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] -= o.num_[i];
    } else {
        for (size_t i = 0; i < num_.size(); ++i) {
            num_[i] = num_[i] * o.den_ - o.num_[i] * den_;
        }
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same_order(*this, o);
    const size_t phi = num_.size();
    std::vector<mpz_class> prod(2 * phi - 1);
    for (size_t i = 0; i < phi; ++i) {
        if (sgn(num_[i]) == 0) continue;
        for (size_t j = 0; j < phi; ++j) {
            if (sgn(o.num_[j]) == 0) continue;
            prod[i + j] += num_[i] * o.num_[j];
        }
    }
    std::vector<mpz_class> out(prod.begin(), prod.begin() + static_cast<long>(phi));
    for (size_t e = phi; e < prod.size(); ++e) {
        if (sgn(prod[e]) == 0) continue;
        const auto& re = field_->row[e];
        for (size_t j = 0; j < phi; ++j) {
            if (sgn(re[j]) != 0) out[j] += prod[e] * re[j];
        }
    }
    num_ = std::move(out);
    den_ *= o.den_;
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& c) {
    for (auto& x : num_) x *= c.num();
    den_ *= c.den();
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("Cyclotomic: mixed orders in comparison");
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

Cyclotomic inverse(const Cyclotomic& a) {
    if (a.is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    const auto& f = *a.field_;
    std::vector<Rational> cs;
    cs.reserve(a.num_.size());
    for (const auto& c : a.num_) cs.emplace_back(c, mpz_class(1));
    RationalPolynomial num_poly{std::move(cs)};

    std::vector<Rational> mod;
    mod.reserve(f.modulus.size());
    for (const auto& c : f.modulus) mod.emplace_back(c);
    RationalPolynomial inv = invert_mod(num_poly, RationalPolynomial{std::move(mod)});

    // a = N(zeta)/den, so 1/a = den * N(zeta)^(-1).
    std::vector<Rational> out(a.num_.size());
    Rational den{a.den_};
    for (int k = 0; k <= inv.degree(); ++k) out[static_cast<size_t>(k)] = inv.coeff(k) * den;
    return Cyclotomic::from_coeffs(f.n, out);
}

Cyclotomic pow(const Cyclotomic& a, int e) {
    if (e == 0) return Cyclotomic::one(a.order());
    Cyclotomic base = e < 0 ? inverse(a) : a;
    unsigned k = e < 0 ? static_cast<unsigned>(-static_cast<long>(e))
                       : static_cast<unsigned>(e);
    Cyclotomic acc = Cyclotomic::one(a.order());
    while (k > 0) {
        if (k & 1u) acc *= base;
        if (k >>= 1u) base *= base;
    }
    return acc;
}

Cyclotomic galois_image(const Cyclotomic& a, int t) {
    const auto& f = *a.field_;
    int tm = t % f.n;
    if (tm < 0) tm += f.n;
    if (std::gcd(tm, f.n) != 1) {
        throw std::invalid_argument("galois_image: exponent not coprime to the order");
    }
    std::vector<mpz_class> out(a.num_.size());
    for (size_t e = 0; e < a.num_.size(); ++e) {
        if (sgn(a.num_[e]) == 0) continue;
        const auto& re = f.row[(e * static_cast<size_t>(tm)) % static_cast<size_t>(f.n)];
        for (size_t j = 0; j < out.size(); ++j) {
            if (sgn(re[j]) != 0) out[j] += a.num_[e] * re[j];
        }
    }
    return Cyclotomic(a.field_, std::move(out), a.den_);
}

Cyclotomic conjugate(const Cyclotomic& a) {
    return galois_image(a, a.order() - 1);
}

Cyclotomic unit_factor(int n, int r, int s) {
    if (n < 2 || r % n == 0) {
        throw std::invalid_argument("unit_factor: need n >= 2 and zeta^r != 1");
    }
    Cyclotomic base = Cyclotomic::one(n) - Cyclotomic::root(n, r);
    return pow(base, -s);
}

NotRationalError::NotRationalError(Cyclotomic v)
    : std::domain_error("cyclotomic value is not rational"), value(std::move(v)) {}

Rational as_rational(const Cyclotomic& a) {
    if (!a.is_rational()) throw NotRationalError(a);
    return a.coeff(0);
}

std::optional<Rational> try_rational(const Cyclotomic& a) {
    if (!a.is_rational()) return std::nullopt;
    return a.coeff(0);
}

UnitTable::UnitTable(int n, bool with_inverses) : n_(n) {
    if (n < 1) throw std::invalid_argument("UnitTable: order must be positive");
    base_.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int r = 1; r < n; ++r) {
        base_.push_back(Cyclotomic::one(n) - Cyclotomic::root(n, r));
    }
    if (!with_inverses || n == 1) return;

    // One inversion per divisor class; Galois maps fill in the rest of each
    // class, since zeta^g goes to zeta^(g t) and t runs over units mod n.
    inv_.reserve(base_.size());
    for (int r = 1; r < n; ++r) inv_.push_back(Cyclotomic::zero(n));  // placeholders
    for (int g = 1; g < n; ++g) {
        if (n % g != 0) continue;
        Cyclotomic ug = inverse(base_[static_cast<size_t>(g - 1)]);
        int q = n / g;
        for (int k = 1; k < q; ++k) {
            if (std::gcd(k, q) != 1) continue;
            int t = k;
            while (std::gcd(t, n) != 1) t += q;
            inv_[static_cast<size_t>(g * k - 1)] = galois_image(ug, t);
        }
    }
}

const Cyclotomic& UnitTable::base(int r) const {
    if (r < 1 || r >= n_) throw std::out_of_range("UnitTable: index outside 1..n-1");
    return base_[static_cast<size_t>(r - 1)];
}

const Cyclotomic& UnitTable::u(int r) const {
    if (r < 1 || r >= n_) throw std::out_of_range("UnitTable: index outside 1..n-1");
    if (inv_.empty()) throw std::logic_error("UnitTable: built without inverses");
    return inv_[static_cast<size_t>(r - 1)];
}

Cyclotomic UnitTable::power(int r, int s) const {
    if (s >= 0) return pow(u(r), s);
    return pow(base(r), -s);
}

}  // namespace qmhs
