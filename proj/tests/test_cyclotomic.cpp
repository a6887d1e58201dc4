#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qmhs/cyclotomic.hpp>
#include <qmhs/polynomial.hpp>

#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace qmhs;

namespace {

int phi(int n) {
    int out = 0;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++out;
    return out;
}

RationalPolynomial x_pow_minus_one(int n) {
    RationalPolynomial p = RationalPolynomial::monomial(n);
    p -= RationalPolynomial::monomial(0);
    return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials have degree phi(n) and divide x^n - 1") {
    for (int n = 1; n <= 100; ++n) {
        CAPTURE(n);
        RationalPolynomial p = cyclotomic_polynomial(n);
        CHECK(p.degree() == phi(n));
        CHECK(p.leading() == Rational(1));
        auto [q, r] = divmod(x_pow_minus_one(n), p);
        CHECK(r.is_zero());
    }
}

TEST_CASE("small cyclotomic polynomials match known coefficients") {
    CHECK(cyclotomic_polynomial(1) ==
          RationalPolynomial(std::vector<Rational>{-1, 1}));
    CHECK(cyclotomic_polynomial(2) ==
          RationalPolynomial(std::vector<Rational>{1, 1}));
    CHECK(cyclotomic_polynomial(4) ==
          RationalPolynomial(std::vector<Rational>{1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) ==
          RationalPolynomial(std::vector<Rational>{1, -1, 1}));
    // First index with a coefficient outside {-1, 0, 1}.
    RationalPolynomial p105 = cyclotomic_polynomial(105);
    CHECK(p105.coeff(7) == Rational(-2));
}

TEST_CASE("roots of unity behave like roots of unity") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15}) {
        CAPTURE(n);
        Cyclotomic z = Cyclotomic::root(n);
        CHECK(pow(z, n) == Cyclotomic::one(n));
        CHECK(z.basis_size() == phi(n));
        if (n >= 2) {
            // 1 + z + ... + z^(n-1) = 0
            Cyclotomic total = Cyclotomic::zero(n);
            for (int k = 0; k < n; ++k) total += Cyclotomic::root(n, k);
            CHECK(total.is_zero());
        }
    }
    CHECK(Cyclotomic::root(5, 7) == Cyclotomic::root(5, 2));
    CHECK(Cyclotomic::root(5, -1) == Cyclotomic::root(5, 4));
}

TEST_CASE("ring operations agree with the polynomial model") {
    int n = 7;
    Cyclotomic z = Cyclotomic::root(n);
    Cyclotomic a = z * z + z * Rational(3, 2);
    Cyclotomic b = pow(z, 5) - Cyclotomic::from_rational(n, Rational(1, 3));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK(a * (b + b) == a * b + a * b);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
}

TEST_CASE("mixed orders are rejected") {
    Cyclotomic a = Cyclotomic::root(5);
    Cyclotomic b = Cyclotomic::root(7);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(a == b), std::invalid_argument);
}

TEST_CASE("inverse multiplies back to one") {
    for (int n : {2, 3, 4, 5, 7, 8, 9, 12}) {
        CAPTURE(n);
        Cyclotomic z = Cyclotomic::root(n);
        Cyclotomic a = z + Cyclotomic::from_rational(n, Rational(2));
        CHECK(a * inverse(a) == Cyclotomic::one(n));
        Cyclotomic u = Cyclotomic::one(n) - z;  // nonzero for n >= 2
        CHECK(u * inverse(u) == Cyclotomic::one(n));
        CHECK(pow(u, -3) == pow(inverse(u), 3));
    }
    CHECK_THROWS_AS(inverse(Cyclotomic::zero(5)), std::domain_error);
}

TEST_CASE("unit table units multiply to 1/n") {
    for (int n = 2; n <= 24; ++n) {
        CAPTURE(n);
        UnitTable units(n);
        Cyclotomic prod = Cyclotomic::one(n);
        for (int r = 1; r <= n - 1; ++r) prod *= units.u(r);
        CHECK(prod == Cyclotomic::from_rational(n, Rational(1, n)));
    }
}

TEST_CASE("complementary units sum to one") {
    for (int n : {3, 5, 8, 12, 15}) {
        CAPTURE(n);
        UnitTable units(n);
        for (int r = 1; r <= n - 1; ++r) {
            CHECK(units.u(r) + units.u(n - r) == Cyclotomic::one(n));
            CHECK(units.u(r) * units.base(r) == Cyclotomic::one(n));
            CHECK(units.power(r, -2) == units.base(r) * units.base(r));
            CHECK(units.power(r, 3) == pow(units.u(r), 3));
        }
    }
}

TEST_CASE("unit_factor matches the unit table") {
    UnitTable units(9);
    for (int r = 1; r <= 8; ++r) {
        CHECK(unit_factor(9, r, 1) == units.u(r));
        CHECK(unit_factor(9, r, -2) == units.power(r, -2));
    }
    CHECK_THROWS_AS(unit_factor(9, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(unit_factor(9, 18, 2), std::invalid_argument);
}

TEST_CASE("galois maps are ring homomorphisms that permute roots") {
    int n = 12;
    Cyclotomic z = Cyclotomic::root(n);
    Cyclotomic a = z * Rational(2) + pow(z, 5) * Rational(1, 3);
    Cyclotomic b = pow(z, 7) - Cyclotomic::one(n);
    for (int t : {1, 5, 7, 11}) {
        CAPTURE(t);
        CHECK(galois_image(a * b, t) == galois_image(a, t) * galois_image(b, t));
        CHECK(galois_image(a + b, t) == galois_image(a, t) + galois_image(b, t));
        CHECK(galois_image(z, t) == Cyclotomic::root(n, t));
    }
    CHECK_THROWS_AS(galois_image(a, 2), std::invalid_argument);  // gcd(2,12) != 1
    CHECK(galois_image(a, 13) == galois_image(a, 1));            // t mod n
}

TEST_CASE("conjugation is the inverse root map") {
    for (int n : {1, 2, 3, 5, 8, 12}) {
        CAPTURE(n);
        Cyclotomic z = Cyclotomic::root(n);
        Cyclotomic a = z + pow(z, 3) * Rational(2);
        CHECK(conjugate(conjugate(a)) == a);
        CHECK(conjugate(z) == Cyclotomic::root(n, -1));
        // a * conjugate(a) is fixed by conjugation
        Cyclotomic norm = a * conjugate(a);
        CHECK(conjugate(norm) == norm);
    }
}

TEST_CASE("rationality detection") {
    Cyclotomic z = Cyclotomic::root(5);
    CHECK(!z.is_rational());
    CHECK(Cyclotomic::from_rational(5, Rational(7, 3)).is_rational());
    CHECK(as_rational(Cyclotomic::from_rational(5, Rational(7, 3))) == Rational(7, 3));
    CHECK(try_rational(z) == std::nullopt);
    CHECK(*try_rational(z + (-z)) == Rational(0));
    try {
        as_rational(z);
        FAIL("expected NotRationalError");
    } catch (const NotRationalError& e) {
        CHECK(e.value == z);
    }
}

TEST_CASE("from_coeffs wants exactly phi(n) coefficients") {
    std::vector<Rational> two{Rational(1), Rational(2)};
    Cyclotomic a = Cyclotomic::from_coeffs(6, two);  // phi(6) = 2
    CHECK(a.coeff(0) == Rational(1));
    CHECK(a.coeff(1) == Rational(2));
    CHECK(a.coeffs() == two);
    CHECK_THROWS_AS(Cyclotomic::from_coeffs(6, std::vector<Rational>{Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Cyclotomic::from_coeffs(5, two), std::invalid_argument);
}

TEST_CASE("complex embedding approximates the principal root") {
    for (int n : {2, 3, 7, 12, 40}) {
        CAPTURE(n);
        std::complex<double> z = embed_complex(Cyclotomic::root(n));
        double angle = 2.0 * 3.14159265358979323846 / n;
        CHECK(std::abs(z - std::polar(1.0, angle)) < 1e-12);
    }
    std::complex<double> half = embed_complex(Cyclotomic::from_rational(9, Rational(1, 2)));
    CHECK(std::abs(half - std::complex<double>(0.5, 0.0)) < 1e-15);
}
