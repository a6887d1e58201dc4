#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qmhs/closed_forms.hpp>
#include <qmhs/ids.hpp>
#include <qmhs/sums.hpp>

#include <map>
#include <stdexcept>
#include <vector>

using namespace qmhs;

namespace {

Rational z_rat(int n, std::vector<int> entries) {
    return as_rational(z_dp(n, Composition(std::move(entries))));
}

ParamTuple params(std::map<std::string, int> kv) {
    ParamTuple p;
    for (const auto& [k, v] : kv) p.set(k, v);
    return p;
}

}  // namespace

TEST_CASE("binomial extends by zero outside the triangle") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(-1, 0) == Rational(0));
    CHECK(binomial(6, -1) == Rational(0));
    CHECK(binomial(0, 0) == Rational(1));
    CHECK(binomial(40, 20) == Rational::from_string("137846528820"));
    // Pascal everywhere the convention applies
    for (long a = 0; a <= 12; ++a)
        for (long b = 0; b <= a + 2; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(binomial(a + 1, b) == binomial(a, b) + binomial(a, b - 1));
        }
}

TEST_CASE("all-ones closed form counts the nested sum") {
    CHECK(cf_all_ones(5, 2) == Rational(2));
    CHECK(cf_all_ones(4, 0) == Rational(1));
    for (int n = 2; n <= 10; ++n)
        for (int m = 0; m <= n - 1; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(cf_all_ones(n, m) == z_rat(n, std::vector<int>(static_cast<size_t>(m), 1)));
        }
    CHECK_THROWS_AS(cf_all_ones(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(cf_all_ones(3, -1), std::invalid_argument);
}

TEST_CASE("depth-one determinant form equals the power sum") {
    CHECK(cf_depth1_det(4, 2) == Rational(1, 4));
    CHECK(cf_depth1_det(3, 3) == Rational(0));
    CHECK(cf_depth1_det(9, 1) == Rational(4));
    for (int n = 2; n <= 12; ++n)
        for (int s = 1; s <= 6; ++s) {
            CAPTURE(n);
            CAPTURE(s);
            CHECK(cf_depth1_det(n, s) == power_sum(n, s));
        }
    CHECK_THROWS_AS(cf_depth1_det(4, 0), std::invalid_argument);
}

TEST_CASE("negative-exponent closed form") {
    CHECK(cf_negative(5, 2, 1) == Rational(10));
    CHECK(cf_negative(4, 2, 2) == Rational(4));
    CHECK(cf_negative(3, 1, 2) == Rational(3));
    for (int b : {1, 2})
        for (int n = 2; n <= 9; ++n)
            for (int l = 0; l <= n - 1; ++l) {
                CAPTURE(b);
                CAPTURE(n);
                CAPTURE(l);
                CHECK(cf_negative(n, l, b) == z_rat(n, std::vector<int>(static_cast<size_t>(l), -b)));
            }
    CHECK_THROWS_AS(cf_negative(5, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(cf_negative(5, -1, 1), std::invalid_argument);
}

TEST_CASE("asymmetric pair closed form") {
    CHECK(cf_asym_pair(4, 1) == Rational(1, 2));
    CHECK(cf_asym_pair(8, 2) == Rational(-7, 4));
    CHECK(cf_asym_pair(7, 2) == Rational(0));
    for (int n = 4; n <= 9; ++n)
        for (int m = 1; m <= n - 3; ++m)
            for (int a = 0; a <= m - 1; ++a) {
                int b = m - 1 - a;
                std::vector<int> front(static_cast<size_t>(a), 1);
                std::vector<int> back(static_cast<size_t>(b), 1);
                std::vector<int> fwd = front;
                fwd.push_back(2);
                fwd.insert(fwd.end(), back.begin(), back.end());
                std::vector<int> rev = back;
                rev.push_back(2);
                rev.insert(rev.end(), front.begin(), front.end());
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(b);
                // the two summands are irrational on their own; only the
                // sum drops back into Q
                Cyclotomic total = z_dp(n, Composition(std::move(fwd))) +
                                   z_dp(n, Composition(std::move(rev)));
                CHECK(Cyclotomic::from_rational(n, cf_asym_pair(n, m)) == total);
            }
}

TEST_CASE("two-one symmetrized closed form") {
    CHECK(cf_y_two_one(4, 2, 1) == Rational(3, 4));
    CHECK(cf_y_two_one(3, 2, 1) == Rational(1, 3));
    for (int n = 2; n <= 8; ++n)
        for (int m = 1; m <= n - 1; ++m)
            for (int r = 0; r <= m; ++r) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(r);
                CHECK(cf_y_two_one(n, m, r) ==
                      y_dp(n, MultisetIndex({{2, r}, {1, m - r}})));
            }
    CHECK_THROWS_AS(cf_y_two_one(4, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(cf_y_two_one(4, 2, -1), std::invalid_argument);
}

TEST_CASE("right-hand sides of the pinned identity instances") {
    CHECK(rhs_value(IdentityId::TH5, params({{"n", 4}, {"m", 2}, {"l", 2}})) ==
          Rational(3, 4));
    CHECK(rhs_value(IdentityId::TH7, params({{"n", 4}, {"m", 1}, {"l", 1}})) ==
          Rational(1));
    CHECK(rhs_value(IdentityId::TH9_PRINTED, params({{"n", 3}, {"m", 1}, {"l", 1}})) ==
          Rational(3));
    CHECK(rhs_value(IdentityId::TH9_CORRECTED, params({{"n", 4}, {"m", 2}, {"l", 1}})) ==
          Rational(4));
    CHECK(rhs_value(IdentityId::THMLNEG, params({{"n", 3}, {"m", 1}, {"l", 1}})) ==
          Rational(1));
    CHECK(rhs_value(IdentityId::TH222111, params({{"n", 4}, {"m", 2}, {"r", 1}})) ==
          Rational(3, 4));
    CHECK(rhs_value(IdentityId::ZZ1M, params({{"n", 5}, {"m", 2}})) == Rational(2));
    CHECK(rhs_value(IdentityId::ZZDET, params({{"n", 4}, {"s", 2}})) == Rational(1, 4));
    CHECK(rhs_value(IdentityId::EQ11112, params({{"n", 4}, {"a", 0}, {"b", 0}})) ==
          Rational(1, 2));
    CHECK(rhs_value(IdentityId::COR5_PRINTED,
                    params({{"n", 3}, {"m", 1}, {"l", 1}, {"A", 2}})) == Rational(1, 3));
}

TEST_CASE("difference identities have zero right-hand side") {
    for (IdentityId id : {IdentityId::PRP5, IdentityId::PRP7, IdentityId::PRP9_PRINTED,
                          IdentityId::PRP9_CORRECTED, IdentityId::PRPML11,
                          IdentityId::PRPMLNEG, IdentityId::CONJ_REVERSAL}) {
        CAPTURE(identity_tag(id));
        ParamTuple p = params({{"n", 5}, {"m", 2}, {"l", 1}, {"s", 0}, {"A", 1}});
        CHECK(rhs_value(id, p) == Rational(0));
    }
}

TEST_CASE("missing parameters are reported by name") {
    CHECK_THROWS_AS(rhs_value(IdentityId::TH5, params({{"n", 4}, {"m", 2}})),
                    std::out_of_range);
    try {
        rhs_value(IdentityId::TH5, params({{"n", 4}, {"m", 2}}));
    } catch (const std::out_of_range& e) {
        CHECK(std::string(e.what()).find("'l'") != std::string::npos);
    }
}
