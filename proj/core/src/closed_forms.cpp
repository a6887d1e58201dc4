#include "qmhs/closed_forms.hpp"

#include <stdexcept>
#include <vector>

namespace qmhs {

Rational binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return Rational(out);
}

Rational cf_all_ones(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("cf_all_ones: need n >= 1, m >= 0");
    return binomial(n - 1, m) / Rational(m + 1);
}

Rational cf_depth1_det(int n, int s) {
    if (n < 1 || s < 1) throw std::invalid_argument("cf_depth1_det: need n >= 1, s >= 1");
    // Lower Hessenberg with unit superdiagonal, expanded along the last row:
    // D_k = sum_j (-1)^(k-j) h(k,j) D_(j-1).
    auto h = [n](int i, int j) {
        if (j == 1) return Rational(i, i + 1) * binomial(n - 1, i);
        return Rational(1, i - j + 2) * binomial(n - 1, i - j + 1);
    };
    std::vector<Rational> d(static_cast<size_t>(s) + 1);
    d[0] = Rational(1);
    for (int k = 1; k <= s; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) {
            Rational term = h(k, j) * d[static_cast<size_t>(j - 1)];
            if ((k - j) % 2 != 0) term = -term;
            acc += term;
        }
        d[static_cast<size_t>(k)] = acc;
    }
    return d[static_cast<size_t>(s)];
}

Rational cf_negative(int n, int l, int b) {
    if (n < 1 || l < 0) throw std::invalid_argument("cf_negative: need n >= 1, l >= 0");
    switch (b) {
        case 1:
            return binomial(n, l);
        case 2: {
            Rational tail = Rational(2) * binomial(n, 2 * n - 2 * l);
            if ((n - l - 1) % 2 != 0) tail = -tail;
            return binomial(n, l) + tail;
        }
        default:
            throw std::invalid_argument("cf_negative: exponent base must be 1 or 2");
    }
}

Rational cf_asym_pair(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("cf_asym_pair: need n >= 1, m >= 0");
    return Rational(-(n - 2 * m - 3)) / Rational(static_cast<long>(m + 1) * (m + 2))
         * binomial(n - 1, m);
}

Rational cf_y_two_one(int n, int m, int r) {
    if (n < 2 || m < 0 || r < 0 || r > m) {
        throw std::invalid_argument("cf_y_two_one: need n >= 2 and 0 <= r <= m");
    }
    Rational alt = binomial(n - 1, m + r + 1);
    if (r % 2 != 0) alt = -alt;
    return binomial(m, r) * (binomial(n - 1, m) + alt)
         / Rational(static_cast<long>(r + 1) * n);
}

namespace {

Rational sign_flipped(Rational v, int parity) {
    return parity % 2 == 0 ? v : -v;
}

}  // namespace

Rational rhs_value(IdentityId id, const ParamTuple& p) {
    switch (id) {
        case IdentityId::THNEG1:
            return cf_negative(p.get("n"), p.get("l"), 1);
        case IdentityId::THNEG2:
            return cf_negative(p.get("n"), p.get("l"), 2);
        case IdentityId::ZZ1M:
            return cf_all_ones(p.get("n"), p.get("m"));
        case IdentityId::ZZDET:
            return cf_depth1_det(p.get("n"), p.get("s"));
        case IdentityId::EQ11112:
            return cf_asym_pair(p.get("n"), p.get("a") + p.get("b") + 1);
        case IdentityId::TH5:
        case IdentityId::COR5_PRINTED: {
            const int n = p.get("n"), m = p.get("m"), l = p.get("l");
            return binomial(n - 1, m) * (binomial(n, l) - binomial(m + 1, l))
                 / Rational(static_cast<long>(n) * (m + 1));
        }
        case IdentityId::TH5_REM1: {
            const int n = p.get("n"), m = p.get("m");
            return Rational(n - m - 1) * binomial(n - 1, m)
                 / Rational(static_cast<long>(n) * (m + 1));
        }
        case IdentityId::TH5_REM2: {
            const int n = p.get("n"), m = p.get("m");
            return Rational(static_cast<long>(n + m) * (n - m - 1)) * binomial(n - 1, m)
                 / Rational(2L * n * (m + 1));
        }
        case IdentityId::TH7: {
            const int n = p.get("n"), m = p.get("m"), l = p.get("l");
            return (binomial(n - 1, m) + sign_flipped(binomial(n - 1, 2 * m + 1), m))
                 * binomial(n, l) / Rational(static_cast<long>(n) * (m + 1));
        }
        case IdentityId::TH7_REM1: {
            const int n = p.get("n"), m = p.get("m");
            return (binomial(n - 1, m) + sign_flipped(binomial(n - 1, 2 * m + 1), m))
                 / Rational(m + 1);
        }
        case IdentityId::TH9_PRINTED:
        case IdentityId::TH9_CORRECTED: {
            // C(n, n-l) + 2(-1)^(n-l-1) C(n, 2n-2l) is cf_negative's B = 2 form.
            const int n = p.get("n"), m = p.get("m"), l = p.get("l");
            return binomial(n - 1, m) * cf_negative(n, l, 2) / Rational(m + 1);
        }
        case IdentityId::THML11: {
            const int n = p.get("n"), m = p.get("m"), l = p.get("l");
            return binomial(n - 1, m) * binomial(n - 1, l)
                 / Rational(static_cast<long>(m + 1) * (l + 1));
        }
        case IdentityId::TH222111:
            return cf_y_two_one(p.get("n"), p.get("m"), p.get("r"));
        case IdentityId::TH222111_R0: {
            const int n = p.get("n"), m = p.get("m");
            return binomial(n, m + 1) / Rational(n);
        }
        case IdentityId::TH222111_RM1: {
            const int n = p.get("n"), m = p.get("m");
            return (binomial(n - 1, m) + sign_flipped(binomial(n - 1, 2 * m), m - 1))
                 / Rational(n);
        }
        case IdentityId::TH222111_RM: {
            const int n = p.get("n"), m = p.get("m");
            return (binomial(n - 1, m) + sign_flipped(binomial(n - 1, 2 * m + 1), m))
                 / Rational(static_cast<long>(m + 1) * n);
        }
        case IdentityId::THMLNEG: {
            const int n = p.get("n"), m = p.get("m"), l = p.get("l");
            return binomial(n, m) * binomial(n, l) / Rational(static_cast<long>(n) * n);
        }
        case IdentityId::PRP5:
        case IdentityId::PRP5_GENERAL_A:
        case IdentityId::PRP7:
        case IdentityId::PRP9_PRINTED:
        case IdentityId::PRP9_CORRECTED:
        case IdentityId::PRPML11:
        case IdentityId::PRPMLNEG:
        case IdentityId::CONJ_REVERSAL:
            // Checked as difference-against-zero.
            return Rational(0);
    }
    throw std::invalid_argument("rhs_value: unknown identity");
}

}  // namespace qmhs
