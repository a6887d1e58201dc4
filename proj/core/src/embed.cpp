#include <mpfr.h>

#include <algorithm>

#include "qmhs/cyclotomic.hpp"

namespace qmhs {

std::complex<double> embed_complex(const Cyclotomic& a, int digits) {
    digits = std::max(digits, 15);

    // Coefficients can be enormous while the value nearly cancels, so work
    // at their bit size plus the requested decimal precision.
    mpfr_prec_t coeff_bits = mpz_sizeinbase(a.den_.get_mpz_t(), 2);
    for (const auto& c : a.num_) {
        coeff_bits = std::max<mpfr_prec_t>(coeff_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    const mpfr_prec_t prec =
        coeff_bits + static_cast<mpfr_prec_t>(digits * 3.33) + 64;

    const int n = a.order();
    mpfr_t re, im, angle, c, s, t;
    mpfr_inits2(prec, re, im, angle, c, s, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);

    for (size_t k = 0; k < a.num_.size(); ++k) {
        if (sgn(a.num_[k]) == 0) continue;
        mpfr_const_pi(angle, MPFR_RNDN);
        mpfr_mul_si(angle, angle, 2 * static_cast<long>(k), MPFR_RNDN);
        mpfr_div_si(angle, angle, n, MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        mpfr_mul_z(t, c, a.num_[k].get_mpz_t(), MPFR_RNDN);
        mpfr_add(re, re, t, MPFR_RNDN);
        mpfr_mul_z(t, s, a.num_[k].get_mpz_t(), MPFR_RNDN);
        mpfr_add(im, im, t, MPFR_RNDN);
    }
    mpfr_div_z(re, re, a.den_.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(im, im, a.den_.get_mpz_t(), MPFR_RNDN);

    std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpfr_clears(re, im, angle, c, s, t, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace qmhs
