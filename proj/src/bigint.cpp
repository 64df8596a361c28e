#include "sturmian/bigint.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace sturmian {

double log_int(const Int& z) {
    if (z <= 0) throw std::invalid_argument("log_int: argument must be positive");
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(d) + static_cast<double>(exp) * M_LN2;
}

double log_rat(const Rat& r) {
    if (r <= 0) throw std::invalid_argument("log_rat: argument must be positive");
    return log_int(r.get_num()) - log_int(r.get_den());
}

namespace {

// Evaluate c*q^e into rop with precision sufficient for exact integer
// rounding: the result has about e*bits(q) significant bits, so give the
// intermediate a comfortable margin on top of that.
void scaled_pow(mpfr_t rop, double c, const Int& q, double e) {
    if (c <= 0) throw std::invalid_argument("scaled_pow: c must be positive");
    if (q <= 0) throw std::invalid_argument("scaled_pow: q must be positive");
    mpfr_prec_t bits = static_cast<mpfr_prec_t>(
        std::fabs(e) * static_cast<double>(mpz_sizeinbase(q.get_mpz_t(), 2)) + 128);
    mpfr_set_prec(rop, bits);
    mpfr_t base, ex;
    mpfr_init2(base, bits);
    mpfr_init2(ex, 64);
    mpfr_set_z(base, q.get_mpz_t(), MPFR_RNDN);
    mpfr_set_d(ex, e, MPFR_RNDN);
    mpfr_pow(rop, base, ex, MPFR_RNDN);
    mpfr_mul_d(rop, rop, c, MPFR_RNDN);
    mpfr_clear(base);
    mpfr_clear(ex);
}

} // namespace

Int round_scaled_pow(double c, const Int& q, double e) {
    mpfr_t x;
    mpfr_init2(x, 64);
    scaled_pow(x, c, q, e);
    Int out;
    mpfr_get_z(out.get_mpz_t(), x, MPFR_RNDN);
    mpfr_clear(x);
    if (out < 1) out = 1;
    return out;
}

Int ceil_scaled_pow(double c, const Int& q, double e) {
    mpfr_t x;
    mpfr_init2(x, 64);
    scaled_pow(x, c, q, e);
    mpfr_ceil(x, x);
    Int out;
    mpfr_get_z(out.get_mpz_t(), x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

std::string to_decimal(const Int& z) { return z.get_str(10); }

Int from_decimal(const std::string& s) { return Int(s, 10); }

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace sturmian
