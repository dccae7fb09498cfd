#pragma once

#include <gmpxx.h>

#include <string>

namespace discpot {

// Exact rational coefficients.  Table entries like 838/3 rule out any
// floating-point mode, so all arithmetic goes through GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

inline Integer factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace discpot
