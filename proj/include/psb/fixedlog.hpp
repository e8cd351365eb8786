#pragma once

#include <gmpxx.h>

#include <string>

namespace psb {

// Closed interval [lo, hi] / 2^prec enclosing a real value. All operations
// round outward, so any value reported from .lo is a valid lower bound and
// any from .hi a valid upper bound.
struct Ival {
    mpz_class lo, hi;
    long prec = 0;

    static Ival exact_int(long v, long prec);
    static Ival exact_rat(const mpq_class& q, long prec);

    Ival operator+(const Ival& o) const;
    Ival& operator+=(const Ival& o);

    // Multiply by an exact rational (sign-aware).
    Ival scaled(const mpq_class& q) const;
    // Divide by a positive integer.
    Ival div_int(const mpz_class& d) const;

    // -1: entirely below q, +1: entirely above q, 0: straddles.
    int cmp(const mpq_class& q) const;
    bool definitely_greater(const mpq_class& q) const { return cmp(q) > 0; }
    bool definitely_less(const mpq_class& q) const { return cmp(q) < 0; }

    // Decimal with the given fractional digits; "lower" floors lo, "upper"
    // ceils hi, so the printed value stays on the safe side.
    std::string decimal_lower(int digits) const;
    std::string decimal_upper(int digits) const;

    double midpoint_double() const;
};

// Enclosures of ln(n) and log2(n) for integer n >= 1.
Ival ival_ln_int(const mpz_class& n, long prec);
Ival ival_log2_int(const mpz_class& n, long prec);

long prec_for_digits(int digits);

}  // namespace psb
