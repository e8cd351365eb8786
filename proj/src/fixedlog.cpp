#include "psb/fixedlog.hpp"

#include <stdexcept>

namespace psb {

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
}

// 2*atanh(num/den) = ln((den+num)/(den-num)) for 0 <= num < den, as an
// enclosure at precision prec. Series sum of num^(2j+1)/(den^(2j+1)(2j+1)).
Ival ival_two_atanh(const mpz_class& num, const mpz_class& den, long prec) {
    Ival out{0, 0, prec};
    if (num == 0) return out;
    long work = prec + 32;
    mpz_class scale = pow2(work);
    mpz_class t_lo = floor_div(num * scale, den);
    mpz_class t2_num = num * num, t2_den = den * den;
    // p ~ t^(2j+1) at working precision, kept as under-estimate; the
    // per-term truncation errors are covered by the tail bound below.
    mpz_class p = t_lo;
    mpz_class sum = 0;
    unsigned long j = 0;
    while (p > 0) {
        sum += p / (2 * j + 1);
        p = floor_div(p * t2_num, t2_den);
        ++j;
    }
    // sum under-estimates the series. Each term loses < 4 units at working
    // precision (floor of t, the iterated squares, the 1/(2j+1) division;
    // t <= 1/3 keeps the iterated loss bounded), and once p reaches zero the
    // geometric tail is below 4 more units. All of it vanishes into the
    // 32-bit guard when rescaling to prec.
    mpz_class pad = mpz_class(4 * (j + 2));
    out.lo = floor_div(2 * sum, pow2(32));
    out.hi = ceil_div(2 * (sum + pad), pow2(32));
    return out;
}

const Ival& ival_ln2(long prec) {
    static thread_local Ival cache{0, 0, -1};
    if (cache.prec != prec) {
        cache = ival_two_atanh(1, 3, prec);
        cache.prec = prec;
    }
    return cache;
}

}  // namespace

Ival Ival::exact_int(long v, long prec) {
    mpz_class m = mpz_class(v) * pow2(prec);
    return Ival{m, m, prec};
}

Ival Ival::exact_rat(const mpq_class& q, long prec) {
    mpz_class n = q.get_num() * pow2(prec);
    return Ival{floor_div(n, q.get_den()), ceil_div(n, q.get_den()), prec};
}

Ival Ival::operator+(const Ival& o) const {
    if (prec != o.prec) throw std::logic_error("interval precision mismatch");
    return Ival{lo + o.lo, hi + o.hi, prec};
}

Ival& Ival::operator+=(const Ival& o) {
    *this = *this + o;
    return *this;
}

Ival Ival::scaled(const mpq_class& q) const {
    int s = sgn(q);
    if (s == 0) return Ival{0, 0, prec};
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (s > 0) return Ival{floor_div(lo * n, d), ceil_div(hi * n, d), prec};
    return Ival{floor_div(hi * n, d), ceil_div(lo * n, d), prec};
}

Ival Ival::div_int(const mpz_class& d) const {
    if (d <= 0) throw std::logic_error("div_int wants a positive divisor");
    return Ival{floor_div(lo, d), ceil_div(hi, d), prec};
}

int Ival::cmp(const mpq_class& q) const {
    mpz_class bound = q.get_num() * pow2(prec);
    if (lo * q.get_den() > bound) return 1;
    if (hi * q.get_den() < bound) return -1;
    return 0;
}

namespace {

std::string decimal_from_scaled(const mpz_class& scaled_floor, int digits) {
    bool neg = scaled_floor < 0;
    mpz_class a = abs(scaled_floor);
    std::string ds = a.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    if (digits > 0) ds.insert(ds.size() - digits, ".");
    return (neg ? "-" : "") + ds;
}

}  // namespace

std::string Ival::decimal_lower(int digits) const {
    mpz_class p10 = mpz_class(10);
    mpz_pow_ui(p10.get_mpz_t(), p10.get_mpz_t(), digits);
    return decimal_from_scaled(floor_div(lo * p10, pow2(prec)), digits);
}

std::string Ival::decimal_upper(int digits) const {
    mpz_class p10 = mpz_class(10);
    mpz_pow_ui(p10.get_mpz_t(), p10.get_mpz_t(), digits);
    return decimal_from_scaled(ceil_div(hi * p10, pow2(prec)), digits);
}

double Ival::midpoint_double() const {
    mpq_class mid(lo + hi);
    mid /= mpq_class(pow2(prec + 1));
    return mid.get_d();
}

Ival ival_ln_int(const mpz_class& n, long prec) {
    if (n <= 0) throw std::invalid_argument("ln of a nonpositive integer");
    // n = x * 2^k with x in [1,2); ln x = 2 atanh((x-1)/(x+1)), exact inputs.
    long k = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
    mpz_class p2k = pow2(k);
    Ival lnx = ival_two_atanh(n - p2k, n + p2k, prec);
    Ival ln2 = ival_ln2(prec);
    return Ival{lnx.lo + k * ln2.lo, lnx.hi + k * ln2.hi, prec};
}

Ival ival_log2_int(const mpz_class& n, long prec) {
    if (n <= 0) throw std::invalid_argument("log2 of a nonpositive integer");
    long k = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
    mpz_class p2k = pow2(k);
    if (n == p2k) return Ival::exact_int(k, prec);
    Ival lnx = ival_two_atanh(n - p2k, n + p2k, prec);
    Ival ln2 = ival_ln2(prec);
    mpz_class scale = pow2(prec);
    Ival out{0, 0, prec};
    out.lo = k * scale + floor_div(lnx.lo * scale, ln2.hi);
    out.hi = k * scale + ceil_div(lnx.hi * scale, ln2.lo);
    return out;
}

long prec_for_digits(int digits) {
    return static_cast<long>(digits * 3.3219280948873623) + 64;
}

}  // namespace psb
