#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "psb/construction.hpp"
#include "psb/fixedlog.hpp"

namespace psb {

// Reference values: A_n for n <= 9 and B_n for n <= 15.
const mpz_class& table_A(int n);
const mpz_class& table_B(int n);
constexpr int kTableBMax = 15;

// Exact symbolic sum of coeff * log2(base) terms; decimals are evaluated with
// outward rounding so a lower bound never gets rounded up (and vice versa).
struct LogBound {
    enum class Direction { lower, upper };

    std::map<mpz_class, mpq_class> terms;  // base -> coefficient
    Direction direction = Direction::lower;

    void add(const mpq_class& coeff, const mpz_class& base);
    void add_scaled(const LogBound& o, const mpq_class& factor);

    Ival eval(int digits) const;
    // Exact rational value when every base is a power of two.
    std::optional<mpq_class> exact_value() const;

    // Directed decimal per `direction`.
    std::string decimal(int digits) const;
    // Deterministic rendering of the symbolic terms.
    std::string exact_str() const;
};

struct BoundReport {
    std::string which;
    Name name;
    long n = 0;
    LogBound log2_lower;

    Ival normalized(int digits) const;  // eval / n^2
};

// Halving recurrence 2^(n^2/8 - n/4) * B_(n/2), table base for n <= 15.
LogBound knuth_lower(long n);
// Thirds grid recurrence 2^(n^2/12) * B_(n/3)^3, table base for n <= 8.
LogBound matousek_lower(long n);
// Tiling recurrence P(n/3,n/3,n/3) * B_(n/3)^3 with exact P, table base n <= 8.
LogBound fv_lower(long n);
// (n^2+n)/2 * log2(3), rounded up.
LogBound knuth_upper(long n);

// Closed-form growth constant of a construction:
// sum_i lambda_i * log2(B_i) / (k(k-1)).
LogBound construction_constant(Name name);

// Fully unrolled numeric lower bound on log2 B_n driven by exact censuses:
// each level censuses m = largest odd <= n/k lines per bundle and recurses
// with n' = m; no asymptotic terms anywhere.
BoundReport unrolled_lower(Name name, long n, int threads = 1);

}  // namespace psb
