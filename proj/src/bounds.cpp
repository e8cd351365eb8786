#include "psb/bounds.hpp"

#include <array>

#include "psb/census.hpp"
#include "psb/enumeration.hpp"

namespace psb {

namespace {

const std::array<const char*, 10> kTableAStr = {
    "0",  // unused
    "1", "1", "2", "16", "768", "292864", "1100742656", "48608795688960",
    "29258366996258488320"};

const std::array<const char*, 16> kTableBStr = {
    "0",  // unused
    "1", "1", "2", "8", "62", "908", "24698", "1232944", "112018190",
    "18410581880", "5449192389984", "2894710651370536", "2752596959306389652",
    "4675651520558571537540", "14163808995580022218786390"};

}  // namespace

const mpz_class& table_A(int n) {
    static const std::array<mpz_class, 10> vals = [] {
        std::array<mpz_class, 10> v;
        for (size_t i = 0; i < v.size(); ++i) v[i] = mpz_class(kTableAStr[i]);
        return v;
    }();
    if (n < 1 || n > 9) throw usage_error("A_n table covers 1 <= n <= 9");
    return vals[n];
}

const mpz_class& table_B(int n) {
    static const std::array<mpz_class, 16> vals = [] {
        std::array<mpz_class, 16> v;
        for (size_t i = 0; i < v.size(); ++i) v[i] = mpz_class(kTableBStr[i]);
        return v;
    }();
    if (n < 1 || n > kTableBMax) throw usage_error("B_n table covers 1 <= n <= 15");
    return vals[n];
}

void LogBound::add(const mpq_class& coeff, const mpz_class& base) {
    if (base <= 0) throw arithmetic_error("log of a nonpositive base");
    mpq_class c = coeff;
    c.canonicalize();  // raw mpq_class(n, d) inputs may be unreduced
    if (base == 1 || c == 0) return;
    auto [it, inserted] = terms.emplace(base, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

void LogBound::add_scaled(const LogBound& o, const mpq_class& factor) {
    for (const auto& [base, coeff] : o.terms) add(coeff * factor, base);
}

Ival LogBound::eval(int digits) const {
    long prec = prec_for_digits(digits);
    Ival total{0, 0, prec};
    for (const auto& [base, coeff] : terms)
        total += ival_log2_int(base, prec).scaled(coeff);
    return total;
}

std::optional<mpq_class> LogBound::exact_value() const {
    mpq_class total = 0;
    for (const auto& [base, coeff] : terms) {
        if (mpz_popcount(base.get_mpz_t()) != 1) return std::nullopt;
        long e = mpz_sizeinbase(base.get_mpz_t(), 2) - 1;
        total += coeff * e;
    }
    return total;
}

std::string LogBound::decimal(int digits) const {
    Ival v = eval(digits);
    return direction == Direction::lower ? v.decimal_lower(digits) : v.decimal_upper(digits);
}

std::string LogBound::exact_str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [base, coeff] : terms) {
        if (!out.empty()) out += " + ";
        out += Rat(coeff).str() + "*log2(" + base.get_str() + ")";
    }
    return out;
}

Ival BoundReport::normalized(int digits) const {
    return log2_lower.eval(digits).div_int(mpz_class(n) * n);
}

namespace {

mpq_class rq(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return v;
}

}  // namespace

LogBound knuth_lower(long n) {
    if (n < 1) throw usage_error("knuth_lower wants n >= 1");
    LogBound out;
    long cur = n;
    mpq_class extra = 0;
    while (cur > kTableBMax) {
        extra += rq(cur * cur, 8) - rq(cur, 4);
        cur /= 2;
    }
    out.add(extra, 2);
    out.add(1, table_B(static_cast<int>(cur)));
    return out;
}

LogBound matousek_lower(long n) {
    if (n < 1) throw usage_error("matousek_lower wants n >= 1");
    LogBound out;
    long cur = n;
    mpq_class pow = 1, extra = 0;
    while (cur > 8) {
        extra += pow * rq(cur * cur, 12);
        pow *= 3;
        cur /= 3;
    }
    out.add(extra, 2);
    out.add(pow, table_B(static_cast<int>(cur)));
    return out;
}

LogBound fv_lower(long n) {
    if (n < 1) throw usage_error("fv_lower wants n >= 1");
    LogBound out;
    long cur = n;
    mpq_class pow = 1;
    while (cur > 8) {
        long m = cur / 3;
        out.add(pow, macmahon_P(m, m, m).value);
        pow *= 3;
        cur = m;
    }
    out.add(pow, table_B(static_cast<int>(cur)));
    return out;
}

LogBound knuth_upper(long n) {
    if (n < 3) throw usage_error("knuth_upper wants n >= 3");
    LogBound out;
    out.direction = LogBound::Direction::upper;
    out.add(rq(n * n + n, 2), 3);
    return out;
}

LogBound construction_constant(Name name) {
    const ConstructionSpec& spec = get_construction(name);
    mpq_class scale = rq(1, static_cast<long>(spec.k) * (spec.k - 1));
    LogBound out;
    for (const auto& [i, coeff] : predicted_lambda_coefficients(name))
        out.add(coeff.mpq() * scale, table_B(i));
    return out;
}

namespace {

LogBound unrolled_rec(Name name, long n, int threads) {
    LogBound out;
    if (n <= kTableBMax) {
        out.add(1, table_B(static_cast<int>(n)));
        return out;
    }
    const ConstructionSpec& spec = get_construction(name);
    const int k = spec.k;
    if (n < 3L * k) {
        // No further census level fits; fall back on monotonicity of B_n.
        out.add(1, table_B(kTableBMax));
        return out;
    }
    long q = n / k;
    long m = (q % 2 == 1) ? q : q - 1;
    CrossingCensus c = crossing_census(build(name, static_cast<int>(m)), threads);
    for (int i = 3; i <= k; ++i) {
        unsigned long long count = c.lambda_at(i);
        if (count) out.add(mpq_class(static_cast<unsigned long>(count)), table_B(i));
    }
    out.add_scaled(unrolled_rec(name, m, threads), k);
    return out;
}

}  // namespace

BoundReport unrolled_lower(Name name, long n, int threads) {
    const ConstructionSpec& spec = get_construction(name);
    if (n < 3L * spec.k && n > kTableBMax)
        throw usage_error("unrolled_lower wants n >= 3k or a table-sized n");
    BoundReport rep;
    rep.which = "unrolled";
    rep.name = name;
    rep.n = n;
    rep.log2_lower = unrolled_rec(name, n, threads);
    return rep;
}

}  // namespace psb
