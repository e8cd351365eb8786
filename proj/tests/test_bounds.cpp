#include <doctest.h>

#include "psb/bounds.hpp"
#include "psb/census.hpp"

using namespace psb;

namespace {

mpq_class as_q(const mpz_class& mant, long prec) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, prec);
    mpq_class q(mant, d);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("reference table spot checks") {
    CHECK(table_B(3) == 2);
    CHECK(table_B(8) == 1232944);
    CHECK(table_B(15) == mpz_class("14163808995580022218786390"));
    CHECK(table_A(9) == mpz_class("29258366996258488320"));
    CHECK_THROWS_AS(table_B(16), usage_error);
}

TEST_CASE("halving recurrence bound") {
    CHECK(knuth_lower(3).exact_value() == mpq_class(1));
    // n <= 15 is the table base.
    Ival v6 = knuth_lower(6).eval(30);
    CHECK(v6.definitely_less(mpq_class(983, 100)));
    CHECK(v6.definitely_greater(mpq_class(982, 100)));

    // Normalized value sits between the closed form 1/6 - 5/(2n) and 1/6.
    for (long n : {64L, 256L, 1024L}) {
        Ival norm = knuth_lower(n).eval(40).div_int(mpz_class(n) * n);
        CHECK(norm.definitely_greater(mpq_class(1, 6) - mpq_class(5, 2 * n)));
        CHECK(norm.definitely_less(mpq_class(1, 6)));
    }
}

TEST_CASE("thirds recurrence bounds") {
    CHECK(matousek_lower(3).exact_value() == mpq_class(1));
    CHECK(matousek_lower(9).exact_value() == mpq_class(39, 4));  // 81/12 + 3

    Ival m729 = matousek_lower(729).eval(40).div_int(mpz_class(729) * 729);
    CHECK(m729.definitely_less(mpq_class(1, 8)));
    CHECK(m729.definitely_greater(mpq_class(12, 100)));

    LogBound fv9 = fv_lower(9);
    // log2(980) + 3 in [12.93, 12.94]
    Ival v = fv9.eval(30);
    CHECK(v.definitely_greater(mpq_class(1293, 100)));
    CHECK(v.definitely_less(mpq_class(1294, 100)));
    CHECK(fv_lower(3).exact_value() == mpq_class(1));
}

TEST_CASE("lower bounds never exceed the table values at small n") {
    for (int n = 1; n <= 15; ++n) {
        Ival truth = ival_log2_int(table_B(n), prec_for_digits(40));
        for (const LogBound& lb : {knuth_lower(n), matousek_lower(n), fv_lower(n)}) {
            Ival v = lb.eval(40);
            CHECK(as_q(v.lo, v.prec) <= as_q(truth.hi, truth.prec));
        }
    }
}

TEST_CASE("cutpath upper bound") {
    LogBound up = knuth_upper(10);
    CHECK(up.direction == LogBound::Direction::upper);
    Ival v = up.eval(30);
    Ival b10 = ival_log2_int(table_B(10), prec_for_digits(30));
    CHECK(as_q(v.lo, v.prec) > as_q(b10.hi, b10.prec));
    // 55 log2(3) = 87.1729...
    CHECK(v.definitely_greater(mpq_class(8717, 100)));
    CHECK(v.definitely_less(mpq_class(8718, 100)));

    Ival v3 = knuth_upper(3).eval(30);
    CHECK(v3.definitely_greater(mpq_class(1)));
    // Normalized limit log2(3)/2 = 0.7924...
    Ival norm = knuth_upper(100000).eval(40).div_int(mpz_class(100000) * 100000);
    CHECK(norm.definitely_greater(mpq_class(7924, 10000)));
    CHECK(norm.definitely_less(mpq_class(7926, 10000)));
}

TEST_CASE("construction growth constants") {
    CHECK(construction_constant(Name::rect4).exact_value() == mpq_class(1, 6));

    Ival hex6 = construction_constant(Name::hex6).eval(50);
    CHECK(hex6.definitely_greater(mpq_class(1981, 10000)));
    CHECK(hex6.definitely_less(mpq_class(1982, 10000)));

    Ival rect8 = construction_constant(Name::rect8).eval(50);
    CHECK(rect8.definitely_greater(mpq_class(1999, 10000)));

    Ival rect12 = construction_constant(Name::rect12).eval(50);
    CHECK(rect12.definitely_greater(mpq_class(2053, 10000)));

    Ival hex12 = construction_constant(Name::hex12).eval(50);
    CHECK(hex12.definitely_greater(mpq_class(2083, 10000)));

    // Strictly increasing across the four constructions.
    CHECK(as_q(hex6.hi, hex6.prec) < as_q(rect8.lo, rect8.prec));
    CHECK(as_q(rect8.hi, rect8.prec) < as_q(rect12.lo, rect12.prec));
    CHECK(as_q(rect12.hi, rect12.prec) < as_q(hex12.lo, hex12.prec));

    CHECK(construction_constant(Name::hex6).decimal(4) == "0.1981");
    CHECK(construction_constant(Name::rect8).decimal(4) == "0.1999");
    CHECK(construction_constant(Name::rect12).decimal(4) == "0.2053");
    CHECK(construction_constant(Name::hex12).decimal(4) == "0.2083");
}

TEST_CASE("unrolled bound structure at one level") {
    // rect4 at n=36: one census level at m=9, then four table terms.
    BoundReport rep = unrolled_lower(Name::rect4, 36);
    CrossingCensus c = crossing_census(build(Name::rect4, 9));
    LogBound expect;
    expect.add(mpq_class(static_cast<unsigned long>(c.lambda_at(3))), table_B(3));
    expect.add(mpq_class(static_cast<unsigned long>(c.lambda_at(4))), table_B(4));
    expect.add(4, table_B(9));
    CHECK(rep.log2_lower.terms == expect.terms);

    Ival norm = rep.normalized(30);
    CHECK(norm.definitely_less(mpq_class(1)));
    CHECK(norm.definitely_greater(mpq_class(0)));
}

TEST_CASE("unrolled bound equals the table at table-sized n") {
    for (long n : {3L, 9L, 15L}) {
        BoundReport rep = unrolled_lower(Name::hex6, n);
        LogBound expect;
        expect.add(1, table_B(static_cast<int>(n)));
        CHECK(rep.log2_lower.terms == expect.terms);
    }
}

TEST_CASE("interval evaluation nests as precision grows") {
    LogBound lb = knuth_lower(100);
    Ival a = lb.eval(30);
    Ival b = lb.eval(60);
    CHECK(as_q(a.lo, a.prec) <= as_q(b.lo, b.prec));
    CHECK(as_q(b.hi, b.prec) <= as_q(a.hi, a.prec));
}

TEST_CASE("logbound term bookkeeping") {
    LogBound lb;
    lb.add(mpq_class(1, 2), 8);
    lb.add(mpq_class(1, 2), 8);
    lb.add(1, 1);           // log2(1) drops out
    lb.add(0, 908);         // zero coefficient drops out
    CHECK(lb.terms.size() == 1);
    CHECK(lb.exact_value() == mpq_class(3));
    lb.add(mpq_class(-1), 8);
    CHECK(lb.exact_value() == mpq_class(0));
    CHECK(lb.terms.empty());
    CHECK(lb.exact_str() == "0");

    LogBound two;
    two.add(mpq_class(5, 2), 2);
    two.add(1, 908);
    CHECK(two.exact_str() == "5/2*log2(2) + 1*log2(908)");
    CHECK(!two.exact_value().has_value());
}
