#include <catch2/catch_amalgamated.hpp>

#include "qpl/errors.hpp"
#include "qpl/qseries.hpp"
#include "qpl/zpoly.hpp"

#include "support.hpp"

using qpl::BigInt;
using qpl::QSeries;
using qpl::ZPoly;

namespace {

QSeries geometric_window(long from, long to) {  // q^from + ... + q^to
    std::vector<ZPoly> cs(static_cast<std::size_t>(to - from + 1), ZPoly(1));
    return QSeries::from_coeffs(from, std::move(cs));
}

}  // namespace

TEST_CASE("ZPoly canonical arithmetic") {
    ZPoly a{1, 2};        // 1 + 2z
    ZPoly b{0, -2, 3};    // -2z + 3z^2
    REQUIRE(((a + b) == ZPoly{1, 0, 3}));
    REQUIRE((a - a).is_zero());
    REQUIRE(((a * b) == ZPoly{0, -2, -1, 6}));
    REQUIRE((ZPoly{0, 0, 0}.is_zero()));
    REQUIRE(ZPoly{}.degree() == -1);
    REQUIRE(a.z_coeff(1) == 2);
    REQUIRE(a.z_coeff(5) == 0);
    REQUIRE(ZPoly(-1).is_constant_plus_minus_one());
    REQUIRE_FALSE((ZPoly{1, 1}.is_constant_plus_minus_one()));
    REQUIRE((ZPoly{3, 0, 1}.str() == "3 + z^2"));
    REQUIRE((ZPoly{-1, -2}.str() == "-1 - 2*z"));
}

TEST_CASE("add: cancellation keeps the window honest") {
    // (q + q^2) + (-q) reads as q^2 with valid_to = min of the inputs
    QSeries a = QSeries::from_coeffs(1, {ZPoly(1), ZPoly(1)});         // q + q^2
    QSeries b = QSeries::from_coeffs(1, {ZPoly(-1)});                  // -q
    QSeries s = add(a, b);
    REQUIRE(s.valid_to() == 1);
    REQUIRE(s.coefficient(1).is_zero());

    QSeries b_wide = QSeries::polynomial(1, {ZPoly(-1)}, 2);
    QSeries s2 = add(a, b_wide);
    REQUIRE(s2.valid_to() == 2);
    REQUIRE(s2.coefficient(1).is_zero());
    REQUIRE(s2.coefficient(2) == ZPoly(1));
}

TEST_CASE("add: identity and doubling") {
    QSeries s = QSeries::from_coeffs(-1, {ZPoly(2), ZPoly{1, 1}, ZPoly(5)});
    REQUIRE(add(s, QSeries::zero(s.valid_to())) == s);

    QSeries one_plus_q = QSeries::from_coeffs(0, {ZPoly(1), ZPoly(1)});
    QSeries doubled = add(one_plus_q, one_plus_q);
    REQUIRE(doubled.coefficient(0) == ZPoly(2));
    REQUIRE(doubled.coefficient(1) == ZPoly(2));
}

TEST_CASE("mul: telescoping stays exact through valid_to") {
    const long N = 12;
    QSeries one_minus_q = QSeries::polynomial(0, {ZPoly(1), ZPoly(-1)}, N);
    QSeries geo = geometric_window(0, N);
    QSeries prod = mul(one_minus_q, geo);
    REQUIRE(prod.valid_to() == N);
    REQUIRE(prod.coefficient(0) == ZPoly(1));
    for (long n = 1; n <= N; ++n) REQUIRE(prod.coefficient(n).is_zero());
}

TEST_CASE("mul: marker square and Laurent shift") {
    QSeries f = QSeries::polynomial(0, {ZPoly(1), ZPoly{0, 1}}, 2);  // 1 + z q
    QSeries sq = mul(f, f);
    REQUIRE(sq.coefficient(0) == ZPoly(1));
    REQUIRE((sq.coefficient(1) == ZPoly{0, 2}));
    REQUIRE((sq.coefficient(2) == ZPoly{0, 0, 1}));

    QSeries qinv = QSeries::monomial(ZPoly(1), -1, 3);
    QSeries g = QSeries::from_coeffs(1, {ZPoly(1), ZPoly(0), ZPoly(1)});  // q + q^3
    QSeries shifted = mul(qinv, g);
    REQUIRE(shifted.min_exp() == 0);
    REQUIRE(shifted.coefficient(0) == ZPoly(1));
    REQUIRE(shifted.coefficient(1).is_zero());
    REQUIRE(shifted.coefficient(2) == ZPoly(1));
}

TEST_CASE("invert_unit: geometric series and identity") {
    QSeries one_minus_q = QSeries::polynomial(0, {ZPoly(1), ZPoly(-1)}, 5);
    QSeries inv = invert_unit(one_minus_q, 5);
    for (long n = 0; n <= 5; ++n) REQUIRE(inv.coefficient(n) == ZPoly(1));

    REQUIRE(invert_unit(QSeries::one(5), 5) == QSeries::one(5));
}

TEST_CASE("invert_unit: oracle = partitions into parts 1 and 2") {
    // 1 / ((1-q)(1-q^2)) counts partitions of n with parts in {1, 2}
    QSeries a = mul(QSeries::polynomial(0, {ZPoly(1), ZPoly(-1)}, 8),
                    QSeries::polynomial(0, {ZPoly(1), ZPoly(0), ZPoly(-1)}, 8));
    QSeries inv = invert_unit(a, 4);
    const long expected[] = {1, 1, 2, 2, 3};
    for (long n = 0; n <= 4; ++n) {
        REQUIRE(inv.coefficient(n) == ZPoly(expected[n]));
        REQUIRE(inv.coefficient(n) ==
                ZPoly(qpl_test::count_partitions_with_parts(static_cast<int>(n), {1, 2})));
    }
}

TEST_CASE("invert_unit: input must certify the requested order") {
    QSeries narrow = QSeries::from_coeffs(0, {ZPoly(1), ZPoly(-1)});  // valid to 1 only
    REQUIRE_THROWS_AS(invert_unit(narrow, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(invert_unit(QSeries::one(3), -1), std::invalid_argument);
    REQUIRE_THROWS_AS(dilate(QSeries::one(3), 0), std::invalid_argument);
}

TEST_CASE("invert_unit: rejects non-units") {
    QSeries no_constant = QSeries::from_coeffs(1, {ZPoly(1), ZPoly(1)});
    REQUIRE_THROWS_AS(invert_unit(no_constant, 1), qpl::NotAUnit);

    QSeries constant_two = QSeries::polynomial(0, {ZPoly(2)}, 4);
    REQUIRE_THROWS_AS(invert_unit(constant_two, 4), qpl::NotAUnit);

    QSeries marker_unit = QSeries::polynomial(0, {ZPoly{1, 1}}, 4);  // constant term 1 + z
    REQUIRE_THROWS_AS(invert_unit(marker_unit, 4), qpl::NotAUnit);

    QSeries laurent = QSeries::from_coeffs(-1, {ZPoly(1), ZPoly(1)});
    REQUIRE_THROWS_AS(invert_unit(laurent, 0), qpl::NotAUnit);

    // negative-exponent window is fine when the stored entries there are zero
    QSeries padded = QSeries::polynomial(0, {ZPoly(-1), ZPoly(1)}, 4).padded_down_to(-2);
    QSeries inv = invert_unit(padded, 3);
    REQUIRE(mul(padded, inv).coefficient(0) == ZPoly(1));
}

TEST_CASE("dilate: exponent scaling and gap zeros") {
    QSeries s = QSeries::from_coeffs(0, {ZPoly(1), ZPoly(1)});  // 1 + q
    QSeries d2 = dilate(s, 2);
    REQUIRE(d2.valid_to() == 3);
    REQUIRE(d2.coefficient(0) == ZPoly(1));
    REQUIRE(d2.coefficient(1).is_zero());
    REQUIRE(d2.coefficient(2) == ZPoly(1));
    REQUIRE(d2.coefficient(3).is_zero());

    REQUIRE(dilate(s, 1) == s);

    QSeries g = QSeries::from_coeffs(1, {ZPoly(1), ZPoly(2)});  // q + 2q^2
    QSeries d3 = dilate(g, 3);
    REQUIRE(d3.min_exp() == 3);
    REQUIRE(d3.valid_to() == 8);
    REQUIRE(d3.coefficient(3) == ZPoly(1));
    REQUIRE(d3.coefficient(6) == ZPoly(2));
    REQUIRE(d3.coefficient(7).is_zero());
}

TEST_CASE("coefficient: strict window contract") {
    QSeries s = QSeries::from_coeffs(0, {ZPoly(1), ZPoly(0), ZPoly(3)});  // 1 + 3q^2
    REQUIRE(s.coefficient(2) == ZPoly(3));
    REQUIRE(s.coefficient(1).is_zero());
    REQUIRE_THROWS_AS(s.coefficient(3), qpl::OutOfValidRange);
    REQUIRE_THROWS_AS(s.coefficient(-1), qpl::OutOfValidRange);
    REQUIRE_THROWS_AS(s.coefficient_or_zero(3), qpl::OutOfValidRange);
    REQUIRE(s.coefficient_or_zero(-5).is_zero());
}

TEST_CASE("ring laws, inversion and dilation on random series") {
    qpl_test::SeriesGen gen(0x5eed5eedULL);
    for (int trial = 0; trial < 300; ++trial) {
        QSeries a = gen.rand_series();
        QSeries b = gen.rand_series();
        QSeries c = gen.rand_series();

        REQUIRE(add(a, b) == add(b, a));
        REQUIRE(add(add(a, b), c) == add(a, add(b, c)));
        REQUIRE(mul(a, b) == mul(b, a));
        REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
        REQUIRE(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));

        const long d = gen.rint(1, 3);
        REQUIRE(dilate(mul(a, b), d) == mul(dilate(a, d), dilate(b, d)));

        QSeries u = gen.rand_unit_series();
        QSeries inv = invert_unit(u, u.valid_to());
        REQUIRE(mul(u, inv) == QSeries::one(u.valid_to()));

        // no value beyond the computed valid_to is ever visible
        QSeries prod = mul(a, b);
        REQUIRE_THROWS_AS(prod.coefficient(prod.valid_to() + 1), qpl::OutOfValidRange);
        REQUIRE(prod.valid_to() ==
                std::min(a.valid_to() + b.min_exp(), b.valid_to() + a.min_exp()));
    }
}
