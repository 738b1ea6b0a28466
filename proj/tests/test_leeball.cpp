#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "leecode/leeball.hpp"

using namespace leecode;
using namespace leecode::ball;

namespace {

// |B^n(e)| by peeling off one coordinate at a time
Integer count_by_recursion(long n, long e, std::map<std::pair<long, long>, Integer>& memo)
{
    if (e < 0)
        return 0;
    if (n == 0)
        return 1;
    auto key = std::make_pair(n, e);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Integer s = 0;
    for (long x = -e; x <= e; ++x)
        s += count_by_recursion(n - 1, e - std::labs(x), memo);
    return memo[key] = s;
}

Integer sum_first_squared(const PointSet& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        s += Integer(b[i][0]) * b[i][0];
    return s;
}

unsigned long k_mod3_by_digits(long n, long e)
{
    unsigned long r = 1;
    while (n > 0 || e > 0) {
        r = r * arith::mod_ui(lee_ball_size(n % 3, e % 3), 3) % 3;
        n /= 3;
        e /= 3;
    }
    return r;
}

long pow3(int h)
{
    long r = 1;
    while (h-- > 0)
        r *= 3;
    return r;
}

}  // namespace

TEST_CASE("k(n,e) agrees with a recursive count")
{
    std::map<std::pair<long, long>, Integer> memo;
    for (long n = 0; n <= 9; ++n)
        for (long e = 0; e <= 12; ++e)
            REQUIRE(lee_ball_size(n, e) == count_by_recursion(n, e, memo));
}

TEST_CASE("k(n,e) boundary conventions")
{
    CHECK(lee_ball_size(0, 0) == 1);
    CHECK(lee_ball_size(0, 5) == 1);
    CHECK(lee_ball_size(-1, 3) == 0);
    CHECK(lee_ball_size(4, -1) == 0);
    CHECK(lee_ball_size(1, 1) == 3);
    CHECK(lee_ball_size(3, 4) == 129);
    CHECK(lee_ball_size(12, 3) == 2625);
}

TEST_CASE("k is symmetric and the row helper matches")
{
    for (long n = 0; n <= 15; ++n) {
        const auto row = lee_ball_sizes(n, 15);
        for (long e = 0; e <= 15; ++e) {
            REQUIRE(row[e] == lee_ball_size(n, e));
            REQUIRE(lee_ball_size(n, e) == lee_ball_size(e, n));
        }
    }
}

TEST_CASE("k(n,e) against enumeration")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (long e = 0; e <= 5; ++e)
            REQUIRE(enumerate_ball(n, e, Norm::lp(1)).size() == lee_ball_size(long(n), e));
}

TEST_CASE("p(n,e) against enumeration")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (long e = 1; e <= 5; ++e)
            REQUIRE(p1(long(n), e) == sum_first_squared(enumerate_ball(n, e, Norm::lp(1))));
    for (long n = 1; n <= 20; ++n)
        CHECK(p1(n, 1) == 2);
    for (long e = 1; e <= 20; ++e)
        CHECK(p1(1, e) == e * (e + 1) * (2 * e + 1) / 3);
    CHECK(p1(12, 3) == 732);
    CHECK(p1(12, 5) == 45870);
    CHECK(p1(3, 4) == 276);
}

TEST_CASE("k is multiplicative over base-3 digits modulo 3")
{
    for (long n = 0; n < 81; ++n)
        for (long e = 0; e < 81; ++e)
            REQUIRE(arith::mod_ui(lee_ball_size(n, e), 3) == k_mod3_by_digits(n, e));
}

TEST_CASE("periodicity of k mod 9 and p mod 3")
{
    for (int m = 0; m <= 1; ++m) {
        const int h = m + 2;
        for (long n = pow3(m + 1); n < 2 * pow3(m + 1); ++n)
            for (long e = 1; e < pow3(h); ++e)
                for (long a = 1; a <= 2; ++a) {
                    REQUIRE(arith::mod_ui(lee_ball_size(pow3(h + 1) * a + n, e), 9) ==
                            arith::mod_ui(lee_ball_size(n, e), 9));
                    REQUIRE(arith::mod_ui(p1(pow3(h) * a + n, e), 3) == arith::mod_ui(p1(n, e), 3));
                }
    }
}

TEST_CASE("delta3")
{
    CHECK(delta3(1).to_string() == "0");
    CHECK(delta3(3).index() == 1);
    CHECK(delta3(12).index() == 2);  // 110
    CHECK(!delta3(2).is_finite());
    CHECK(!delta3(8).is_finite());  // 22
    CHECK(delta3(2).to_string() == "inf");
    CHECK_THROWS_AS(delta3(0), std::invalid_argument);
    CHECK_THROWS_AS(delta3(2).index(), std::logic_error);
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 60);
    CHECK(delta3(big).index() == 60);
    for (long e = 1; e < 3000; ++e) {
        long best = -1;
        for (long v = e, i = 0; v > 0; v /= 3, ++i)
            if (v % 3 == 1)
                best = i;
        const auto d = delta3(e);
        REQUIRE(d.is_finite() == (best >= 0));
        if (best >= 0)
            REQUIRE(long(d.index()) == best);
    }
}

TEST_CASE("n! k(n,e) as a polynomial in e")
{
    for (int n = 1; n <= 12; ++n) {
        const auto f = scaled_size_polynomial_in_e(n);
        CHECK(f.degree() == n);
        for (long e = 0; e <= 25; ++e)
            REQUIRE(f(e) == arith::factorial(n) * lee_ball_size(n, e));
    }
    CHECK_THROWS_AS(scaled_size_polynomial_in_e(0), std::invalid_argument);
    CHECK(scaled_size_polynomial_in_e(3).to_string() == "8e^3 + 12e^2 + 16e + 6");
    const auto j = scaled_size_polynomial_in_e(3).to_json();
    CHECK(j["variable"] == "e");
    CHECK(j["coefficients"].dump() == R"(["6","16","12","8"])");
}

TEST_CASE("polynomials in n")
{
    for (int e = 1; e <= 6; ++e) {
        const auto k = polynomial_in_n(Quantity::K, e);
        const auto p = polynomial_in_n(Quantity::P1, e);
        CHECK(k.poly.degree() == e);
        CHECK(p.poly.degree() == e - 1);
        for (long n = 1; n <= 40; ++n) {
            REQUIRE(k.poly(n) == k.scale * lee_ball_size(n, e));
            REQUIRE(p.poly(n) == p.scale * p1(n, e));
        }
    }
    // k(n,e) at n = 0 is the constant term over the scale
    CHECK(polynomial_in_n(Quantity::K, 6).scale == 45);
    CHECK(parse_quantity("p2") == Quantity::P2);
    CHECK_THROWS_AS(parse_quantity("p3"), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_in_n(Quantity::K, 0), std::invalid_argument);
}

TEST_CASE("IntPolynomial formatting")
{
    CHECK(IntPolynomial({Integer(-1), Integer(0), Integer(1)}, "n").to_string() == "n^2 - 1");
    CHECK(IntPolynomial({Integer(0), Integer(-3)}, "x").to_string() == "-3x");
    CHECK(IntPolynomial({}, "x").to_string() == "0");
    CHECK(IntPolynomial({Integer(2), Integer(0), Integer(0)}).degree() == 0);
}

TEST_CASE("PointSet text round trip")
{
    const PointSet s(2, {{1, 0}, {-1, 0}, {0, 0}});
    CHECK(s.size() == 3);
    CHECK(s.to_text() == "-1 0\n0 0\n1 0\n");
    std::istringstream in("# comment\n\n1 0\n-1 0\n0 0\n");
    CHECK(PointSet::parse(in) == s);
    const std::vector<long> probe{0, 0}, missing{0, 1};
    CHECK(s.contains(probe));
    CHECK(!s.contains(missing));
    CHECK_THROWS_AS(PointSet(2, {{1, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(2, {{1, 0, 0}}), std::invalid_argument);
    std::istringstream ragged("1 2\n3\n");
    CHECK_THROWS_AS(PointSet::parse(ragged), std::invalid_argument);
    std::istringstream junk("1 x\n");
    CHECK_THROWS_AS(PointSet::parse(junk), std::invalid_argument);
}

TEST_CASE("norm parsing")
{
    CHECK(Norm::parse("inf").to_string() == "inf");
    CHECK(Norm::parse("2").to_string() == "2");
    CHECK_THROWS_AS(Norm::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Norm::parse("2.5"), std::invalid_argument);
}

TEST_CASE("enumeration in several norms")
{
    for (long e = 0; e <= 8; ++e) {
        long euclid = 0;
        for (long x = -e; x <= e; ++x)
            for (long y = -e; y <= e; ++y)
                for (long z = -e; z <= e; ++z)
                    euclid += x * x + y * y + z * z <= e * e;
        CHECK(long(enumerate_ball(3, e, Norm::lp(2)).size()) == euclid);
        CHECK(long(enumerate_ball(3, e, Norm::infinity()).size()) == (2 * e + 1) * (2 * e + 1) * (2 * e + 1));
    }
    CHECK(enumerate_ball(3, 8, Norm::lp(2)).size() == 2109);
    // l_3 in the plane, radius 2: |x|^3 + |y|^3 <= 8
    long l3 = 0;
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            l3 += std::labs(x * x * x) + std::labs(y * y * y) <= 8;
    CHECK(long(enumerate_ball(2, 2, Norm::lp(3)).size()) == l3);
}

TEST_CASE("enumeration respects the cap")
{
    CHECK_THROWS_AS(enumerate_ball(3, 5, Norm::lp(1), 100), CapExceeded);
    CHECK(enumerate_ball(3, 5, Norm::lp(1), 231).size() == 231);
    CHECK_THROWS_AS(enumerate_ball(3, 5, Norm::lp(1), 230), CapExceeded);
    CHECK_THROWS_AS(enumerate_ball(2, 10, Norm::infinity(), 50), CapExceeded);
}

TEST_CASE("regularity")
{
    const auto lee = enumerate_ball(3, 2, Norm::lp(1));
    const auto r = regularity_report(lee);
    CHECK(r.is_regular());
    CHECK(r.e_regularity == 2);
    CHECK(regularity_report(enumerate_ball(3, 8, Norm::lp(2))).e_regularity == 3);

    const PointSet skew(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(!regularity_report(skew).is_symmetric);
    const PointSet axis(2, {{0, 0}, {1, 0}, {-1, 0}});
    const auto ra = regularity_report(axis);
    CHECK(ra.is_symmetric);
    CHECK(!ra.is_sn_invariant);
    CHECK(!ra.is_regular());
}
