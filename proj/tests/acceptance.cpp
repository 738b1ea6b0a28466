// One line per acceptance criterion; exits non-zero if any criterion fails or
// runs over its time budget.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leecode/criteria.hpp"
#include "leecode/partitions.hpp"
#include "leecode/qpoly.hpp"

using namespace leecode;

namespace {

struct Outcome {
    bool ok = true;
    int failures = 0;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (cond)
            return;
        if (ok)
            detail = what;
        ok = false;
        ++failures;
    }
};

Integer ipow(long b, unsigned long e)
{
    Integer r, base = b;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

long pow3(long h)
{
    long r = 1;
    while (h-- > 0)
        r *= 3;
    return r;
}

std::vector<Integer> ints(std::initializer_list<const char*> descending)
{
    std::vector<Integer> v;
    for (const char* s : descending)
        v.emplace_back(s);
    return {v.rbegin(), v.rend()};
}

bool poly_is(const ball::IntPolynomial& p, const std::vector<Integer>& ascending)
{
    return p.coefficients() == ascending;
}

// scale_a * q == poly_a and scale_b * q == poly_b describe the same q
bool same_scaled(const ball::ScaledPolynomial& got, long scale, const std::vector<Integer>& ascending)
{
    if (got.poly.coefficients().size() != ascending.size())
        return false;
    for (std::size_t d = 0; d < ascending.size(); ++d)
        if (got.poly.coefficient(d) * scale != ascending[d] * got.scale)
            return false;
    return true;
}

bool in_band(const Integer& v)
{
    const auto r = arith::mod_ui(v, 2187);
    return r == 729 || r == 1458;
}

Integer p1_nested(long n, long e)
{
    Integer s = 0;
    for (long a = 0; a <= e; ++a)
        s += 2 * ipow(a, 2) * ball::lee_ball_size(n - 1, e - a);
    return s;
}

Integer p2_nested(long n, long e)
{
    Integer s = 0;
    for (long a = 0; a <= e; ++a)
        s += 2 * ipow(a, 4) * ball::lee_ball_size(n - 1, e - a);
    for (long a = 0; a <= e; ++a)
        for (long b = 0; a + b <= e; ++b)
            s -= 12 * ipow(a * b, 2) * ball::lee_ball_size(n - 2, e - a - b);
    return s;
}

Integer p3_nested(long n, long e)
{
    Integer s = 0;
    for (long a = 0; a <= e; ++a)
        s += 2 * ipow(a, 6) * ball::lee_ball_size(n - 1, e - a);
    for (long a = 0; a <= e; ++a)
        for (long b = 0; a + b <= e; ++b)
            s -= 60 * ipow(a, 4) * ipow(b, 2) * ball::lee_ball_size(n - 2, e - a - b);
    for (long a = 0; a <= e; ++a)
        for (long b = 0; a + b <= e; ++b)
            for (long c = 0; a + b + c <= e; ++c)
                s += 240 * ipow(a * b * c, 2) * ball::lee_ball_size(n - 3, e - a - b - c);
    return s;
}

Outcome cubic_goldens()
{
    Outcome o;
    const auto f = ball::scaled_size_polynomial_in_e(3);
    o.expect(poly_is(f, ints({"8", "12", "16", "6"})), "3!k(3,e) = " + f.to_string());
    o.expect(f(4) == 774, "f(4)");
    o.expect(f(22) == 91350, "f(22)");
    o.expect(ball::p1(3, 4) == 276, "p(3,4)");
    o.expect(criteria::reproduce(criteria::ReproCase::Prop6).pass(), "reproduce prop6");
    return o;
}

Outcome dimension12_goldens()
{
    Outcome o;
    const auto f = ball::scaled_size_polynomial_in_e(12);
    o.expect(poly_is(f, ints({"4096", "24576", "585728", "2703360", "25479168", "85966848", "402980864",
                              "919142400", "2188865536", "2940850176", "3130103808", "1799331840",
                              "479001600"})),
             "12!k(12,e) = " + f.to_string());
    o.expect(ball::p1(12, 3) == 732, "p(12,3)");
    o.expect(ball::p1(12, 5) == 45870, "p(12,5)");
    int count = 0;
    for (long a : {3L, 5L})
        for (long b = 0; b < 243; ++b) {
            o.expect(in_band(f(a + 9 * b)), "f(" + std::to_string(a + 9 * b) + ")");
            ++count;
        }
    o.expect(count == 486, "count");
    return o;
}

Outcome dimension12_second_family()
{
    Outcome o;
    const auto f = ball::scaled_size_polynomial_in_e(12);
    int count = 0;
    for (long a = 9; a < 72; ++a) {
        if (a >= 18 && a < 63)
            continue;
        for (long b = 0; b < 27; ++b) {
            o.expect(in_band(f(a + 81 * b)), "f(" + std::to_string(a + 81 * b) + ")");
            ++count;
        }
    }
    o.expect(count == 486, "count");
    for (long a = 9; a < 18; ++a)
        o.expect(arith::mod_ui(ball::p1(12, a), 3) == 0, "p(12," + std::to_string(a) + ")");
    return o;
}

Outcome f_table()
{
    Outcome o;
    auto F = [](long t) {
        Integer s = 1 - 3 * arith::binomial(t, 3) + 3 * arith::binomial(t, 6) - 4 * arith::binomial(t, 9) +
                    6 * arith::binomial(t, 18) - 4 * arith::binomial(t, 27) + 3 * arith::binomial(t, 30) -
                    3 * arith::binomial(t, 33) + arith::binomial(t, 36);
        return arith::mod_ui(s, 9);
    };
    for (long t = 27; t <= 215; ++t) {
        unsigned long want = 0;
        if ((t <= 35) || (t >= 207))
            want = 3;
        else if (t <= 53 || t >= 189)
            want = 6;
        else
            continue;
        o.expect(F(t) == want, "F(" + std::to_string(t) + ")");
        o.expect(criteria::prop8_f(t) == want, "prop8_f(" + std::to_string(t) + ")");
    }
    return o;
}

Outcome eta_table()
{
    Outcome o;
    const unsigned rows[13][4] = {{0, 0, 0, 1}, {0, 0, 1, 3}, {0, 0, 2, 3}, {0, 1, 0, 4}, {0, 1, 1, 0},
                                  {0, 1, 2, 0}, {0, 2, 0, 6}, {0, 2, 1, 0}, {0, 2, 2, 0}, {1, 0, 0, 4},
                                  {1, 0, 1, 3}, {1, 0, 2, 3}, {1, 1, 0, 1}};
    for (const auto& r : rows)
        o.expect(criteria::lemma7_eta(r[0], r[1], r[2]) == r[3], "eta");
    for (long m : {2L, 3L}) {
        const long n = pow3(m + 1) + pow3(m), unit = pow3(m - 1);
        for (long i = 0; i <= n; ++i) {
            unsigned long want = 0;
            if (i % unit == 0)
                switch (i / unit) {
                case 0:
                case 12:
                    want = 1;
                    break;
                case 1:
                case 2:
                case 10:
                case 11:
                    want = 3;
                    break;
                case 3:
                case 9:
                    want = 4;
                    break;
                case 6:
                    want = 6;
                    break;
                default:
                    break;
                }
            o.expect(arith::mod_ui(arith::binomial(n, i), 9) == want,
                     "C(" + std::to_string(n) + "," + std::to_string(i) + ") mod 9");
        }
    }
    return o;
}

Outcome euclidean_ball()
{
    Outcome o;
    const auto b = ball::enumerate_ball(3, 8, ball::Norm::lp(2));
    o.expect(b.size() == 2109, "|B|");
    Integer s = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        s += Integer(b[i][0]) * b[i][0];
    o.expect(s == 26688, "sum b1^2");
    o.expect(criteria::general_tiling_criterion(b, 3).nonexistence(), "criterion");
    return o;
}

Outcome radius_six_seven()
{
    Outcome o;
    using ball::Quantity;
    o.expect(same_scaled(ball::polynomial_in_n(Quantity::K, 6), 45, ints({"4", "12", "70", "120", "196", "138", "45"})),
             "45 k(n,6)");
    o.expect(same_scaled(ball::polynomial_in_n(Quantity::P1, 6), 15, ints({"8", "60", "280", "720", "1032", "630"})),
             "15 p1(n,6)");
    o.expect(same_scaled(ball::polynomial_in_n(Quantity::P2, 6), 15,
                         ints({"8", "180", "1480", "6360", "14232", "13230"})),
             "15 p2(n,6)");
    o.expect(same_scaled(ball::polynomial_in_n(Quantity::K, 7), 315,
                         ints({"8", "28", "224", "490", "1232", "1372", "1056", "315"})),
             "315 k(n,7)");
    o.expect(same_scaled(ball::polynomial_in_n(Quantity::P1, 7), 45,
                         ints({"8", "72", "440", "1560", "3512", "4488", "2520"})),
             "45 p1(n,7)");
    o.expect(same_scaled(ball::polynomial_in_n(Quantity::P2, 7), 45,
                         ints({"8", "216", "2240", "13080", "44912", "85704", "70560"})),
             "45 p2(n,7)");
    o.expect(criteria::residue_scan(6, 5, 125) == std::vector<long>{22, 47, 72, 97, 122}, "scan e=6");
    o.expect(criteria::residue_scan(7, 5, 125) == std::vector<long>{13, 23, 38, 48, 63, 73, 88, 98, 113, 123},
             "scan e=7");
    return o;
}

Outcome small_radius_coverage()
{
    Outcome o;
    for (long n = 1; n <= 500; ++n) {
        const long r = n % 27;
        if (r == 12 || r == 21)
            o.expect(criteria::zhang_ge_condition(n, 3).nonexistence(), "e=3 n=" + std::to_string(n));
        if (r == 3 || r == 5 || r == 21 || r == 23)
            o.expect(criteria::zhang_ge_condition(n, 4).nonexistence(), "e=4 n=" + std::to_string(n));
    }
    return o;
}

Outcome oracle_suite()
{
    Outcome o;
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> coord(-9, 9);
    for (long n = 1; n <= 4; ++n)
        for (long e = 0; e <= 5; ++e) {
            const auto b = ball::enumerate_ball(std::size_t(n), e, ball::Norm::lp(1));
            o.expect(b.size() == ball::lee_ball_size(n, e), "k vs enumeration");
            if (e < 1 || e > 4)
                continue;
            for (int k = 1; k <= 3; ++k) {
                const auto full = qpoly::q_expansion(k, b).full();
                for (int t = 0; t < 20; ++t) {
                    std::vector<long> x(static_cast<std::size_t>(n));
                    for (auto& v : x)
                        v = coord(rng);
                    o.expect(partitions::power_sum_eval(full, x) == qpoly::q_eval_direct(k, b, x), "Q expansion");
                }
                o.expect(qpoly::pk_lee(k, n, e) == qpoly::pk_regular(k, b), "pk_lee vs pk_regular");
            }
        }
    for (int k = 1; k <= 5; ++k)
        for (long n = 1; n <= 10; ++n)
            o.expect(qpoly::pk_lee(k, n, 2) == ipow(4, k) + 4 * n + 2,
                     "radius two p_" + std::to_string(k) + "(" + std::to_string(n) + ",2)");
    for (long n = 1; n <= 12; ++n)
        for (long e = 1; e <= 12; ++e) {
            o.expect(qpoly::pk_lee(1, n, e) == p1_nested(n, e), "k=1 specialization");
            o.expect(qpoly::pk_lee(2, n, e) == p2_nested(n, e), "k=2 specialization");
            o.expect(qpoly::pk_lee(3, n, e) == p3_nested(n, e), "k=3 specialization");
        }
    return o;
}

Outcome modular_suite()
{
    Outcome o;
    const unsigned primes[] = {3, 5, 7};
    // Pascal rows up to 3000, exact
    std::vector<Integer> row(3001, 0);
    row[0] = 1;
    for (long a = 0; a <= 3000 && o.ok; ++a) {
        if (a > 0)
            for (long b = a; b >= 1; --b)
                row[b] += row[b - 1];
        for (long b = 0; b <= a; ++b)
            for (unsigned p : primes)
                if (arith::lucas_binomial_mod_p(a, b, p) != mpz_fdiv_ui(row[b].get_mpz_t(), p)) {
                    o.expect(false, "Lucas at C(" + std::to_string(a) + "," + std::to_string(b) + ")");
                    break;
                }
    }
    std::mt19937_64 rng(424242);
    for (unsigned p : primes) {
        std::uniform_int_distribution<long> pick(0, 4000);
        for (int t = 0; t < 10000; ++t) {
            const long a = pick(rng), b = pick(rng);
            o.expect(arith::binomial_mod_p2_davis_webb(a, b, p) == arith::mod_ui(arith::binomial(a, b), p * p),
                     "Davis-Webb at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    for (long n = 0; n < 81; ++n)
        for (long e = 0; e < 81; ++e) {
            unsigned long prod = 1;
            for (long x = n, y = e; x > 0 || y > 0; x /= 3, y /= 3)
                prod = prod * arith::mod_ui(ball::lee_ball_size(x % 3, y % 3), 3) % 3;
            o.expect(arith::mod_ui(ball::lee_ball_size(n, e), 3) == prod, "multiplicativity");
        }
    for (long m = 0; m <= 1; ++m) {
        const long h = m + 2;
        for (long n = pow3(m + 1); n < 2 * pow3(m + 1); ++n)
            for (long e = 1; e < pow3(h); ++e)
                for (long a = 1; a <= 3; ++a) {
                    o.expect(arith::mod_ui(ball::lee_ball_size(pow3(h + 1) * a + n, e), 9) ==
                                 arith::mod_ui(ball::lee_ball_size(n, e), 9),
                             "k periodicity");
                    o.expect(arith::mod_ui(ball::p1(pow3(h) * a + n, e), 3) == arith::mod_ui(ball::p1(n, e), 3),
                             "p periodicity");
                }
    }
    return o;
}

Outcome classification_suite()
{
    Outcome o;
    for (long e = 1; e <= 100; ++e) {
        std::vector<long> d;
        for (long v = e; v > 0; v /= 3)
            d.push_back(v % 3);
        long top = -1;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] == 1)
                top = long(i);
        const auto c = criteria::zg_classify(e);
        const bool empty = top <= 0;
        o.expect((c.status == criteria::ZGClassification::Status::Empty) == empty, "status e=" + std::to_string(e));
        if (empty)
            continue;
        const long len = long(d.size());
        long n0 = 0, ex = 0;
        if (top == 1 && e % 9 == 4) {
            n0 = 3;
            ex = std::max(3L, len);
        } else if (top <= 2) {
            n0 = 12;
            ex = std::max(4L, len);
        } else {
            n0 = pow3(top) + pow3(top - 1);
            ex = std::max(top + 2, len);
        }
        o.expect(c.witness && c.witness->n0 == n0 && long(c.witness->exponent) == ex,
                 "witness e=" + std::to_string(e));
        if (!c.witness)
            continue;
        for (long t = 0; t < 3; ++t)
            o.expect(criteria::zhang_ge_condition(n0 + t * pow3(ex), e).nonexistence(),
                     "witness member e=" + std::to_string(e));
    }
    for (long n = 1; n <= 60; ++n)
        for (long e = 1; e <= 60; ++e)
            o.expect(criteria::pk_condition(n, e, 3).nonexistence() ==
                         criteria::zhang_ge_condition(n, e).nonexistence(),
                     "p=3 equivalence");
    return o;
}

Outcome merca_suite()
{
    Outcome o;
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> coord(-5, 5);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (int k = 1; k <= 6; ++k)
        for (const auto& j : partitions::partitions_of(k, std::size_t(k))) {
            const auto poly = partitions::merca_expand(j);
            for (int t = 0; t < 10; ++t) {
                std::vector<long> x(len(rng));
                for (auto& v : x)
                    v = coord(rng);
                // sum over injective placements of the parts
                Integer direct = 0;
                std::vector<std::size_t> idx(j.length());
                std::function<void(std::size_t, Integer)> go = [&](std::size_t depth, Integer acc) {
                    if (depth == j.length()) {
                        direct += acc;
                        return;
                    }
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        bool used = false;
                        for (std::size_t u = 0; u < depth; ++u)
                            used = used || idx[u] == i;
                        if (used)
                            continue;
                        idx[depth] = i;
                        go(depth + 1, acc * ipow(x[i], unsigned(j[depth])));
                    }
                };
                go(0, 1);
                o.expect(partitions::power_sum_eval(poly, x) == direct, "merca " + j.to_string());
            }
        }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> all{
        {1, "cubic ball polynomial, f(4), f(22), p(3,4)", 1, cubic_goldens},
        {2, "12!k(12,e) coefficients, p(12,3), p(12,5), 486 residues", 5, dimension12_goldens},
        {3, "486 residues a'+81b', p(12,a) for 9 <= a < 18", 5, dimension12_second_family},
        {4, "F table modulo 9", 1, f_table},
        {5, "eta table and C(n,i) mod 9 profiles", 10, eta_table},
        {6, "Euclidean ball of radius 8 in Z^3", 5, euclidean_ball},
        {7, "radius 6 and 7 polynomials and residue scans", 30, radius_six_seven},
        {8, "Zhang-Ge coverage for e = 3, 4 up to n = 500", 10, small_radius_coverage},
        {9, "oracle suite", 120, oracle_suite},
        {10, "modular arithmetic suite", 60, modular_suite},
        {11, "classification suite", 120, classification_suite},
        {12, "power-sum expansion suite", 30, merca_suite},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.budget_s;
        const bool pass = o.ok && in_time;
        failed += !pass;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  AC" << std::setw(2) << std::left << c.id << " " << c.name << "  ("
             << std::fixed << std::setprecision(2) << secs << " s, budget " << c.budget_s << " s)";
        if (!o.ok)
            line << "  first failure: " << o.detail << " (" << o.failures << " failed checks)";
        else if (!in_time)
            line << "  over budget";
        std::cout << line.str() << std::endl;
    }
    std::cout << (all.size() - failed) << "/" << all.size() << " acceptance criteria passed" << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
