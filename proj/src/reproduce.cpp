#include <algorithm>
#include <array>
#include <sstream>

#include "leecode/criteria.hpp"
#include "leecode/qpoly.hpp"

namespace leecode::criteria {

namespace {

using ball::IntPolynomial;

struct NamedCase {
    ReproCase c;
    const char* name;
};

constexpr std::array<NamedCase, 8> case_names{{
    {ReproCase::Prop5, "prop5"},
    {ReproCase::Prop6, "prop6"},
    {ReproCase::Prop7, "prop7"},
    {ReproCase::Prop8, "prop8"},
    {ReproCase::Lemma7, "lemma7"},
    {ReproCase::Example5, "example5"},
    {ReproCase::Prop16, "prop16"},
    {ReproCase::Prop17, "prop17"},
}};

// Ascending coefficients from a descending list, as printed in the source.
IntPolynomial descending(std::initializer_list<const char*> coeffs, const char* var)
{
    std::vector<Integer> c;
    for (const char* s : coeffs)
        c.emplace_back(s);
    std::reverse(c.begin(), c.end());
    return IntPolynomial(std::move(c), var);
}

Claim make_claim(std::string name, bool pass, std::string detail)
{
    return Claim{std::move(name), pass, std::move(detail)};
}

Claim equals(std::string name, const Integer& got, const Integer& want)
{
    const bool ok = got == want;
    std::ostringstream os;
    os << "computed " << got;
    if (!ok)
        os << ", expected " << want;
    return make_claim(std::move(name), ok, os.str());
}

Claim residue_is(std::string name, const Integer& value, unsigned long modulus, std::initializer_list<unsigned long> allowed)
{
    const auto r = arith::mod_ui(value, modulus);
    const bool ok = std::find(allowed.begin(), allowed.end(), r) != allowed.end();
    std::ostringstream os;
    os << value << " ≡ " << r << " (mod " << modulus << ")";
    return make_claim(std::move(name), ok, os.str());
}

std::string join(const std::vector<long>& v)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

// f(e) = 3^6 or 2*3^6 (mod 3^7) over a list of arguments.
Claim all_in_zg_band(std::string name, const IntPolynomial& f, const std::vector<long>& args)
{
    long bad = -1;
    for (long e : args) {
        const auto r = arith::mod_ui(f(e), 2187);
        if (r != 729 && r != 1458) {
            bad = e;
            break;
        }
    }
    std::string detail = std::to_string(args.size()) + " values checked";
    if (bad >= 0)
        detail += ", first failure at e = " + std::to_string(bad);
    return make_claim(std::move(name), bad < 0 && args.size() == 486, detail);
}

ReproReport prop5()
{
    ReproReport r{ReproCase::Prop5, {}};
    const auto f = ball::scaled_size_polynomial_in_e(12);
    const auto paper = descending({"4096", "24576", "585728", "2703360", "25479168", "85966848", "402980864",
                                   "919142400", "2188865536", "2940850176", "3130103808", "1799331840",
                                   "479001600"},
                                  "e");
    r.claims.push_back(make_claim("12!·k(12,e) coefficients", f == paper, "f(e) = " + f.to_string()));
    r.claims.push_back(equals("p(12,3) = 732", ball::p1(12, 3), 732));
    r.claims.push_back(residue_is("p(12,3) ≡ 0 (mod 3)", ball::p1(12, 3), 3, {0}));
    r.claims.push_back(equals("p(12,5) = 45870", ball::p1(12, 5), 45870));
    r.claims.push_back(residue_is("p(12,5) ≡ 0 (mod 3)", ball::p1(12, 5), 3, {0}));
    std::vector<long> args;
    for (long a : {3L, 5L})
        for (long b = 0; b < 243; ++b)
            args.push_back(a + 9 * b);
    r.claims.push_back(all_in_zg_band("f(a+9b) ≡ 3^6 or 2·3^6 (mod 3^7), a ∈ {3,5}, 0 ≤ b < 3^5", f, args));
    return r;
}

ReproReport prop6()
{
    ReproReport r{ReproCase::Prop6, {}};
    const auto f = ball::scaled_size_polynomial_in_e(3);
    const auto paper = descending({"8", "12", "16", "6"}, "e");
    r.claims.push_back(make_claim("3!·k(3,e) = 8e^3 + 12e^2 + 16e + 6", f == paper, "f(e) = " + f.to_string()));
    r.claims.push_back(equals("f(4) = 774", f(4), 774));
    r.claims.push_back(residue_is("f(4) ≡ 18 (mod 27)", f(4), 27, {18}));
    r.claims.push_back(equals("f(22) = 91350", f(22), 91350));
    r.claims.push_back(residue_is("f(22) ≡ 9 (mod 27)", f(22), 27, {9}));
    r.claims.push_back(equals("p(3,4) = 276", ball::p1(3, 4), 276));
    r.claims.push_back(residue_is("p(3,4) ≡ 0 (mod 3)", ball::p1(3, 4), 3, {0}));
    return r;
}

ReproReport prop7()
{
    ReproReport r{ReproCase::Prop7, {}};
    const auto f = ball::scaled_size_polynomial_in_e(12);
    std::vector<long> args;
    for (long a = 9; a < 72; ++a) {
        if (a >= 18 && a < 63)
            continue;
        for (long b = 0; b < 27; ++b)
            args.push_back(a + 81 * b);
    }
    r.claims.push_back(
        all_in_zg_band("f(a'+81b') ≡ 3^6 or 2·3^6 (mod 3^7), a' ∈ [9,17] ∪ [63,71], 0 ≤ b' < 27", f, args));
    std::vector<long> bad;
    for (long a = 9; a < 18; ++a)
        if (arith::mod_ui(ball::p1(12, a), 3) != 0)
            bad.push_back(a);
    r.claims.push_back(make_claim("p(12,a) ≡ 0 (mod 3) for 9 ≤ a < 18", bad.empty(),
                                  bad.empty() ? "9 values checked" : "fails at a ∈ " + join(bad)));
    return r;
}

ReproReport prop8()
{
    ReproReport r{ReproCase::Prop8, {}};
    auto range_claim = [&](long lo, long hi, unsigned long want) {
        std::vector<long> bad;
        for (long t = lo; t <= hi; ++t)
            if (prop8_f(t) != want)
                bad.push_back(t);
        r.claims.push_back(make_claim("F(t) ≡ " + std::to_string(want) + " (mod 9) for " + std::to_string(lo) +
                                          " ≤ t ≤ " + std::to_string(hi),
                                      bad.empty(), bad.empty() ? "ok" : "fails at t ∈ " + join(bad)));
    };
    range_claim(27, 35, 3);
    range_claim(207, 215, 3);
    range_claim(36, 53, 6);
    range_claim(189, 206, 6);

    // k(3^{m+1}+3^m, e) against F(e~) on every e with h = m+4 digits,
    // e_{m+1} = 1 and e_i in {0,2} above it.
    for (unsigned m : {2U, 3U}) {
        long pm = 1;
        for (unsigned i = 0; i < m; ++i)
            pm *= 3;
        const long n = 3 * pm + pm;
        const std::size_t h = m + 4;
        long limit = 1;
        for (std::size_t i = 0; i < h; ++i)
            limit *= 3;
        std::size_t checked = 0;
        long bad = -1;
        for (long e = 1; e < limit && bad < 0; ++e) {
            const auto d = arith::to_digits(e, 3, h);
            if (d[m + 1] != 1)
                continue;
            bool ok = true;
            for (std::size_t i = m + 2; i < h; ++i)
                ok = ok && d[i] != 1;
            if (!ok)
                continue;
            const long et = static_cast<long>(d[m + 2]) * 81 + 27 + d[m] * 9 + d[m - 1] * 3 + d[m - 2];
            ++checked;
            if (arith::mod_ui(ball::lee_ball_size(n, e), 9) != prop8_f(et))
                bad = e;
        }
        r.claims.push_back(make_claim("k(" + std::to_string(n) + ",e) ≡ F(e~) (mod 9)", bad < 0,
                                      std::to_string(checked) + " values of e checked" +
                                          (bad < 0 ? "" : ", fails at e = " + std::to_string(bad))));
    }
    return r;
}

ReproReport lemma7()
{
    ReproReport r{ReproCase::Lemma7, {}};
    struct Row {
        unsigned a, b, c;
        unsigned long eta;
    };
    constexpr std::array<Row, 13> table{{
        {0, 0, 0, 1}, {0, 0, 1, 3}, {0, 0, 2, 3}, {0, 1, 0, 4}, {0, 1, 1, 0}, {0, 1, 2, 0}, {0, 2, 0, 6},
        {0, 2, 1, 0}, {0, 2, 2, 0}, {1, 0, 0, 4}, {1, 0, 1, 3}, {1, 0, 2, 3}, {1, 1, 0, 1},
    }};
    for (const auto& row : table) {
        const auto got = lemma7_eta(row.a, row.b, row.c);
        std::ostringstream name;
        name << "η(" << row.a << "," << row.b << "," << row.c << ") ≡ " << row.eta << " (mod 9)";
        r.claims.push_back(make_claim(name.str(), got == row.eta, "computed " + std::to_string(got)));
    }

    // C(n,i) mod 9 for n = 3^{m+1}+3^m against the stated profile.
    for (unsigned m : {2U, 3U}) {
        long pm1 = 1;
        for (unsigned i = 0; i + 1 < m; ++i)
            pm1 *= 3;
        const long n = 12 * pm1;
        long bad = -1;
        for (long i = 0; i <= n && bad < 0; ++i) {
            unsigned long want = 0;
            if (i % pm1 == 0) {
                switch (i / pm1) {
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
            }
            if (arith::mod_ui(arith::binomial(n, i), 9) != want)
                bad = i;
        }
        r.claims.push_back(make_claim("C(" + std::to_string(n) + ",i) mod 9 profile", bad < 0,
                                      bad < 0 ? std::to_string(n + 1) + " binomials checked"
                                              : "fails at i = " + std::to_string(bad)));
    }
    return r;
}

ReproReport example5()
{
    ReproReport r{ReproCase::Example5, {}};
    const auto b = ball::enumerate_ball(3, 8, ball::Norm::lp(2));
    r.claims.push_back(equals("|B| = 2109", static_cast<unsigned long>(b.size()), 2109));
    const std::array<int, 1> first{2};
    r.claims.push_back(equals("p_1(B) = Σ b_1^2 = 26688", qpoly::moment_sum(b, first), 26688));
    r.claims.push_back(equals("p_1(B) from the Q-expansion", qpoly::pk_regular(1, b), 26688));
    const auto cert = general_tiling_criterion(b, 3);
    r.claims.push_back(make_claim("general tiling criterion with p = 3", cert.nonexistence(),
                                  to_string(cert.verdict)));
    return r;
}

struct PaperSystem {
    int e;
    long k_scale;
    long p_scale;
    IntPolynomial k, p1, p2;
    std::vector<long> expected;
};

ReproReport appendix_scan(ReproCase which, const PaperSystem& sys)
{
    ReproReport r{which, {}};
    const std::string es = std::to_string(sys.e);
    auto compare = [&](ball::Quantity q, long scale, const IntPolynomial& paper) {
        const auto got = ball::polynomial_in_n(q, sys.e);
        // scale * quantity = paper and got.scale * quantity = got.poly
        bool ok = paper.degree() == got.poly.degree();
        for (int d = 0; ok && d <= paper.degree(); ++d)
            ok = paper.coefficient(d) * got.scale == got.poly.coefficient(d) * scale;
        const std::string label = std::to_string(scale) + "·" + ball::to_string(q) + "(n," + es + ")";
        r.claims.push_back(make_claim(label + " polynomial", ok, got.scale.get_str() + "·" + ball::to_string(q) +
                                                                     " = " + got.poly.to_string()));
    };
    compare(ball::Quantity::K, sys.k_scale, sys.k);
    compare(ball::Quantity::P1, sys.p_scale, sys.p1);
    compare(ball::Quantity::P2, sys.p_scale, sys.p2);

    // the congruence system on the printed polynomials, 0 <= n < 125
    std::vector<long> from_system;
    for (long n = 0; n < 125; ++n) {
        const auto k = arith::mod_ui(sys.k(n), 125);
        const bool ok = k % 25 == 0 && k != 0 && arith::mod_ui(sys.p1(n), 25) != 0 &&
                        arith::mod_ui(sys.p2(n), 25) == 0;
        if (ok)
            from_system.push_back(n);
    }
    r.claims.push_back(make_claim("printed congruence system, 0 ≤ n < 125", from_system == sys.expected,
                                  join(from_system)));

    const auto scan = residue_scan(sys.e, 5, 125);
    r.claims.push_back(make_claim("residue_scan(" + es + ",5,125) = " + join(sys.expected), scan == sys.expected,
                                  join(scan)));
    return r;
}

ReproReport prop16()
{
    return appendix_scan(ReproCase::Prop16,
                         PaperSystem{6, 45, 15, descending({"4", "12", "70", "120", "196", "138", "45"}, "n"),
                                     descending({"8", "60", "280", "720", "1032", "630"}, "n"),
                                     descending({"8", "180", "1480", "6360", "14232", "13230"}, "n"),
                                     {22, 47, 72, 97, 122}});
}

ReproReport prop17()
{
    return appendix_scan(
        ReproCase::Prop17,
        PaperSystem{7, 315, 45, descending({"8", "28", "224", "490", "1232", "1372", "1056", "315"}, "n"),
                    descending({"8", "72", "440", "1560", "3512", "4488", "2520"}, "n"),
                    descending({"8", "216", "2240", "13080", "44912", "85704", "70560"}, "n"),
                    {13, 23, 38, 48, 63, 73, 88, 98, 113, 123}});
}

}  // namespace

std::vector<ReproCase> all_repro_cases()
{
    std::vector<ReproCase> out;
    for (const auto& nc : case_names)
        out.push_back(nc.c);
    return out;
}

std::string to_string(ReproCase c)
{
    for (const auto& nc : case_names)
        if (nc.c == c)
            return nc.name;
    return "?";
}

ReproCase parse_repro_case(const std::string& name)
{
    for (const auto& nc : case_names)
        if (name == nc.name)
            return nc.c;
    throw std::invalid_argument("unknown reproduction case '" + name + "'");
}

bool ReproReport::pass() const
{
    return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

std::string ReproReport::to_text() const
{
    std::ostringstream os;
    os << to_string(which) << ": " << (pass() ? "PASS" : "FAIL");
    for (const auto& c : claims)
        os << "\n  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail;
    return os.str();
}

nlohmann::ordered_json ReproReport::to_json() const
{
    nlohmann::ordered_json j;
    j["case"] = to_string(which);
    j["pass"] = pass();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : claims)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["claims"] = std::move(arr);
    return j;
}

ReproReport reproduce(ReproCase c)
{
    switch (c) {
    case ReproCase::Prop5:
        return prop5();
    case ReproCase::Prop6:
        return prop6();
    case ReproCase::Prop7:
        return prop7();
    case ReproCase::Prop8:
        return prop8();
    case ReproCase::Lemma7:
        return lemma7();
    case ReproCase::Example5:
        return example5();
    case ReproCase::Prop16:
        return prop16();
    case ReproCase::Prop17:
        return prop17();
    }
    throw std::invalid_argument("unknown reproduction case");
}

unsigned long lemma7_eta(unsigned a, unsigned b, unsigned c)
{
    if (a > 2 || b > 2 || c > 2)
        throw std::invalid_argument("lemma7_eta: digits must lie in [0, 3)");
    arith::DWProduct prod(3);
    prod.times(arith::dw_symbol_2(1, 1, a, b, 3));
    prod.over(arith::dw_symbol_1(1, b, 3));
    prod.times(arith::dw_symbol_2(1, 0, b, c, 3));
    return prod.residue();
}

unsigned long prop8_f(long t)
{
    static constexpr std::array<std::pair<int, int>, 9> terms{{
        {1, 0}, {-3, 3}, {3, 6}, {-4, 9}, {6, 18}, {-4, 27}, {3, 30}, {-3, 33}, {1, 36},
    }};
    Integer total = 0;
    for (const auto& [coef, i] : terms)
        total += coef * arith::binomial(t, i);
    return arith::mod_ui(total, 9);
}

}  // namespace leecode::criteria
