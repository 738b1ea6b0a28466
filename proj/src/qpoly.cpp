#include "leecode/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace leecode::qpoly {

namespace {

Integer pow_si(long base, unsigned long exp)
{
    Integer r, b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

// (-1)^(l-1) (l-1)!
Integer one_block_mu(std::size_t l)
{
    Integer r = arith::factorial(l - 1);
    return (l - 1) % 2 ? Integer(-r) : r;
}

// C(2k; 2j)'
Integer doubled_reduced_multinomial(const IntPartition& j)
{
    const auto twice = j.scaled(2);
    return arith::reduced_multinomial(twice.weight(), twice.parts());
}

void require_regular(const PointSet& b, const char* who, ball::RegularityReport& report)
{
    report = ball::regularity_report(b);
    if (!report.is_regular())
        throw std::invalid_argument(std::string(who) + ": point set is not regular (" +
                                    (report.is_symmetric ? "not closed under coordinate permutations"
                                                         : "not symmetric under negation") +
                                    ")");
}

}  // namespace

Integer moment_sum(const PointSet& b, std::span<const int> exponents)
{
    if (exponents.size() > b.dim()) {
        // zero-padding the other way: a coordinate that does not exist
        for (std::size_t i = b.dim(); i < exponents.size(); ++i)
            if (exponents[i] != 0)
                return 0;
        exponents = exponents.first(b.dim());
    }
    for (int x : exponents)
        if (x < 0)
            throw std::invalid_argument("moment_sum: negative exponent");
    Integer total = 0, term, f;
    for (std::size_t i = 0; i < b.size(); ++i) {
        auto p = b[i];
        term = 1;
        for (std::size_t d = 0; d < exponents.size() && sgn(term) != 0; ++d) {
            if (exponents[d] == 0)
                continue;
            term *= pow_si(p[d], static_cast<unsigned long>(exponents[d]));
        }
        total += term;
    }
    return total;
}

Integer moment_sum_enumerated(const PointSet& b, const IntPartition& j)
{
    if (j.length() > b.dim())
        return 0;
    return moment_sum(b, j.scaled(2).parts());
}

Integer lee_moment_sum(long n, long e, const IntPartition& j)
{
    if (e < 0)
        return 0;
    const long l = static_cast<long>(j.length());
    const auto es = static_cast<std::size_t>(e);
    // product of F_{2 j_s}, truncated at degree e
    std::vector<Integer> conv(es + 1, 0);
    conv[0] = 1;
    for (int part : j.parts()) {
        std::vector<Integer> f(es + 1);
        for (long i = 0; i <= e; ++i)
            f[i] = pow_si(i, 2UL * static_cast<unsigned long>(part));
        std::vector<Integer> next(es + 1, 0);
        for (std::size_t a = 0; a <= es; ++a) {
            if (sgn(conv[a]) == 0)
                continue;
            for (std::size_t c = 0; a + c <= es; ++c)
                next[a + c] += conv[a] * f[c];
        }
        conv = std::move(next);
    }
    const auto row = ball::lee_ball_sizes(n - l, e);
    Integer s = 0;
    for (std::size_t t = 0; t <= es; ++t)
        s += conv[t] * row[es - t];
    Integer two_l;
    mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(l));
    return two_l * s;
}

Integer pk_regular(int k, const PointSet& b)
{
    if (k < 1)
        throw std::invalid_argument("pk_regular: k must be positive");
    ball::RegularityReport report;
    require_regular(b, "pk_regular", report);
    const std::size_t limit = std::min(b.dim(), report.e_regularity);
    Integer total = 0;
    for (const auto& j : partitions::partitions_of(k, limit))
        total += doubled_reduced_multinomial(j) * moment_sum_enumerated(b, j) * one_block_mu(j.length());
    return total;
}

Integer pk_lee(int k, long n, long e)
{
    if (k < 1 || n < 1 || e < 1)
        throw std::invalid_argument("pk_lee: k, n and e must be positive");
    Integer total = 0;
    for (const auto& j : partitions::partitions_of(k, static_cast<std::size_t>(k)))
        total += doubled_reduced_multinomial(j) * one_block_mu(j.length()) * lee_moment_sum(n, e, j);
    return total;
}

PowerSumPoly QExpansion::full() const
{
    PowerSumPoly out(2L * k);
    out.add(IntPartition{2 * k}, main_coefficient);
    for (const auto& [lambda, c] : tail.terms())
        out.add(lambda, c);
    return out;
}

std::string QExpansion::to_text() const
{
    std::ostringstream os;
    os << "p_" << k << " = " << main_coefficient << "; Q = " << main_coefficient << " * S[" << 2 * k << "]";
    for (const auto& [lambda, c] : tail.terms())
        os << (sgn(c) < 0 ? " - " : " + ") << abs(c) << " * S[" << lambda.to_string() << "]";
    return os.str();
}

nlohmann::ordered_json QExpansion::to_json() const
{
    nlohmann::ordered_json j;
    j["k"] = k;
    j["main_coefficient"] = main_coefficient.get_str();
    j["tail"] = tail.to_json();
    return j;
}

QExpansion q_expansion(int k, const PointSet& b)
{
    if (k < 1)
        throw std::invalid_argument("q_expansion: k must be positive");
    ball::RegularityReport report;
    require_regular(b, "q_expansion", report);
    const std::size_t limit = std::min(b.dim(), report.e_regularity);

    PowerSumPoly all(2L * k);
    for (const auto& j : partitions::partitions_of(k, limit)) {
        const Integer weight = doubled_reduced_multinomial(j) * moment_sum_enumerated(b, j);
        if (sgn(weight) == 0)
            continue;
        const auto twice = j.scaled(2);
        for (const auto& nu : partitions::set_partitions(j.length()))
            all.add(partitions::star(twice, nu), weight * partitions::mu(nu));
    }

    QExpansion q;
    q.k = k;
    const IntPartition main{2 * k};
    q.main_coefficient = all.coefficient(main);
    q.tail = PowerSumPoly(2L * k);
    for (const auto& [lambda, c] : all.terms())
        if (!(lambda == main))
            q.tail.add(lambda, c);
    return q;
}

Integer q_eval_direct(int k, const PointSet& b, std::span<const long> x)
{
    if (x.size() != b.dim())
        throw std::invalid_argument("q_eval_direct: vector of dimension " + std::to_string(x.size()) +
                                    " for a point set of dimension " + std::to_string(b.dim()));
    Integer total = 0, ip, pw;
    for (std::size_t i = 0; i < b.size(); ++i) {
        auto p = b[i];
        ip = 0;
        for (std::size_t d = 0; d < x.size(); ++d)
            ip += Integer(p[d]) * x[d];
        mpz_pow_ui(pw.get_mpz_t(), ip.get_mpz_t(), 2UL * static_cast<unsigned long>(k));
        total += pw;
    }
    return total;
}

}  // namespace leecode::qpoly
