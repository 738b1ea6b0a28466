#include "leecode/leeball.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "leecode/qpoly.hpp"

namespace leecode::ball {

using arith::binomial;

std::vector<Integer> lee_ball_sizes(long n, long e_max)
{
    std::vector<Integer> out(static_cast<std::size_t>(std::max(e_max + 1, 0L)), 0);
    if (n < 0 || e_max < 0)
        return out;
    const long top = std::min(n, e_max);
    // weights 2^i C(n,i)
    std::vector<Integer> w(static_cast<std::size_t>(top) + 1);
    for (long i = 0; i <= top; ++i) {
        Integer two_i;
        mpz_ui_pow_ui(two_i.get_mpz_t(), 2, static_cast<unsigned long>(i));
        w[i] = two_i * binomial(n, i);
    }
    for (long e = 0; e <= e_max; ++e) {
        Integer s = 0, c = 1;  // c = C(e,i)
        for (long i = 0; i <= std::min(top, e); ++i) {
            s += w[i] * c;
            c = c * (e - i) / (i + 1);
        }
        out[e] = s;
    }
    return out;
}

Integer lee_ball_size(long n, long e)
{
    if (n < 0 || e < 0)
        return 0;
    return lee_ball_sizes(n, e)[e];
}

Integer p1(long n, long e)
{
    if (e < 0)
        return 0;
    const auto row = lee_ball_sizes(n - 1, e);
    Integer s = 0;
    for (long i = 1; i <= e; ++i)
        s += Integer(2 * i * i) * row[e - i];
    return s;
}

std::size_t Delta3Value::index() const
{
    if (!index_)
        throw std::logic_error("Delta3Value: value is infinite");
    return *index_;
}

std::string Delta3Value::to_string() const
{
    return index_ ? std::to_string(*index_) : std::string("inf");
}

Delta3Value delta3(const Integer& e)
{
    if (sgn(e) <= 0)
        throw std::invalid_argument("delta3: argument must be positive");
    const auto d = arith::to_digits(e, 3);
    for (std::size_t i = d.size(); i-- > 0;)
        if (d[i] == 1)
            return Delta3Value::finite(i);
    return Delta3Value::infinite();
}

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients, std::string var)
    : coeffs_(std::move(coefficients)), var_(std::move(var))
{
    trim();
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

Integer IntPolynomial::operator()(const Integer& x) const
{
    Integer r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + *it;
    return r;
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Integer& c = coeffs_[d];
        if (sgn(c) == 0)
            continue;
        if (first) {
            if (sgn(c) < 0)
                os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        const Integer mag = abs(c);
        if (mag != 1 || d == 0)
            os << mag;
        if (d >= 1)
            os << var_;
        if (d >= 2)
            os << '^' << d;
        first = false;
    }
    return os.str();
}

nlohmann::ordered_json IntPolynomial::to_json() const
{
    nlohmann::ordered_json j;
    j["variable"] = var_;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs_)
        arr.push_back(c.get_str());
    j["coefficients"] = std::move(arr);
    j["text"] = to_string();
    return j;
}

IntPolynomial scaled_size_polynomial_in_e(int n)
{
    if (n < 1)
        throw std::invalid_argument("scaled_size_polynomial_in_e: n must be positive");
    // n! k(n,e) = sum_i 2^i C(n,i) (n!/i!) e(e-1)...(e-i+1)
    std::vector<Integer> total(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Integer> falling{1};  // e(e-1)...(e-i+1), ascending coefficients
    const Integer nfact = arith::factorial(static_cast<unsigned long>(n));
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            std::vector<Integer> next(falling.size() + 1, 0);
            for (std::size_t d = 0; d < falling.size(); ++d) {
                next[d + 1] += falling[d];
                next[d] -= falling[d] * (i - 1);
            }
            falling = std::move(next);
        }
        Integer two_i;
        mpz_ui_pow_ui(two_i.get_mpz_t(), 2, static_cast<unsigned long>(i));
        const Integer w = two_i * binomial(n, i) * (nfact / arith::factorial(static_cast<unsigned long>(i)));
        for (std::size_t d = 0; d < falling.size(); ++d)
            total[d] += w * falling[d];
    }
    return IntPolynomial(std::move(total), "e");
}

Quantity parse_quantity(const std::string& name)
{
    if (name == "k")
        return Quantity::K;
    if (name == "p1")
        return Quantity::P1;
    if (name == "p2")
        return Quantity::P2;
    throw std::invalid_argument("unknown quantity '" + name + "' (expected k, p1 or p2)");
}

std::string to_string(Quantity q)
{
    switch (q) {
    case Quantity::K:
        return "k";
    case Quantity::P1:
        return "p1";
    case Quantity::P2:
        return "p2";
    }
    return "?";
}

namespace {

Integer evaluate(Quantity q, long n, int e)
{
    switch (q) {
    case Quantity::K:
        return lee_ball_size(n, e);
    case Quantity::P1:
        return p1(n, e);
    case Quantity::P2:
        return qpoly::pk_lee(2, n, e);
    }
    throw std::logic_error("evaluate: bad quantity");
}

}  // namespace

ScaledPolynomial polynomial_in_n(Quantity q, int e)
{
    if (e < 1)
        throw std::invalid_argument("polynomial_in_n: e must be positive");
    const int deg = q == Quantity::K ? e : e - 1;
    const int npts = deg + 1;
    // the two-coordinate moments in p2 vanish identically in dimension 1,
    // which the polynomial does not reproduce
    const long first = q == Quantity::P2 ? 2 : 1;

    // Newton divided differences at n = first, ..., first + deg
    std::vector<Rational> dd(npts);
    for (int i = 0; i < npts; ++i)
        dd[i] = Rational(evaluate(q, first + i, e));
    for (int level = 1; level < npts; ++level)
        for (int i = npts - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(level);
            dd[i].canonicalize();
        }

    // expand sum_i dd[i] prod_{t<i} (n - (first+t)) into monomial coefficients
    std::vector<Rational> coeffs(npts, Rational(0));
    std::vector<Rational> basis{Rational(1)};
    for (int i = 0; i < npts; ++i) {
        for (std::size_t d = 0; d < basis.size(); ++d)
            coeffs[d] += dd[i] * basis[d];
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t d = 0; d < basis.size(); ++d) {
            next[d + 1] += basis[d];
            next[d] -= basis[d] * (first + i);
        }
        basis = std::move(next);
    }

    Integer scale = 1;
    for (auto& c : coeffs) {
        c.canonicalize();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Integer> ints;
    ints.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Rational s = c * Rational(scale);
        s.canonicalize();
        ints.push_back(s.get_num());
    }
    ScaledPolynomial out{scale, IntPolynomial(std::move(ints), "n")};

    for (int extra = 1; extra <= 3; ++extra) {
        const long n = first + deg + extra;
        if (out.scale * evaluate(q, n, e) != out.poly(n))
            throw std::logic_error("polynomial_in_n: interpolation check failed for " + to_string(q) +
                                   " at n = " + std::to_string(n));
    }
    return out;
}

PointSet::PointSet(std::size_t dim, std::vector<std::vector<long>> points) : dim_(dim)
{
    if (dim == 0)
        throw std::invalid_argument("PointSet: dimension must be positive");
    for (const auto& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("PointSet: point of dimension " + std::to_string(p.size()) +
                                        ", expected " + std::to_string(dim));
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::invalid_argument("PointSet: duplicate point");
    coords_.reserve(points.size() * dim);
    for (const auto& p : points)
        coords_.insert(coords_.end(), p.begin(), p.end());
}

PointSet PointSet::from_sorted_flat(std::size_t dim, std::vector<long> coords)
{
    PointSet s;
    s.dim_ = dim;
    s.coords_ = std::move(coords);
    return s;
}

bool PointSet::contains(std::span<const long> x) const
{
    if (x.size() != dim_)
        return false;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        auto p = (*this)[mid];
        if (std::lexicographical_compare(p.begin(), p.end(), x.begin(), x.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < size() && std::ranges::equal((*this)[lo], x);
}

std::string PointSet::to_text() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        auto p = (*this)[i];
        for (std::size_t d = 0; d < dim_; ++d) {
            if (d)
                os << ' ';
            os << p[d];
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::ordered_json PointSet::to_json() const
{
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < size(); ++i) {
        auto p = (*this)[i];
        arr.push_back(std::vector<long>(p.begin(), p.end()));
    }
    return arr;
}

PointSet PointSet::parse(std::istream& in)
{
    std::vector<std::vector<long>> points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<long> p;
        long v;
        while (ls >> v)
            p.push_back(v);
        if (!ls.eof())
            throw std::invalid_argument("point set: malformed integer on line " + std::to_string(lineno));
        if (!points.empty() && p.size() != points.front().size())
            throw std::invalid_argument("point set: inconsistent dimension on line " + std::to_string(lineno));
        points.push_back(std::move(p));
    }
    if (points.empty())
        throw std::invalid_argument("point set: no points");
    const auto dim = points.front().size();
    return PointSet(dim, std::move(points));
}

Norm Norm::lp(unsigned p)
{
    if (p < 1)
        throw std::invalid_argument("norm: p must be at least 1");
    return Norm{p};
}

Norm Norm::parse(const std::string& text)
{
    if (text == "inf" || text == "infinity")
        return infinity();
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || used == 0 || v < 1 || v > 64)
        throw std::invalid_argument("norm: expected 1, 2, ... or inf, got '" + text + "'");
    return lp(static_cast<unsigned>(v));
}

std::string Norm::to_string() const
{
    return p ? std::to_string(*p) : std::string("inf");
}

CapExceeded::CapExceeded(std::size_t cap)
    : std::runtime_error("enumeration exceeds the point cap of " + std::to_string(cap) +
                         " (raise --max-points)"),
      cap_(cap)
{
}

namespace {

struct BallEnumerator {
    std::size_t n;
    long e;
    std::vector<Integer> pw;  // |v|^p for v = 0..e; empty for l_infinity
    std::size_t cap;
    std::vector<long> cur;
    std::vector<long> out;
    std::size_t count = 0;

    void emit()
    {
        if (++count > cap)
            throw CapExceeded(cap);
        out.insert(out.end(), cur.begin(), cur.end());
    }

    void rec(std::size_t i, const Integer& budget)
    {
        if (i == n) {
            emit();
            return;
        }
        long vmax = e;
        if (!pw.empty())
            while (vmax > 0 && pw[vmax] > budget)
                --vmax;
        for (long v = -vmax; v <= vmax; ++v) {
            cur[i] = v;
            if (pw.empty())
                rec(i + 1, budget);
            else
                rec(i + 1, budget - pw[v < 0 ? -v : v]);
        }
    }
};

}  // namespace

PointSet enumerate_ball(std::size_t n, long e, Norm norm, std::size_t max_points)
{
    if (n == 0)
        throw std::invalid_argument("enumerate_ball: dimension must be positive");
    if (e < 0)
        throw std::invalid_argument("enumerate_ball: radius must be non-negative");
    if (norm.p && *norm.p == 1 && lee_ball_size(static_cast<long>(n), e) > Integer(std::to_string(max_points)))
        throw CapExceeded(max_points);

    BallEnumerator en{n, e, {}, max_points, std::vector<long>(n, 0), {}, 0};
    Integer budget = 0;
    if (norm.p) {
        en.pw.resize(static_cast<std::size_t>(e) + 1);
        for (long v = 0; v <= e; ++v)
            mpz_ui_pow_ui(en.pw[v].get_mpz_t(), static_cast<unsigned long>(v), *norm.p);
        budget = en.pw[e];
    }
    en.rec(0, budget);
    // the recursion visits coordinates in increasing order, so the output is
    // already sorted lexicographically
    return PointSet::from_sorted_flat(n, std::move(en.out));
}

RegularityReport regularity_report(const PointSet& b)
{
    RegularityReport r;
    r.is_symmetric = true;
    r.is_sn_invariant = true;
    const std::size_t dim = b.dim();
    std::vector<long> tmp(dim);
    for (std::size_t i = 0; i < b.size(); ++i) {
        auto p = b[i];
        std::size_t nz = 0;
        for (std::size_t d = 0; d < dim; ++d) {
            tmp[d] = -p[d];
            nz += p[d] != 0;
        }
        r.e_regularity = std::max(r.e_regularity, nz);
        if (r.is_symmetric && !b.contains(tmp))
            r.is_symmetric = false;
        // adjacent transpositions generate the symmetric group
        for (std::size_t d = 0; r.is_sn_invariant && d + 1 < dim; ++d) {
            if (p[d] == p[d + 1])
                continue;
            std::copy(p.begin(), p.end(), tmp.begin());
            std::swap(tmp[d], tmp[d + 1]);
            if (!b.contains(tmp))
                r.is_sn_invariant = false;
        }
    }
    return r;
}

}  // namespace leecode::ball
