#include "leecode/exactarith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace leecode::arith {

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer binomial(const Integer& n, const Integer& k)
{
    if (sgn(n) < 0 || sgn(k) < 0 || k > n)
        return 0;
    if (!k.fits_ulong_p())
        throw std::invalid_argument("binomial: lower index too large");
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer multinomial(long k, std::span<const int> parts)
{
    long sum = 0;
    for (int x : parts) {
        if (x < 0)
            throw std::invalid_argument("multinomial: negative part");
        sum += x;
    }
    if (sum != k)
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(k));
    // product of binomials avoids the full k! / prod division
    Integer r = 1;
    long acc = 0;
    for (int x : parts) {
        acc += x;
        r *= binomial(acc, x);
    }
    return r;
}

Integer reduced_multinomial(long k, std::span<const int> parts)
{
    Integer r = multinomial(k, parts);
    std::map<int, unsigned long> mult;
    for (int x : parts)
        ++mult[x];
    for (auto [part, t] : mult) {
        (void)part;
        if (t > 1) {
            Integer f = factorial(t);
            if (!mpz_divisible_p(r.get_mpz_t(), f.get_mpz_t()))
                throw std::logic_error("reduced_multinomial: inexact division");
            mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
        }
    }
    return r;
}

Integer BaseDigits::value() const
{
    Integer v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = v * base + *it;
    return v;
}

BaseDigits to_digits(const Integer& n, unsigned base, std::size_t min_length)
{
    if (base < 2)
        throw std::invalid_argument("to_digits: base must be at least 2");
    if (sgn(n) < 0)
        throw std::invalid_argument("to_digits: negative value");
    BaseDigits d;
    d.base = base;
    Integer x = n;
    while (sgn(x) > 0) {
        d.digits.push_back(static_cast<unsigned>(mpz_fdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), base)));
    }
    if (d.digits.size() < min_length)
        d.digits.resize(min_length, 0U);
    return d;
}

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0)
            return false;
    return true;
}

unsigned long mod_ui(const Integer& x, unsigned long m)
{
    return mpz_fdiv_ui(x.get_mpz_t(), m);
}

Integer mod(const Integer& x, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (sgn(r) < 0)
        r += abs(m);
    return r;
}

unsigned lucas_binomial_mod_p(const Integer& a, const Integer& b, unsigned p)
{
    if (!is_prime(p))
        throw std::invalid_argument("lucas_binomial_mod_p: modulus " + std::to_string(p) +
                                    " is not prime");
    if (sgn(a) < 0 || sgn(b) < 0)
        throw std::invalid_argument("lucas_binomial_mod_p: negative argument");
    auto da = to_digits(a, p);
    auto db = to_digits(b, p);
    if (db.size() > da.size())
        return 0;
    unsigned long r = 1;
    for (std::size_t i = 0; i < da.size() && r != 0; ++i) {
        unsigned ai = da[i], bi = db[i];
        if (bi > ai)
            return 0;
        r = r * binomial(long(ai), long(bi)).get_ui() % p;
    }
    return static_cast<unsigned>(r);
}

namespace {

void check_digits(std::initializer_list<unsigned> ds, unsigned p)
{
    if (!is_prime(p))
        throw std::invalid_argument("Davis-Webb symbol: " + std::to_string(p) + " is not prime");
    for (unsigned d : ds)
        if (d >= p)
            throw std::invalid_argument("Davis-Webb symbol: digit " + std::to_string(d) +
                                        " out of range for p = " + std::to_string(p));
}

// inverse of a unit modulo m
unsigned long inverse_mod(unsigned long u, unsigned long m)
{
    Integer r, uu = u, mm = m;
    if (mpz_invert(r.get_mpz_t(), uu.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw std::logic_error("inverse_mod: not a unit");
    return r.get_ui();
}

}  // namespace

DWSymbolValue dw_symbol_1(unsigned a, unsigned b, unsigned p)
{
    check_digits({a, b}, p);
    if (a >= b)
        return DWSymbolValue::plain(binomial(long(a), long(b)), p);
    return DWSymbolValue::prime(p);
}

DWSymbolValue dw_symbol_2(unsigned a, unsigned b, unsigned c, unsigned d, unsigned p)
{
    check_digits({a, b, c, d}, p);
    const long top = long(a) * p + b;
    const long bottom = long(c) * p + d;
    if (top >= bottom)
        return DWSymbolValue::plain(binomial(top, bottom), p);
    if (b >= d)
        return DWSymbolValue::plain(Integer(p) * binomial(long(b), long(d)), p);
    return DWSymbolValue::prime_squared(p);
}

DWProduct::DWProduct(unsigned p) : p_(p), p2_(static_cast<unsigned long>(p) * p) {}

void DWProduct::fold(const DWSymbolValue& s, bool invert)
{
    if (s.p() != p_)
        throw std::invalid_argument("DWProduct: symbol prime mismatch");
    int v = 0;
    unsigned long u = 1;
    switch (s.kind()) {
    case DWSymbolValue::Kind::P:
        v = 1;
        break;
    case DWSymbolValue::Kind::PSquared:
        v = 2;
        break;
    case DWSymbolValue::Kind::Plain: {
        Integer x = s.value();
        if (sgn(x) == 0)
            throw std::logic_error("DWProduct: zero symbol");
        while (mpz_divisible_ui_p(x.get_mpz_t(), p_)) {
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p_);
            ++v;
        }
        u = mod_ui(x, p2_);
        break;
    }
    }
    if (invert) {
        valuation_ -= v;
        unit_ = static_cast<unsigned long>((static_cast<unsigned __int128>(unit_) * inverse_mod(u, p2_)) % p2_);
    } else {
        valuation_ += v;
        unit_ = static_cast<unsigned long>((static_cast<unsigned __int128>(unit_) * u) % p2_);
    }
}

DWProduct& DWProduct::times(const DWSymbolValue& s)
{
    fold(s, false);
    return *this;
}

DWProduct& DWProduct::over(const DWSymbolValue& s)
{
    fold(s, true);
    return *this;
}

unsigned long DWProduct::residue() const
{
    if (valuation_ < 0)
        throw std::domain_error("DWProduct: value has p in the denominator");
    if (valuation_ >= 2)
        return 0;
    return valuation_ == 1 ? (unit_ % p_) * p_ : unit_;
}

unsigned long binomial_mod_p2_davis_webb(const Integer& a, const Integer& b, unsigned p,
                                         std::optional<std::size_t> length)
{
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("binomial_mod_p2_davis_webb: p must be an odd prime");
    if (sgn(a) < 0 || sgn(b) < 0)
        throw std::invalid_argument("binomial_mod_p2_davis_webb: negative argument");

    const std::size_t la = to_digits(a, p).size();
    const std::size_t lb = to_digits(b, p).size();
    std::size_t m;
    if (length) {
        m = *length;
        if (m < 2 || m < la || m < lb)
            throw std::invalid_argument("binomial_mod_p2_davis_webb: length too short");
    } else {
        m = std::max<std::size_t>({la, lb, 2});
        if (a < b)
            ++m;
    }
    const auto da = to_digits(a, p, m);
    const auto db = to_digits(b, p, m);

    const bool forward = a >= b && da[m - 1] > 0;
    const bool equal_top = da[m - 1] == db[m - 1];
    if (!forward && !equal_top)
        throw std::invalid_argument(
            "binomial_mod_p2_davis_webb: neither a >= b with non-zero top digit nor equal top digits");

    DWProduct prod(p);
    prod.times(dw_symbol_2(da[m - 1], da[m - 2], db[m - 1], db[m - 2], p));
    for (std::size_t i = m - 2; i >= 1; --i) {
        if (prod.valuation() >= 2)
            return 0;
        prod.over(dw_symbol_1(da[i], db[i], p));
        prod.times(dw_symbol_2(da[i], da[i - 1], db[i], db[i - 1], p));
    }
    return prod.residue();
}

}  // namespace leecode::arith
