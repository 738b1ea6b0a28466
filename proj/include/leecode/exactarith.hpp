#pragma once

// Exact big-integer combinatorics and binomial coefficients modulo p and p^2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace leecode {

using Integer = mpz_class;
using Rational = mpq_class;

namespace arith {

/// C(n,k) for 0 <= k <= n, and 0 for every other (n,k), including n < 0.
Integer binomial(long n, long k);
Integer binomial(const Integer& n, const Integer& k);

Integer factorial(unsigned long n);

/// k! / (parts_0! parts_1! ...). Throws std::invalid_argument on a negative
/// part or when the parts do not sum to k.
Integer multinomial(long k, std::span<const int> parts);

/// Multinomial divided by the factorials of the part multiplicities: the
/// number of set partitions of [k] whose block sizes are `parts`.
Integer reduced_multinomial(long k, std::span<const int> parts);

/// Non-negative integer written in a fixed base, little-endian.
struct BaseDigits {
    unsigned base = 2;
    std::vector<unsigned> digits;  // digits[0] is the unit place

    Integer value() const;
    unsigned operator[](std::size_t i) const { return i < digits.size() ? digits[i] : 0U; }
    std::size_t size() const { return digits.size(); }
};

BaseDigits to_digits(const Integer& n, unsigned base, std::size_t min_length = 0);

/// Deterministic trial division; adequate for the small primes used here.
bool is_prime(std::uint64_t p);

unsigned long mod_ui(const Integer& x, unsigned long m);  // always in [0, m)
Integer mod(const Integer& x, const Integer& m);           // always in [0, m)

/// C(a,b) mod p as the product of digit binomials.
unsigned lucas_binomial_mod_p(const Integer& a, const Integer& b, unsigned p);

/// Value of a Davis-Webb symbol.
class DWSymbolValue {
public:
    enum class Kind { Plain, P, PSquared };

    static DWSymbolValue plain(Integer v, unsigned p) { return {Kind::Plain, std::move(v), p}; }
    static DWSymbolValue prime(unsigned p) { return {Kind::P, Integer(p), p}; }
    static DWSymbolValue prime_squared(unsigned p) { return {Kind::PSquared, Integer(p) * p, p}; }

    Kind kind() const { return kind_; }
    unsigned p() const { return p_; }
    /// The integer the symbol stands for (p and p^2 for the non-plain kinds).
    const Integer& value() const { return value_; }

    bool operator==(const DWSymbolValue&) const = default;

private:
    DWSymbolValue(Kind k, Integer v, unsigned p) : kind_(k), value_(std::move(v)), p_(p) {}

    Kind kind_;
    Integer value_;
    unsigned p_;
};

/// [a ; b] for digits a, b in [0, p).
DWSymbolValue dw_symbol_1(unsigned a, unsigned b, unsigned p);
/// [a, b ; c, d] for digits in [0, p).
DWSymbolValue dw_symbol_2(unsigned a, unsigned b, unsigned c, unsigned d, unsigned p);

/// Product and quotient of Davis-Webb symbols, kept as p^valuation * unit with
/// the unit known modulo p^2.
class DWProduct {
public:
    explicit DWProduct(unsigned p);

    DWProduct& times(const DWSymbolValue& s);
    DWProduct& over(const DWSymbolValue& s);

    int valuation() const { return valuation_; }
    /// Residue modulo p^2; throws std::domain_error if the product is not
    /// p-integral.
    unsigned long residue() const;

private:
    void fold(const DWSymbolValue& s, bool invert);

    unsigned long p_;
    unsigned long p2_;
    int valuation_ = 0;
    unsigned long unit_ = 1;
};

/// C(a,b) mod p^2 by the Davis-Webb digit formula.
///
/// The digits of a and b are taken at a common length m >= 2. By default m is
/// the length of the longer expansion, plus one leading zero when a < b so that
/// the top digits agree. An explicit `length` is checked against the two
/// admissible hypotheses: a >= b with a non-zero top digit of a, or equal top
/// digits. Anything else throws std::invalid_argument, as does an odd-prime
/// violation.
unsigned long binomial_mod_p2_davis_webb(const Integer& a, const Integer& b, unsigned p,
                                         std::optional<std::size_t> length = std::nullopt);

}  // namespace arith
}  // namespace leecode
