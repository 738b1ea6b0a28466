#pragma once

// Lee balls and l_p balls: sizes, the second-moment coefficient, polynomial
// forms of both, the base-3 digit invariant, and explicit point enumeration.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "leecode/exactarith.hpp"

namespace leecode::ball {

/// k(n,e) = sum_i 2^i C(n,i) C(e,i), the number of points of Z^n at Lee
/// distance at most e from the origin. k(0,e) = 1 (the one point of Z^0) and
/// k(n,e) = 0 for n < 0 or e < 0.
Integer lee_ball_size(long n, long e);

/// k(n,0), ..., k(n,e_max) in one pass.
std::vector<Integer> lee_ball_sizes(long n, long e_max);

/// p(n,e) = sum_{i=0}^{e} 2 i^2 k(n-1, e-i).
Integer p1(long n, long e);

/// Position of the highest base-3 digit equal to 1.
class Delta3Value {
public:
    static Delta3Value finite(std::size_t index) { return Delta3Value(index); }
    static Delta3Value infinite() { return Delta3Value(std::nullopt); }

    bool is_finite() const { return index_.has_value(); }
    /// Throws std::logic_error when infinite.
    std::size_t index() const;

    std::string to_string() const;  // "1" or "inf"
    bool operator==(const Delta3Value&) const = default;

private:
    explicit Delta3Value(std::optional<std::size_t> i) : index_(i) {}
    std::optional<std::size_t> index_;
};

/// Throws std::invalid_argument for e <= 0.
Delta3Value delta3(const Integer& e);

/// Dense univariate polynomial with exact integer coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    /// coefficients[d] multiplies var^d; trailing zeros are trimmed.
    explicit IntPolynomial(std::vector<Integer> coefficients, std::string var = "x");

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    const std::string& variable() const { return var_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Integer(0); }

    Integer operator()(const Integer& x) const;

    /// Descending degree, e.g. "8e^3 + 12e^2 + 16e + 6".
    std::string to_string() const;
    nlohmann::ordered_json to_json() const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim();

    std::vector<Integer> coeffs_;
    std::string var_ = "x";
};

/// n! * k(n,e) as a polynomial in e.
IntPolynomial scaled_size_polynomial_in_e(int n);

enum class Quantity { K, P1, P2 };

Quantity parse_quantity(const std::string& name);  // "k", "p1", "p2"
std::string to_string(Quantity q);

struct ScaledPolynomial {
    Integer scale;
    IntPolynomial poly;  // scale * quantity(n, e) == poly(n) for n >= 1 (n >= 2 for p2)
};

/// Exact interpolation in n with degree bound e (for k) or e - 1 (p1, p2),
/// checked at three extra points. Throws std::logic_error if the check fails.
ScaledPolynomial polynomial_in_n(Quantity q, int e);

/// A finite set of points of Z^dim, stored sorted (lexicographically) and
/// without duplicates.
class PointSet {
public:
    PointSet() = default;
    /// Throws std::invalid_argument on a point of the wrong dimension or a
    /// duplicated point.
    PointSet(std::size_t dim, std::vector<std::vector<long>> points);
    /// Takes already sorted, duplicate-free, flattened coordinates.
    static PointSet from_sorted_flat(std::size_t dim, std::vector<long> coords);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    bool empty() const { return size() == 0; }
    std::span<const long> operator[](std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    bool contains(std::span<const long> x) const;

    /// One space-separated vector per line, sorted.
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
    /// Inverse of to_text; blank lines and lines starting with '#' are skipped.
    static PointSet parse(std::istream& in);

    bool operator==(const PointSet&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<long> coords_;
};

/// Norm selector for enumerate_ball: an l_p norm with p >= 1, or l_infinity.
struct Norm {
    std::optional<unsigned> p;  // empty means infinity

    static Norm lp(unsigned p);
    static Norm infinity() { return Norm{}; }
    static Norm parse(const std::string& text);  // "1", "2", ..., "inf"
    std::string to_string() const;
};

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(std::size_t cap);
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

inline constexpr std::size_t default_max_points = 10'000'000;

/// All x in Z^n with |x_1|^p + ... + |x_n|^p <= e^p (max |x_i| <= e for
/// l_infinity), computed in exact integer arithmetic. Throws CapExceeded as
/// soon as the set would exceed `max_points`.
PointSet enumerate_ball(std::size_t n, long e, Norm norm, std::size_t max_points = default_max_points);

struct RegularityReport {
    bool is_symmetric = false;      // B = -B
    bool is_sn_invariant = false;   // closed under coordinate permutations
    std::size_t e_regularity = 0;   // max number of non-zero coordinates

    bool is_regular() const { return is_symmetric && is_sn_invariant; }
};

RegularityReport regularity_report(const PointSet& b);

}  // namespace leecode::ball
