#pragma once

// Q-polynomials Q_B^k(x) = sum_{b in B} <x,b>^{2k} of regular point sets and
// their expansion in power-sum symmetric functions.

#include <span>
#include <string>

#include <json.hpp>

#include "leecode/exactarith.hpp"
#include "leecode/leeball.hpp"
#include "leecode/partitions.hpp"

namespace leecode::qpoly {

using ball::PointSet;
using partitions::IntPartition;
using partitions::PowerSumPoly;

/// sum_{b in B} prod_i b_i^{exponents_i}; exponents shorter than dim(B) are
/// zero-padded, longer ones give 0.
Integer moment_sum(const PointSet& b, std::span<const int> exponents);

/// sum_{b in B} b^{2j}, i.e. moment_sum with exponent vector 2j.
Integer moment_sum_enumerated(const PointSet& b, const IntPartition& j);

/// sum_{b in B^n(e)} b^{2j} without enumerating the ball: the coefficient of
/// x^e in 2^l F_{2 j_1}(x) ... F_{2 j_l}(x) S_{n-l}(x), where F_t(x) =
/// sum_i i^t x^i and S_m(x) = sum_i k(m,i) x^i.
Integer lee_moment_sum(long n, long e, const IntPartition& j);

/// Main coefficient p_k(B). Throws std::invalid_argument if B is not regular.
Integer pk_regular(int k, const PointSet& b);

/// p_k(n,e) for the Lee ball, from the closed moment formula.
Integer pk_lee(int k, long n, long e);

struct QExpansion {
    int k = 0;
    Integer main_coefficient;  // coefficient of S_{(2k)}
    PowerSumPoly tail;         // every other S_{2j}, j a partition of k

    /// main and tail together
    PowerSumPoly full() const;

    /// "p_k = <int>; Q = <int> * S[2k] + ..."
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

/// Power-sum expansion of Q_B^k. Throws std::invalid_argument if B is not
/// regular.
QExpansion q_expansion(int k, const PointSet& b);

/// sum_{b in B} <x,b>^{2k} by direct evaluation.
Integer q_eval_direct(int k, const PointSet& b, std::span<const long> x);

}  // namespace leecode::qpoly
