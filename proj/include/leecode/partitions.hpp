#pragma once

// Integer partitions, set partitions and the expansion of augmented monomial
// symmetric functions in the power-sum basis.

#include <compare>
#include <cstddef>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "leecode/exactarith.hpp"

namespace leecode::partitions {

/// Non-increasing tuple of positive integers.
class IntPartition {
public:
    IntPartition() = default;
    /// Throws std::invalid_argument unless `parts` is non-increasing and positive.
    explicit IntPartition(std::vector<int> parts);
    IntPartition(std::initializer_list<int> parts) : IntPartition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into canonical order.
    static IntPartition from_unsorted(std::vector<int> parts);
    /// Parses "3,2,1"; the parts must already be non-increasing.
    static IntPartition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Every part multiplied by `factor`.
    IntPartition scaled(int factor) const;

    std::string to_string() const;  // "3,2,1"

    bool operator==(const IntPartition&) const = default;

private:
    std::vector<int> parts_;
    long weight_ = 0;
};

/// Canonical order: lexicographically descending, so (3) precedes (2,1).
struct CanonicalOrder {
    bool operator()(const IntPartition& a, const IntPartition& b) const { return a.parts() > b.parts(); }
};

/// Partitions of k with at most max_length parts, canonical order.
std::vector<IntPartition> partitions_of(int k, std::size_t max_length);

/// A partition of {1, ..., size} into non-empty blocks. Blocks are sorted by
/// their least element and each block is increasing.
class SetPartition {
public:
    /// Throws std::invalid_argument unless the blocks partition {1, ..., size}.
    SetPartition(std::size_t size, std::vector<std::vector<int>> blocks);

    std::size_t size() const { return size_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    std::string to_string() const;  // "{{1,2},{3}}"

private:
    std::size_t size_;
    std::vector<std::vector<int>> blocks_;
};

/// Range over all set partitions of {1, ..., size} in restricted-growth-string
/// order. Each iterator owns its state.
class SetPartitions {
public:
    explicit SetPartitions(std::size_t size);

    class iterator {
    public:
        using value_type = SetPartition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        SetPartition operator*() const;
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || rgs_ == o.rgs_); }

    private:
        friend class SetPartitions;
        explicit iterator(std::size_t size);

        std::vector<int> rgs_;   // block index of each element
        std::vector<int> maxp_;  // running prefix maximum
        bool done_ = true;
    };

    iterator begin() const { return iterator(size_); }
    iterator end() const { return iterator(); }

private:
    std::size_t size_;
};

inline SetPartitions set_partitions(std::size_t size) { return SetPartitions(size); }

/// prod over blocks of (-1)^(|block|-1) (|block|-1)!
Integer mu(const SetPartition& nu);

/// The partition whose parts are the block sums of j under nu.
IntPartition star(const IntPartition& j, const SetPartition& nu);

/// Integer combination of power-sum products S_lambda, all of one weight.
class PowerSumPoly {
public:
    using Map = std::map<IntPartition, Integer, CanonicalOrder>;

    PowerSumPoly() = default;
    explicit PowerSumPoly(long order) : order_(order) {}

    long order() const { return order_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * S_lambda. Throws if lambda has the wrong weight.
    void add(const IntPartition& lambda, const Integer& c);
    Integer coefficient(const IntPartition& lambda) const;

    /// "c * S[l1,l2] + c * S[...]" in canonical order, "0" when empty.
    std::string to_text() const;
    /// Object keyed by partition strings, values are exact decimal strings.
    nlohmann::ordered_json to_json() const;

    bool operator==(const PowerSumPoly&) const = default;

private:
    long order_ = 0;
    Map terms_;
};

/// Augmented monomial symmetric function of j in the power-sum basis.
PowerSumPoly merca_expand(const IntPartition& j);

/// prod_i (sum_j x_j^lambda_i), summed with the stored coefficients.
Integer power_sum_eval(const PowerSumPoly& poly, std::span<const long> x);

}  // namespace leecode::partitions
