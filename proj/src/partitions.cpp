#include "leecode/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace leecode::partitions {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("IntPartition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("IntPartition: parts must be non-increasing");
        weight_ += parts_[i];
    }
}

IntPartition IntPartition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return IntPartition(std::move(parts));
}

IntPartition IntPartition::parse(std::string_view text)
{
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto tok = text.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("IntPartition: malformed part '" + std::string(tok) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
        if (text.empty())
            throw std::invalid_argument("IntPartition: trailing comma");
    }
    if (parts.empty())
        throw std::invalid_argument("IntPartition: empty partition");
    return IntPartition(std::move(parts));
}

IntPartition IntPartition::scaled(int factor) const
{
    auto p = parts_;
    for (auto& x : p)
        x *= factor;
    return IntPartition(std::move(p));
}

std::string IntPartition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t slots, std::vector<int>& cur,
                    std::vector<IntPartition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0)
        return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // the remaining slots must be able to absorb what is left
        if (static_cast<long>(part) * static_cast<long>(slots) < remaining)
            break;
        cur.push_back(part);
        partitions_rec(remaining - part, part, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IntPartition> partitions_of(int k, std::size_t max_length)
{
    std::vector<IntPartition> out;
    if (k < 1 || max_length == 0)
        return out;
    std::vector<int> cur;
    partitions_rec(k, k, std::min<std::size_t>(max_length, static_cast<std::size_t>(k)), cur, out);
    return out;
}

SetPartition::SetPartition(std::size_t size, std::vector<std::vector<int>> blocks)
    : size_(size), blocks_(std::move(blocks))
{
    std::vector<bool> seen(size + 1, false);
    std::size_t count = 0;
    for (auto& b : blocks_) {
        if (b.empty())
            throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || static_cast<std::size_t>(x) > size || seen[x])
                throw std::invalid_argument("SetPartition: blocks are not a partition of the ground set");
            seen[x] = true;
            ++count;
        }
    }
    if (count != size)
        throw std::invalid_argument("SetPartition: blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string SetPartition::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            s += ',';
        s += '{';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j)
                s += ',';
            s += std::to_string(blocks_[i][j]);
        }
        s += '}';
    }
    return s + "}";
}

SetPartitions::SetPartitions(std::size_t size) : size_(size)
{
    if (size < 1)
        throw std::invalid_argument("set_partitions: ground set must be non-empty");
}

SetPartitions::iterator::iterator(std::size_t size) : rgs_(size, 0), maxp_(size, 0), done_(false) {}

SetPartition SetPartitions::iterator::operator*() const
{
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(maxp_.back()) + 1);
    for (std::size_t i = 0; i < rgs_.size(); ++i)
        blocks[rgs_[i]].push_back(static_cast<int>(i) + 1);
    return SetPartition(rgs_.size(), std::move(blocks));
}

SetPartitions::iterator& SetPartitions::iterator::operator++()
{
    // rightmost position that may still grow: rgs[i] <= max(rgs[0..i-1])
    std::size_t i = rgs_.size();
    while (i-- > 1) {
        if (rgs_[i] <= maxp_[i - 1]) {
            ++rgs_[i];
            maxp_[i] = std::max(maxp_[i - 1], rgs_[i]);
            for (std::size_t j = i + 1; j < rgs_.size(); ++j) {
                rgs_[j] = 0;
                maxp_[j] = maxp_[i];
            }
            return *this;
        }
    }
    done_ = true;
    rgs_.clear();
    maxp_.clear();
    return *this;
}

Integer mu(const SetPartition& nu)
{
    Integer r = 1;
    for (const auto& b : nu.blocks()) {
        const auto s = b.size() - 1;
        r *= arith::factorial(s);
        if (s % 2)
            r = -r;
    }
    return r;
}

IntPartition star(const IntPartition& j, const SetPartition& nu)
{
    if (nu.size() != j.length())
        throw std::invalid_argument("star: set partition ground set size " + std::to_string(nu.size()) +
                                    " does not match partition length " + std::to_string(j.length()));
    std::vector<int> parts;
    parts.reserve(nu.blocks().size());
    for (const auto& b : nu.blocks()) {
        int s = 0;
        for (int idx : b)
            s += j[static_cast<std::size_t>(idx) - 1];
        parts.push_back(s);
    }
    return IntPartition::from_unsorted(std::move(parts));
}

void PowerSumPoly::add(const IntPartition& lambda, const Integer& c)
{
    if (lambda.weight() != order_)
        throw std::invalid_argument("PowerSumPoly: partition " + lambda.to_string() + " does not have weight " +
                                    std::to_string(order_));
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Integer PowerSumPoly::coefficient(const IntPartition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::string PowerSumPoly::to_text() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        if (first)
            os << c;
        else
            os << (sgn(c) < 0 ? " - " : " + ") << abs(c);
        os << " * S[" << lambda.to_string() << "]";
        first = false;
    }
    return os.str();
}

nlohmann::ordered_json PowerSumPoly::to_json() const
{
    auto obj = nlohmann::ordered_json::object();
    for (const auto& [lambda, c] : terms_)
        obj[lambda.to_string()] = c.get_str();
    return obj;
}

PowerSumPoly merca_expand(const IntPartition& j)
{
    if (j.empty())
        throw std::invalid_argument("merca_expand: empty partition");
    PowerSumPoly out(j.weight());
    for (const auto& nu : set_partitions(j.length()))
        out.add(star(j, nu), mu(nu));
    return out;
}

Integer power_sum_eval(const PowerSumPoly& poly, std::span<const long> x)
{
    Integer total = 0;
    std::map<int, Integer> sums;  // S_t(x), memoised per exponent
    auto power_sum = [&](int t) -> const Integer& {
        auto [it, inserted] = sums.try_emplace(t);
        if (inserted) {
            Integer s = 0, xp;
            for (long xi : x) {
                Integer base = xi;
                mpz_pow_ui(xp.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(t));
                s += xp;
            }
            it->second = s;
        }
        return it->second;
    };
    for (const auto& [lambda, c] : poly.terms()) {
        Integer term = c;
        for (int part : lambda.parts())
            term *= power_sum(part);
        total += term;
    }
    return total;
}

}  // namespace leecode::partitions
