#pragma once

#include "hsing/bigint.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hsing {

/// A nonempty multiset of integers d_i >= 1, stored sorted ascending so that
/// equality is order-insensitive.
class WeightSequence {
public:
    WeightSequence() = default;
    explicit WeightSequence(std::vector<long> entries);

    /// Parses "3,3,4"; throws std::invalid_argument on malformed input.
    static WeightSequence parse(std::string_view text);

    const std::vector<long>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    /// n in the (n+1)-tuple convention.
    long n() const { return static_cast<long>(entries_.size()) - 1; }
    bool empty() const { return entries_.empty(); }

    Integer lcm() const;
    Integer product() const;
    /// -1 + sum 1/d_i
    Rational mu_bar() const;
    bool has_unit_weight() const;

    std::string to_string() const;

    friend bool operator==(const WeightSequence&, const WeightSequence&) = default;
    friend auto operator<=>(const WeightSequence& a, const WeightSequence& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<long> entries_;
};

/// Multiset union.
WeightSequence concat(const WeightSequence& a, const WeightSequence& b);

}  // namespace hsing
