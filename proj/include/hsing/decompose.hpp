#pragma once

// ADE / sign classification of weight sequences, minimal multiset partitions
// into ADE or nonpositive parts, and Rouquier dimension bounds.

#include "hsing/weight_sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsing {

struct ADEType {
    char family = 'A';  // 'A', 'D' or 'E'
    long index = 0;

    /// A_m for m >= 0, D_4, E_6, E_8.
    bool is_legal() const;
    std::string to_string() const;
    friend bool operator==(const ADEType&, const ADEType&) = default;
};

/// (2,..,2,a) -> A_{a-1}; (2,..,2,3,3) -> D4; (2,..,2,3,4) -> E6; (2,..,2,3,5) -> E8.
std::optional<ADEType> classify_ade(const WeightSequence& d);

/// sum 1/d_i <= 1
bool is_nonpositive(const WeightSequence& d);

enum class PartPredicate { ade, nonpositive };
std::string to_string(PartPredicate p);
bool satisfies(const WeightSequence& d, PartPredicate p);

struct SearchStats {
    std::uint64_t nodes = 0;         // states expanded
    std::uint64_t memo_states = 0;   // distinct sub-multisets solved
    long root_lower_bound = 0;       // relaxation bound at the root
    bool exhausted = true;           // false if the node limit stopped the search
};

struct PartitionCertificate {
    std::vector<WeightSequence> parts;  // sorted ascending
    PartPredicate predicate = PartPredicate::ade;
    std::size_t size = 0;
    bool minimal = false;
    SearchStats stats;
};

/// Fewest parts, ties broken by the lexicographically smallest sorted part list.
/// node_limit = 0 means unlimited; if the limit is hit, a greedy partition is
/// returned with minimal = false.
PartitionCertificate min_partition(const WeightSequence& d, PartPredicate predicate, std::uint64_t node_limit = 0);

/// Plain enumeration of all set partitions; only for small inputs (used by verify).
std::size_t exhaustive_min_parts(const WeightSequence& d, PartPredicate predicate);

struct RouquierVerdict {
    long n_plus_1 = 0;
    long h = 0;
    long q = 0;
    long lower = 0;  // n + 1 - 2q
    long upper = 0;  // h - 1
    std::optional<long> exact;
    bool conjecture_holds = false;  // n + 1 == h + 2q - 1
    PartitionCertificate h_certificate;
    PartitionCertificate q_certificate;
};

RouquierVerdict rouquier_verdict(const WeightSequence& d, std::uint64_t node_limit = 0);

/// sum(times) + s - 1, with s = times.size().
long sum_generator_bound(const std::vector<long>& times, long s);

}  // namespace hsing
