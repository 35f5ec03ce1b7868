#include "doctest.h"
#include "hsing/decompose.hpp"
#include "oracles.hpp"

#include <functional>

using namespace hsing;

namespace {

std::vector<WeightSequence> parts_of(std::initializer_list<std::vector<long>> ps) {
    std::vector<WeightSequence> out;
    for (const auto& p : ps) out.emplace_back(p);
    return out;
}

const WeightSequence k3({3, 3, 3, 3, 3, 3, 4, 4, 4, 4});

}  // namespace

TEST_CASE("ADE classification") {
    CHECK(classify_ade(WeightSequence({2, 2, 7})) == ADEType{'A', 6});
    CHECK(classify_ade(WeightSequence({2, 2, 2, 3, 5})) == ADEType{'E', 8});
    CHECK(classify_ade(WeightSequence({5, 3, 2})) == ADEType{'E', 8});
    CHECK(classify_ade(WeightSequence({3, 3})) == ADEType{'D', 4});
    CHECK(classify_ade(WeightSequence({4, 3})) == ADEType{'E', 6});
    CHECK(!classify_ade(WeightSequence({3, 3, 4})));
    CHECK(!classify_ade(WeightSequence({1, 1})));
    CHECK(classify_ade(WeightSequence({1})) == ADEType{'A', 0});
    CHECK(classify_ade(WeightSequence({2})) == ADEType{'A', 1});
    CHECK(classify_ade(WeightSequence({2, 2})) == ADEType{'A', 1});
    CHECK(ADEType{'D', 4}.is_legal());
    CHECK(!ADEType{'D', 5}.is_legal());
    CHECK(!ADEType{'E', 7}.is_legal());
}

TEST_CASE("nonpositive predicate") {
    CHECK(is_nonpositive(WeightSequence({3, 3, 3})));
    CHECK(!is_nonpositive(WeightSequence({2, 3, 5})));
    for (long d = 1; d <= 10; ++d) CHECK(is_nonpositive(WeightSequence({d})));
}

TEST_CASE("min partition examples") {
    auto h = min_partition(k3, PartPredicate::ade);
    CHECK(h.size == 5);
    CHECK(h.minimal);
    CHECK(h.parts == parts_of({{3, 3}, {3, 4}, {3, 4}, {3, 4}, {3, 4}}));

    auto q = min_partition(k3, PartPredicate::nonpositive);
    CHECK(q.size == 3);
    CHECK(q.parts == parts_of({{3, 3, 3}, {3, 3, 3}, {4, 4, 4, 4}}));

    CHECK(min_partition(WeightSequence({3, 3}), PartPredicate::ade).size == 1);
    CHECK(min_partition(WeightSequence({3, 3}), PartPredicate::nonpositive).size == 1);
}

TEST_CASE("min partition agrees with brute force") {
    std::vector<long> cur;
    int checked = 0;
    std::function<void(long)> rec = [&](long lo) {
        if (!cur.empty()) {
            const WeightSequence d(cur);
            auto h = min_partition(d, PartPredicate::ade);
            auto q = min_partition(d, PartPredicate::nonpositive);
            CHECK(h.size == oracle::min_blocks(cur, oracle::is_ade));
            CHECK(q.size == oracle::min_blocks(cur, oracle::is_nonpositive));
            CHECK(h.size == exhaustive_min_parts(d, PartPredicate::ade));
            // Certificate parts are valid and reassemble the input.
            std::vector<long> all;
            for (const auto& p : h.parts) {
                CHECK(oracle::is_ade(p.entries()));
                all.insert(all.end(), p.entries().begin(), p.entries().end());
            }
            std::sort(all.begin(), all.end());
            CHECK(all == d.entries());
            if (classify_ade(d)) CHECK(h.size == 1);
            ++checked;
        }
        if (cur.size() == 6) return;
        for (long x = lo; x <= 6; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(1);
    CHECK(checked > 900);
}

TEST_CASE("subadditivity under concatenation") {
    const std::vector<WeightSequence> seqs{WeightSequence({2, 3, 5}), WeightSequence({3, 3, 4}),
                                           WeightSequence({4, 4, 4}), WeightSequence({2, 7}),
                                           WeightSequence({5, 5, 5, 5, 5})};
    for (const auto& a : seqs)
        for (const auto& b : seqs)
            for (auto pred : {PartPredicate::ade, PartPredicate::nonpositive})
                CHECK(min_partition(concat(a, b), pred).size <=
                      min_partition(a, pred).size + min_partition(b, pred).size);
}

TEST_CASE("node limit falls back to a valid partition") {
    auto c = min_partition(k3, PartPredicate::ade, 1);
    CHECK(!c.stats.exhausted);
    std::size_t total = 0;
    for (const auto& p : c.parts) {
        CHECK(classify_ade(p));
        total += p.size();
    }
    CHECK(total == k3.size());
}

TEST_CASE("rouquier verdicts") {
    auto v = rouquier_verdict(k3);
    CHECK(v.h == 5);
    CHECK(v.q == 3);
    CHECK(v.lower == 4);
    CHECK(v.upper == 4);
    REQUIRE(v.exact);
    CHECK(*v.exact == 4);
    CHECK(v.conjecture_holds);

    v = rouquier_verdict(WeightSequence({3, 3}));
    CHECK(v.lower == 0);
    CHECK(v.upper == 0);
    CHECK(v.exact == 0L);

    // (2, d_1, ..., d_n) nonpositive with d_i >= 7 -> exact n - 1.
    v = rouquier_verdict(WeightSequence({2, 7, 8, 9}));
    CHECK(v.exact == 2L);
    v = rouquier_verdict(WeightSequence({2, 3, 7}));
    CHECK(v.exact == 1L);
}

TEST_CASE("sum generator bound") {
    CHECK(sum_generator_bound({0}, 1) == 0);
    CHECK(sum_generator_bound({0, 0, 0}, 3) == 2);
    CHECK(sum_generator_bound({1, 2}, 2) == 4);
    CHECK_THROWS_AS(sum_generator_bound({}, 0), std::invalid_argument);
    CHECK_THROWS_AS(sum_generator_bound({1, 2}, 3), std::invalid_argument);
}
