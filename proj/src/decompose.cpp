#include "hsing/decompose.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace hsing {

bool ADEType::is_legal() const {
    switch (family) {
        case 'A': return index >= 0;
        case 'D': return index == 4;
        case 'E': return index == 6 || index == 8;
        default: return false;
    }
}

std::string ADEType::to_string() const { return std::string(1, family) + std::to_string(index); }

std::optional<ADEType> classify_ade(const WeightSequence& d) {
    std::vector<long> rest;
    for (long x : d.entries())
        if (x != 2) rest.push_back(x);
    if (rest.empty()) return ADEType{'A', 1};
    if (rest.size() == 1) return ADEType{'A', rest[0] - 1};
    if (rest.size() == 2 && rest[0] == 3) {
        if (rest[1] == 3) return ADEType{'D', 4};
        if (rest[1] == 4) return ADEType{'E', 6};
        if (rest[1] == 5) return ADEType{'E', 8};
    }
    return std::nullopt;
}

bool is_nonpositive(const WeightSequence& d) { return d.mu_bar() <= 0; }

std::string to_string(PartPredicate p) { return p == PartPredicate::ade ? "ADE" : "nonpositive"; }

bool satisfies(const WeightSequence& d, PartPredicate p) {
    return p == PartPredicate::ade ? classify_ade(d).has_value() : is_nonpositive(d);
}

namespace {

using Counts = std::vector<int>;

struct NodeLimit {};

class PartitionSearch {
public:
    PartitionSearch(const WeightSequence& d, PartPredicate pred, std::uint64_t limit) : pred_(pred), limit_(limit) {
        for (long x : d.entries()) {
            if (values_.empty() || values_.back() != x) {
                values_.push_back(x);
                root_.push_back(0);
            }
            ++root_.back();
        }
    }

    const Counts& root() const { return root_; }

    int solve(const Counts& s) {
        if (empty(s)) return 0;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        if (limit_ && stats_.nodes >= limit_) throw NodeLimit{};
        ++stats_.nodes;
        const long lb = lower_bound(s);
        int best = std::numeric_limits<int>::max();
        for (const auto& p : candidates(s)) {
            const Counts rest = minus(s, p);
            if (best != std::numeric_limits<int>::max() && 1 + lower_bound(rest) >= best) continue;
            best = std::min(best, 1 + solve(rest));
            if (best == lb) break;
        }
        memo_.emplace(s, best);
        return best;
    }

    // Lexicographically smallest optimal partition, built part by part.
    std::vector<WeightSequence> reconstruct(Counts s) {
        std::vector<WeightSequence> parts;
        while (!empty(s)) {
            const int opt = solve(s);
            std::vector<std::pair<std::vector<long>, Counts>> cands;
            for (const auto& p : candidates(s)) cands.emplace_back(expand(p), p);
            std::sort(cands.begin(), cands.end());
            bool found = false;
            for (const auto& [entries, p] : cands) {
                const Counts rest = minus(s, p);
                if (1 + lower_bound(rest) > opt) continue;
                if (1 + solve(rest) == opt) {
                    parts.emplace_back(entries);
                    s = rest;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("partition reconstruction failed");
        }
        return parts;
    }

    // Repeatedly takes the largest valid part containing the minimum.
    std::vector<WeightSequence> greedy(Counts s) {
        std::vector<WeightSequence> parts;
        while (!empty(s)) {
            auto cands = candidates(s);
            const Counts& p = cands.front();
            parts.emplace_back(expand(p));
            s = minus(s, p);
        }
        std::sort(parts.begin(), parts.end());
        return parts;
    }

    long lower_bound(const Counts& s) const {
        if (empty(s)) return 0;
        if (pred_ == PartPredicate::ade) {
            // Each ADE part holds at most one entry outside {2,3} and at most two entries other than 2.
            long big = 0, threes = 0;
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (values_[i] == 3) threes += s[i];
                else if (values_[i] != 2) big += s[i];
            }
            return std::max({big, (big + threes + 1) / 2, 1L});
        }
        // Each nonpositive part has reciprocal sum at most 1.
        Rational total = 0;
        for (std::size_t i = 0; i < values_.size(); ++i)
            total += Rational(Integer(s[i]), Integer(values_[i]));
        total.canonicalize();
        Integer c;
        mpz_cdiv_q(c.get_mpz_t(), total.get_num_mpz_t(), total.get_den_mpz_t());
        return std::max(c.get_si(), 1L);
    }

    SearchStats& stats() { return stats_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    static bool empty(const Counts& s) {
        return std::all_of(s.begin(), s.end(), [](int c) { return c == 0; });
    }
    static Counts minus(Counts s, const Counts& p) {
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= p[i];
        return s;
    }
    std::vector<long> expand(const Counts& p) const {
        std::vector<long> out;
        for (std::size_t i = 0; i < p.size(); ++i) out.insert(out.end(), static_cast<std::size_t>(p[i]), values_[i]);
        return out;
    }
    std::size_t index_of(long v) const {
        auto it = std::lower_bound(values_.begin(), values_.end(), v);
        return (it != values_.end() && *it == v) ? static_cast<std::size_t>(it - values_.begin()) : values_.size();
    }

    // Valid parts containing the smallest remaining entry, largest first.
    std::vector<Counts> candidates(const Counts& s) const {
        std::size_t m = 0;
        while (s[m] == 0) ++m;
        std::set<Counts> found;
        if (pred_ == PartPredicate::ade) {
            const std::size_t i2 = index_of(2);
            const int c2 = i2 < values_.size() ? s[i2] : 0;
            std::vector<std::vector<std::pair<std::size_t, int>>> patterns;
            patterns.push_back({});
            for (std::size_t i = 0; i < values_.size(); ++i)
                if (values_[i] != 2 && s[i] > 0) patterns.push_back({{i, 1}});
            const std::size_t i3 = index_of(3);
            if (i3 < values_.size()) {
                if (s[i3] >= 2) patterns.push_back({{i3, 2}});
                for (long other : {4L, 5L}) {
                    const std::size_t io = index_of(other);
                    if (s[i3] >= 1 && io < values_.size() && s[io] >= 1) patterns.push_back({{i3, 1}, {io, 1}});
                }
            }
            for (const auto& pat : patterns)
                for (int k = 0; k <= c2; ++k) {
                    Counts p(values_.size(), 0);
                    for (auto [i, c] : pat) p[i] += c;
                    if (k > 0) p[i2] += k;
                    if (p[m] == 0) continue;
                    found.insert(p);
                }
        } else {
            Counts p(values_.size(), 0);
            std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational sum) {
                if (i == values_.size()) {
                    if (p[m] > 0) found.insert(p);
                    return;
                }
                const int lo = i == m ? 1 : 0;
                for (int c = lo; c <= s[i]; ++c) {
                    Rational next = sum + Rational(Integer(c), Integer(values_[i]));
                    next.canonicalize();
                    if (next > 1) break;
                    p[i] = c;
                    rec(i + 1, next);
                }
                p[i] = 0;
            };
            rec(m, Rational(0));
        }
        std::vector<Counts> out(found.begin(), found.end());
        std::stable_sort(out.begin(), out.end(), [](const Counts& a, const Counts& b) {
            int sa = 0, sb = 0;
            for (int c : a) sa += c;
            for (int c : b) sb += c;
            return sa > sb;
        });
        return out;
    }

    PartPredicate pred_;
    std::uint64_t limit_;
    std::vector<long> values_;
    Counts root_;
    std::map<Counts, int> memo_;
    SearchStats stats_;
};

}  // namespace

PartitionCertificate min_partition(const WeightSequence& d, PartPredicate predicate, std::uint64_t node_limit) {
    PartitionSearch search(d, predicate, node_limit);
    PartitionCertificate cert;
    cert.predicate = predicate;
    cert.stats.root_lower_bound = search.lower_bound(search.root());
    try {
        search.solve(search.root());
        cert.parts = search.reconstruct(search.root());
        cert.minimal = true;
    } catch (const NodeLimit&) {
        cert.parts = search.greedy(search.root());
        cert.minimal = static_cast<long>(cert.parts.size()) == cert.stats.root_lower_bound;
        search.stats().exhausted = false;
    }
    cert.size = cert.parts.size();
    const SearchStats& st = search.stats();
    cert.stats.nodes = st.nodes;
    cert.stats.exhausted = st.exhausted;
    cert.stats.memo_states = search.memo_size();
    return cert;
}

std::size_t exhaustive_min_parts(const WeightSequence& d, PartPredicate predicate) {
    const auto& e = d.entries();
    const std::size_t n = e.size();
    std::vector<std::size_t> label(n, 0);
    std::size_t best = n;
    // Restricted growth strings enumerate every set partition once.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
        if (blocks >= best) return;
        if (i == n) {
            std::vector<std::vector<long>> parts(blocks);
            for (std::size_t j = 0; j < n; ++j) parts[label[j]].push_back(e[j]);
            for (auto& p : parts)
                if (!satisfies(WeightSequence(p), predicate)) return;
            best = blocks;
            return;
        }
        for (std::size_t b = 0; b <= blocks; ++b) {
            label[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return best;
}

RouquierVerdict rouquier_verdict(const WeightSequence& d, std::uint64_t node_limit) {
    RouquierVerdict v;
    v.h_certificate = min_partition(d, PartPredicate::ade, node_limit);
    v.q_certificate = min_partition(d, PartPredicate::nonpositive, node_limit);
    v.n_plus_1 = static_cast<long>(d.size());
    v.h = static_cast<long>(v.h_certificate.size);
    v.q = static_cast<long>(v.q_certificate.size);
    v.lower = v.n_plus_1 - 2 * v.q;
    v.upper = v.h - 1;
    v.conjecture_holds = v.n_plus_1 == v.h + 2 * v.q - 1;
    if (v.lower == v.upper) v.exact = v.lower;
    return v;
}

long sum_generator_bound(const std::vector<long>& times, long s) {
    if (times.empty()) throw std::invalid_argument("sum_generator_bound: empty sequence");
    if (s != static_cast<long>(times.size()))
        throw std::invalid_argument("sum_generator_bound: s must equal the number of generation times");
    long total = s - 1;
    for (long t : times) total += t;
    return total;
}

}  // namespace hsing
