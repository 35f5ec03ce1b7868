#include "hsing/weight_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hsing {

WeightSequence::WeightSequence(std::vector<long> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("weight sequence must be nonempty");
    for (long d : entries_)
        if (d < 1) throw std::invalid_argument("weights must be >= 1, got " + std::to_string(d));
    std::sort(entries_.begin(), entries_.end());
}

WeightSequence WeightSequence::parse(std::string_view text) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) throw std::invalid_argument("empty entry in weight list '" + std::string(text) + "'");
        long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("not an integer: '" + std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return WeightSequence(std::move(out));
}

Integer WeightSequence::lcm() const {
    Integer l = 1;
    for (long d : entries_) l = hsing::lcm(l, Integer(d));
    return l;
}

Integer WeightSequence::product() const {
    Integer p = 1;
    for (long d : entries_) p *= d;
    return p;
}

Rational WeightSequence::mu_bar() const {
    Rational s = -1;
    for (long d : entries_) s += Rational(Integer(1), Integer(d));
    s.canonicalize();
    return s;
}

bool WeightSequence::has_unit_weight() const {
    return !entries_.empty() && entries_.front() == 1;
}

std::string WeightSequence::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

WeightSequence concat(const WeightSequence& a, const WeightSequence& b) {
    std::vector<long> all = a.entries();
    all.insert(all.end(), b.entries().begin(), b.entries().end());
    return WeightSequence(std::move(all));
}

}  // namespace hsing
