#include "partcalc/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace partcalc {

namespace {

template <class F>
WeightFunction tabulate(std::uint32_t bound, F&& w) {
    std::vector<std::uint32_t> weights(bound);
    for (std::uint32_t k = 1; k <= bound; ++k) weights[k - 1] = w(k);
    return WeightFunction(bound, std::move(weights));
}

void require_positive(std::uint32_t v, const char* what) {
    if (v == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

}  // namespace

WeightFunction::WeightFunction(std::uint32_t bound, std::vector<std::uint32_t> weights)
    : bound_(bound), weights_(std::move(weights)) {
    if (weights_.size() != bound_)
        throw std::invalid_argument("weight table size must equal the bound");
}

std::uint32_t WeightFunction::weight(std::uint32_t k) const {
    if (k == 0 || k > bound_) return 0;
    return weights_[k - 1];
}

WeightFunction WeightFunction::plane(std::uint32_t bound) {
    return tabulate(bound, [](std::uint32_t k) { return k; });
}

WeightFunction WeightFunction::plane_rows(std::uint32_t bound, std::uint32_t r) {
    require_positive(r, "r");
    return tabulate(bound, [r](std::uint32_t k) { return std::min(k, r); });
}

WeightFunction WeightFunction::plane_strict(std::uint32_t bound) {
    return tabulate(bound, [](std::uint32_t k) { return (k + 1) / 2; });
}

WeightFunction WeightFunction::plane_symmetric(std::uint32_t bound) {
    return tabulate(bound, symmetric_multiplicity);
}

WeightFunction WeightFunction::multipartition(std::uint32_t bound, std::uint32_t r) {
    require_positive(r, "r");
    return tabulate(bound, [r](std::uint32_t) { return r; });
}

WeightFunction WeightFunction::ordinary(std::uint32_t bound) {
    return tabulate(bound, [](std::uint32_t) { return 1u; });
}

std::uint32_t symmetric_multiplicity(std::uint32_t k) { return (k % 2 == 1) ? 1 : k / 2; }

WeightSequence::WeightSequence(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("weight sequence must be nonempty");
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
        throw std::invalid_argument("weight sequence parts must be positive");
    std::sort(parts_.begin(), parts_.end());
    lcm_ = ExactInt(1);
    for (std::uint32_t p : parts_) {
        if (!compressed_.empty() && compressed_.back().first == p) {
            ++compressed_.back().second;
        } else {
            compressed_.emplace_back(p, 1);
            lcm_ = partcalc::lcm(lcm_, ExactInt(p));
        }
    }
}

WeightSequence WeightSequence::from_function(const WeightFunction& w) {
    std::vector<std::uint32_t> parts;
    for (std::uint32_t k = 1; k <= w.bound(); ++k) parts.insert(parts.end(), w.weight(k), k);
    return WeightSequence(std::move(parts));
}

std::uint32_t WeightSequence::multiplicity(std::uint32_t part) const {
    auto it = std::lower_bound(compressed_.begin(), compressed_.end(), std::pair{part, 0u});
    return (it != compressed_.end() && it->first == part) ? it->second : 0;
}

std::string WeightSequence::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out + ")";
}

WeightFunction WeightSequence::to_function() const {
    std::vector<std::uint32_t> weights(max_part(), 0);
    for (auto [part, mult] : compressed_) weights[part - 1] = mult;
    return WeightFunction(max_part(), std::move(weights));
}

WeightSequence seq_pp(std::uint32_t n) {
    require_positive(n, "n");
    return WeightSequence::from_function(WeightFunction::plane(n));
}

WeightSequence seq_pp_r(std::uint32_t n, std::uint32_t r) {
    require_positive(n, "n");
    return WeightSequence::from_function(WeightFunction::plane_rows(n, r));
}

WeightSequence seq_strict(std::uint32_t n) {
    require_positive(n, "n");
    return WeightSequence::from_function(WeightFunction::plane_strict(n));
}

WeightSequence seq_symmetric(std::uint32_t n) {
    require_positive(n, "n");
    return WeightSequence::from_function(WeightFunction::plane_symmetric(n));
}

WeightSequence seq_multipartition(std::uint32_t n, std::uint32_t r) {
    require_positive(n, "n");
    return WeightSequence::from_function(WeightFunction::multipartition(n, r));
}

WeightSequence seq_ordinary(std::uint32_t n) {
    require_positive(n, "n");
    return WeightSequence::from_function(WeightFunction::ordinary(n));
}

}  // namespace partcalc
