#pragma once

// Weight sequences a = (a_1, ..., a_r) for the restricted partition function,
// in explicit (with multiplicity) and compressed (part -> multiplicity) form.

#include <cstdint>
#include <utility>
#include <string>
#include <vector>

#include "partcalc/exact.hpp"

namespace partcalc {

/// Multiplicity w(k) for each part k in 1..bound.
class WeightFunction {
public:
    WeightFunction() = default;
    /// weights[k-1] = w(k).
    WeightFunction(std::uint32_t bound, std::vector<std::uint32_t> weights);

    std::uint32_t bound() const { return bound_; }
    /// Zero for k = 0 or k > bound.
    std::uint32_t weight(std::uint32_t k) const;

    // w(k) = k: plane partitions.
    static WeightFunction plane(std::uint32_t bound);
    // w(k) = min{k, r}: plane partitions with at most r rows.
    static WeightFunction plane_rows(std::uint32_t bound, std::uint32_t r);
    // w(k) = floor((k+1)/2): strict plane partitions.
    static WeightFunction plane_strict(std::uint32_t bound);
    // w(k) = 1 for odd k, k/2 for even k.
    static WeightFunction plane_symmetric(std::uint32_t bound);
    // w(k) = r: r-component multipartitions.
    static WeightFunction multipartition(std::uint32_t bound, std::uint32_t r);
    // w(k) = 1: ordinary partitions.
    static WeightFunction ordinary(std::uint32_t bound);

    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

private:
    std::uint32_t bound_ = 0;
    std::vector<std::uint32_t> weights_;
};

/// Multiplicity of k in the symmetric-plane-partition sequence: 1 if k is odd, k/2 if even.
std::uint32_t symmetric_multiplicity(std::uint32_t k);

class WeightSequence {
public:
    /// Sorts the parts; throws std::invalid_argument if empty or any part is 0.
    explicit WeightSequence(std::vector<std::uint32_t> parts);
    /// Expands k repeated w(k) times; throws if the expansion is empty.
    static WeightSequence from_function(const WeightFunction& w);

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    /// Distinct parts in increasing order with their multiplicities.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& compressed() const { return compressed_; }
    std::size_t length() const { return parts_.size(); }
    const ExactInt& lcm() const { return lcm_; }
    std::uint32_t multiplicity(std::uint32_t part) const;
    std::uint32_t max_part() const { return parts_.back(); }
    /// "(a1,a2,...)"
    std::string to_string() const;

    WeightFunction to_function() const;

    friend bool operator==(const WeightSequence& a, const WeightSequence& b) { return a.parts_ == b.parts_; }

private:
    std::vector<std::uint32_t> parts_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> compressed_;
    ExactInt lcm_;
};

WeightSequence seq_pp(std::uint32_t n);
WeightSequence seq_pp_r(std::uint32_t n, std::uint32_t r);
WeightSequence seq_strict(std::uint32_t n);
WeightSequence seq_symmetric(std::uint32_t n);
WeightSequence seq_multipartition(std::uint32_t n, std::uint32_t r);
WeightSequence seq_ordinary(std::uint32_t n);

}  // namespace partcalc
