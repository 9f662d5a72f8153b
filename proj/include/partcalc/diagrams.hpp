#pragma once

// Brute-force plane-partition enumeration for small n. Predicates are applied
// to the arrays themselves, so this oracle does not rely on any generating
// function.

#include <cstdint>
#include <vector>

#include "partcalc/exact.hpp"
#include "partcalc/parallel.hpp"

namespace partcalc {

/// Rows of positive entries, weakly decreasing along rows and down columns,
/// each row no longer than the one above. Zero padding is never stored.
struct PlanePartitionDiagram {
    std::vector<std::vector<std::uint32_t>> rows;

    std::uint64_t total() const;
    std::size_t num_rows() const { return rows.size(); }
    /// Entry at (i, j), zero outside the stored shape.
    std::uint32_t at(std::size_t i, std::size_t j) const;
    bool is_canonical() const;
    bool is_strict() const;
    bool is_symmetric() const;
    bool has_only_odd_parts() const;

    friend auto operator<=>(const PlanePartitionDiagram&, const PlanePartitionDiagram&) = default;
};

struct EnumerationOptions {
    std::uint32_t cap = 10;
    Partitioning partitioning{};
};

/// Every diagram of weight n exactly once, sorted lexicographically by rows.
/// Throws std::invalid_argument for n = 0 and std::out_of_range above the cap.
std::vector<PlanePartitionDiagram> enumerate_diagrams(std::uint32_t n, const EnumerationOptions& options = {});

struct DiagramFilter {
    enum class Kind { all, max_rows, strict, symmetric, strict_odd };
    Kind kind = Kind::all;
    std::uint32_t r = 0;  // max_rows only

    static DiagramFilter all() { return {Kind::all, 0}; }
    static DiagramFilter max_rows(std::uint32_t r) { return {Kind::max_rows, r}; }
    static DiagramFilter strict() { return {Kind::strict, 0}; }
    static DiagramFilter symmetric() { return {Kind::symmetric, 0}; }
    /// Strict with every entry odd.
    static DiagramFilter strict_odd() { return {Kind::strict_odd, 0}; }

    bool accepts(const PlanePartitionDiagram& d) const;
};

ExactInt count_filtered(std::uint32_t n, DiagramFilter filter, const EnumerationOptions& options = {});

}  // namespace partcalc
