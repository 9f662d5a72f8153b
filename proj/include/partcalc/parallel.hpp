#pragma once

// Slicing helpers for the sums that may be split across workers. Every
// caller combines slice results with exact arithmetic, so the value never
// depends on the slice count.

#include <algorithm>
#include <cstddef>
#include <future>
#include <utility>
#include <vector>

namespace partcalc {

/// Number of contiguous slices an enumeration domain is cut into; each slice
/// runs on its own thread. One slice runs inline.
struct Partitioning {
    std::size_t slices = 1;
};

/// Half-open [begin, end) bounds of slice `index` when `size` items are cut
/// into `slices` nearly equal contiguous pieces.
inline std::pair<std::size_t, std::size_t> slice_bounds(std::size_t size, std::size_t slices,
                                                        std::size_t index) {
    std::size_t base = size / slices, extra = size % slices;
    std::size_t begin = index * base + std::min(index, extra);
    return {begin, begin + base + (index < extra ? 1 : 0)};
}

/// Runs `slice_fn(begin, end)` over every slice and folds the results in slice
/// order with `combine`.
template <class T, class SliceFn, class Combine>
T partitioned_reduce(std::size_t size, Partitioning partitioning, T init, SliceFn slice_fn,
                     Combine combine) {
    std::size_t slices = std::max<std::size_t>(1, std::min(partitioning.slices, std::max<std::size_t>(size, 1)));
    if (slices == 1) return combine(std::move(init), slice_fn(std::size_t{0}, size));
    std::vector<std::future<T>> parts;
    parts.reserve(slices);
    for (std::size_t i = 0; i < slices; ++i) {
        auto [b, e] = slice_bounds(size, slices, i);
        parts.push_back(std::async(std::launch::async, slice_fn, b, e));
    }
    for (auto& f : parts) init = combine(std::move(init), f.get());
    return init;
}

}  // namespace partcalc
