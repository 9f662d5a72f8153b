#include "partcalc/diagrams.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace partcalc {

namespace {

using Row = std::vector<std::uint32_t>;

// Calls emit(row, row_sum) for every nonempty weakly decreasing row with
// sum <= budget and, when `above` is given, row[i] <= (*above)[i] and no more
// entries than `above`.
template <class Emit>
void for_each_row(const Row* above, std::uint32_t budget, Emit&& emit) {
    Row row;
    auto rec = [&](auto&& self, std::uint32_t sum) -> void {
        const std::size_t i = row.size();
        if (i > 0) emit(row, sum);
        if (above && i >= above->size()) return;
        std::uint32_t hi = budget - sum;
        if (i > 0) hi = std::min(hi, row.back());
        if (above) hi = std::min(hi, (*above)[i]);
        for (std::uint32_t v = hi; v >= 1; --v) {
            row.push_back(v);
            self(self, sum + v);
            row.pop_back();
        }
    };
    rec(rec, 0);
}

void extend(std::uint32_t remaining, std::vector<Row>& rows, std::vector<PlanePartitionDiagram>& out) {
    if (remaining == 0) {
        out.push_back(PlanePartitionDiagram{rows});
        return;
    }
    const Row above = rows.back();  // rows reallocates below
    for_each_row(&above, remaining, [&](const Row& row, std::uint32_t sum) {
        rows.push_back(row);
        extend(remaining - sum, rows, out);
        rows.pop_back();
    });
}

}  // namespace

std::uint64_t PlanePartitionDiagram::total() const {
    std::uint64_t t = 0;
    for (const auto& r : rows) t = std::accumulate(r.begin(), r.end(), t);
    return t;
}

std::uint32_t PlanePartitionDiagram::at(std::size_t i, std::size_t j) const {
    if (i >= rows.size() || j >= rows[i].size()) return 0;
    return rows[i][j];
}

bool PlanePartitionDiagram::is_canonical() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        if (r.empty()) return false;
        if (i > 0 && r.size() > rows[i - 1].size()) return false;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] == 0) return false;
            if (j > 0 && r[j] > r[j - 1]) return false;
            if (i > 0 && r[j] > rows[i - 1][j]) return false;
        }
    }
    return true;
}

bool PlanePartitionDiagram::is_strict() const {
    for (const Row& r : rows)
        for (std::size_t j = 1; j < r.size(); ++j)
            if (r[j - 1] <= r[j]) return false;
    return true;
}

bool PlanePartitionDiagram::is_symmetric() const {
    const std::size_t side = std::max(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = i + 1; j < side; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool PlanePartitionDiagram::has_only_odd_parts() const {
    for (const Row& r : rows)
        for (std::uint32_t v : r)
            if (v % 2 == 0) return false;
    return true;
}

std::vector<PlanePartitionDiagram> enumerate_diagrams(std::uint32_t n, const EnumerationOptions& options) {
    if (n == 0) throw std::invalid_argument("enumerate_diagrams: n must be at least 1");
    if (n > options.cap)
        throw std::out_of_range("enumerate_diagrams: n = " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(options.cap));

    std::vector<Row> first_rows;
    for_each_row(nullptr, n, [&](const Row& row, std::uint32_t) { first_rows.push_back(row); });

    using Batch = std::vector<PlanePartitionDiagram>;
    Batch all = partitioned_reduce(
        first_rows.size(), options.partitioning, Batch{},
        [&](std::size_t begin, std::size_t end) {
            Batch out;
            std::vector<Row> rows;
            for (std::size_t i = begin; i < end; ++i) {
                const Row& first = first_rows[i];
                rows.assign(1, first);
                extend(n - std::accumulate(first.begin(), first.end(), 0u), rows, out);
            }
            return out;
        },
        [](Batch acc, Batch part) {
            acc.insert(acc.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
            return acc;
        });
    std::sort(all.begin(), all.end());
    return all;
}

bool DiagramFilter::accepts(const PlanePartitionDiagram& d) const {
    switch (kind) {
        case Kind::all: return true;
        case Kind::max_rows: return d.num_rows() <= r;
        case Kind::strict: return d.is_strict();
        case Kind::symmetric: return d.is_symmetric();
        case Kind::strict_odd: return d.is_strict() && d.has_only_odd_parts();
    }
    return false;
}

ExactInt count_filtered(std::uint32_t n, DiagramFilter filter, const EnumerationOptions& options) {
    const auto diagrams = enumerate_diagrams(n, options);
    return ExactInt(static_cast<std::int64_t>(
        std::count_if(diagrams.begin(), diagrams.end(), [&](const auto& d) { return filter.accepts(d); })));
}

}  // namespace partcalc
