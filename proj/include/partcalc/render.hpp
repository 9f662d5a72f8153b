#pragma once

// Text renderings of computation results. Values are always exact decimal
// strings, JSON included.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partcalc/dispatch.hpp"

namespace partcalc {

enum class Format { plain, json, csv };

std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

/// One output row. Quantity and method are empty after parsing CSV, which
/// carries only n and value.
struct TableRow {
    std::string quantity;
    std::uint32_t n = 0;
    std::optional<std::uint32_t> r;
    std::string method;
    ExactInt value;

    static TableRow from(const ComputationResult& result);
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Single result: plain "pp(3) = 6 [method=theorem]", a JSON object, or CSV with one row.
std::string render_result(const ComputationResult& result, Format format);
/// Plain "n value" lines, a JSON array of objects, or CSV "n,value".
std::string render_table(const std::vector<TableRow>& rows, Format format);
/// Inverse of render_table for json and csv; throws std::invalid_argument on malformed input.
std::vector<TableRow> parse_table(std::string_view text, Format format);

}  // namespace partcalc
