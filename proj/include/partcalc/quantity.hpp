#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace partcalc {

enum class Quantity { p, pp, pp_r, pps, ppso, P_r, p_a };

std::string_view to_string(Quantity q);
/// Accepts the names printed by to_string; nullopt otherwise.
std::optional<Quantity> parse_quantity(std::string_view name);

/// True for pp_r and P_r, which take a component/row count r.
constexpr bool needs_r(Quantity q) { return q == Quantity::pp_r || q == Quantity::P_r; }

}  // namespace partcalc
