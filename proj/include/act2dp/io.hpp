#pragma once

#include <string>
#include <string_view>

#include "act2dp/model.hpp"

namespace act2dp {

inline constexpr int kFormatVersion = 1;

/// Instance document:
///   {"version":1,"n_nodes":N,"s":S,"t":T,
///    "edges":[{"id":I,"u":U,"v":V,"cu":CU,"cv":CV,"cmid":CM},...],
///    "path":[edge ids]}            // path optional, cmid optional (0)
/// An optional "k" member must equal 2.
std::string emit_instance(const ActivationInstance& instance);
ActivationInstance parse_instance(std::string_view text);

/// Solution document: {"version":1,"edges":[ids],"levels":[ints],"value":V,"feasible":B}
std::string emit_solution(const Solution& solution);
Solution parse_solution(std::string_view text);

/// Whole file as a string; throws InvalidInput when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace act2dp
