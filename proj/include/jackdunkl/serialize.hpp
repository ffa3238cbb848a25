#pragma once

#include <cstdint>
#include <json.hpp>
#include <string_view>

#include "jackdunkl/laurent.hpp"

namespace jackdunkl {

/// Canonical form: [{"exp":[...],"num":"...","den":"..."}, ...] in key order.
nlohmann::ordered_json to_json(const QPoly& p);
QPoly qpoly_from_json(int n, const nlohmann::ordered_json& j);

/// mu-coefficients become {"exp":[...],"mu":["c0","c1",...]}.
nlohmann::ordered_json to_json(const MuLaurent& p);
MuLaurent mulaurent_from_json(int n, const nlohmann::ordered_json& j);

std::uint64_t fnv1a(std::string_view bytes);

}  // namespace jackdunkl
