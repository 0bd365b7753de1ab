#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "cogsem/operation.hpp"

namespace cogsem {

// T, F, U (undecided), V (vacant), and ud for senses that are not
// propositions at all.
enum class Truth : std::uint8_t { T, F, U, V, ud };

enum class Logic { kleene, lukasiewicz };

std::string_view to_string(Truth t) noexcept;
std::string_view to_string(Logic l) noexcept;
std::optional<Logic> parse_logic(std::string_view s) noexcept;

inline bool in_z(Truth t) noexcept { return t != Truth::ud; }

Truth negate(Truth a, Logic logic = Logic::kleene) noexcept;

// V absorbs every connective; ud absorbs everything. Exclusive-or is
// (a or b) and not (a and b).
Truth connect(ConnectiveId c, Truth a, Truth b, Logic logic = Logic::kleene) noexcept;

}  // namespace cogsem
