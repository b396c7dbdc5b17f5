#pragma once

#include <cstddef>

#include "simulgame/engine.hpp"
#include "simulgame/position.hpp"
#include "simulgame/rational.hpp"

namespace simulgame::oracle {

/// Reachable-position budget for one brute-force run.
inline constexpr std::size_t kMaxPositions = 100000;

/// Backward induction using only support enumeration. Throws SizeLimit past
/// kMaxPositions or any matrix above 5x5, LoopyGame on a repeated position.
Rational brute_ex(const Position& p, Convention convention);

/// [ell, arr] by the same method on the win-indicator payoffs.
GuaranteeProfile brute_profile(const Position& p, Convention convention);

}  // namespace simulgame::oracle
