#pragma once

#include <functional>
#include <optional>

#include "quasicover/extended.hpp"
#include "quasicover/metrics.hpp"

namespace quasicover {

// Lifts a symbol metric through an injection into a larger point set.
//
// Given a list of points (identified by index) where each point either has a
// preimage symbol or does not, the induced distance is:
//   - 0 between a point and itself,
//   - the base distance between preimages when both points have one,
//   - infinity in every other case.
//
// preimage[i] is the preimage symbol of point i, or nullopt. Two distinct
// points sharing a preimage would make the map non-injective; that is
// rejected with InputError.
std::vector<std::vector<ExtCost>> induced_extended_metric(
    const std::vector<std::optional<Symbol>>& preimage,
    const std::function<Rational(Symbol, Symbol)>& base);

}  // namespace quasicover
