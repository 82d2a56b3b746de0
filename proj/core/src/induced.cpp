#include "quasicover/induced.hpp"

namespace quasicover {

std::vector<std::vector<ExtCost>> induced_extended_metric(
    const std::vector<std::optional<Symbol>>& preimage,
    const std::function<Rational(Symbol, Symbol)>& base) {
  std::size_t k = preimage.size();
  // The underlying map must be injective: no two points may claim the same
  // preimage.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (preimage[i] && preimage[j] && *preimage[i] == *preimage[j]) {
        throw InputError("image description is not injective: points " + std::to_string(i) +
                         " and " + std::to_string(j) + " share a preimage");
      }
    }
  }
  std::vector<std::vector<ExtCost>> d(k, std::vector<ExtCost>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) {
        d[i][j] = ExtCost(Rational(0));
      } else if (preimage[i] && preimage[j]) {
        d[i][j] = ExtCost(base(*preimage[i], *preimage[j]));
      } else {
        d[i][j] = ExtCost::infinity();
      }
    }
  }
  return d;
}

}  // namespace quasicover
