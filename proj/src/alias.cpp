#include "nrgraph/alias.hpp"

#include <stdexcept>

namespace nrgraph {

AliasTable::AliasTable(std::span<const double> weights)
    : probability_(weights.size(), 0.0), alias_(weights.size(), 0) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("AliasTable: no weights");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("AliasTable: negative weight");
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("AliasTable: weights sum to zero");

  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / total;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const auto s = small.back();
    small.pop_back();
    const auto l = large.back();
    probability_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (auto i : large) probability_[i] = 1.0;
  for (auto i : small) probability_[i] = 1.0;
}

std::size_t AliasTable::sample(Rng& rng) const {
  const auto column = static_cast<std::size_t>(
      (static_cast<unsigned __int128>(rng()) * probability_.size()) >> 64);
  const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return coin < probability_[column] ? column : alias_[column];
}

}  // namespace nrgraph
