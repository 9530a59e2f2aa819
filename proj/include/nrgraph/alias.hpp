#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nrgraph/weights.hpp"

namespace nrgraph {

/// Vose alias table: O(n) construction, O(1) draws from a discrete law
/// proportional to non-negative weights.
class AliasTable {
 public:
  /// Throws std::invalid_argument on an empty span, negative entries, or a
  /// zero total.
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return probability_.size(); }
  std::size_t sample(Rng& rng) const;

 private:
  std::vector<double> probability_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace nrgraph
