#pragma once

#include <cstdint>
#include <optional>

#include "pretzel/presentation.hpp"

namespace pretzel {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

struct EnumerationResult {
  /// Group order when the coset table closed; empty when the cap was hit.
  std::optional<std::uint64_t> order;
  /// Coset rows allocated, including ones later found to coincide.
  std::size_t cosets_defined = 0;

  bool finite() const { return order.has_value(); }
};

/// HLT coset enumeration over the trivial subgroup, with coincidences
/// processed as soon as they arise. At most `max_cosets` rows are ever
/// allocated. Throws std::invalid_argument if max_cosets is zero.
EnumerationResult todd_coxeter(const GroupPresentation& g,
                               std::size_t max_cosets = kDefaultMaxCosets);

/// PRETZEL_MAX_COSETS when set to a positive integer, else kDefaultMaxCosets.
std::size_t default_max_cosets();

}  // namespace pretzel
