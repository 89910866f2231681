#pragma once

#include <vector>

#include "hyperforge/bigint.hpp"

namespace hyperforge {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank over Q by fraction-free (Bareiss) elimination; every intermediate
/// stays integral.
int rank_fraction_free(IntMatrix m);

} // namespace hyperforge
