#pragma once

#include "relnet/architectures.hpp"

#include <optional>

namespace relnet {

enum class Regime { SeriesLike, ParallelLike, Saturating };

const char* regime_name(Regime r);

struct RegimeLabel {
    Regime regime;
    // present for saturating families: the interior limit R_inf(p)
    std::optional<RationalFunction> r_infinity;
};

/// Label hard-coded per family (asserted against the numeric test).
Regime expected_regime(Family family);

/// Numeric routing: evaluate R_n(1/2) exactly for n in {4, 8, 16} and test
/// the monotone approach to 0, 1, or an interior limit. Throws
/// InconclusiveError when the three samples are non-monotone, and reports a
/// mismatch against the hard-coded label as UnsupportedError.
RegimeLabel classify(Family family, int k = 2);

}  // namespace relnet
