#include "relnet/classify.hpp"

#include "relnet/errors.hpp"

namespace relnet {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::SeriesLike: return "series-like";
        case Regime::ParallelLike: return "parallel-like";
        case Regime::Saturating: return "saturating";
    }
    return "?";
}

Regime expected_regime(Family family) {
    switch (family) {
        case Family::Series:
        case Family::K4Ladder:
        case Family::Street3xN:
            return Regime::SeriesLike;
        case Family::Parallel:
        case Family::KOutOfN:  // fixed k, growing n
        case Family::DoubleFan:
            return Regime::ParallelLike;
        case Family::GeneralizedFan:
            return Regime::Saturating;
    }
    throw UnsupportedError("unhandled family");
}

RegimeLabel classify(Family family, int k) {
    const Rational half(1, 2);
    auto seq = reliability_sequence(family, 16, k);
    const Rational r4 = seq[4].eval(half);
    const Rational r8 = seq[8].eval(half);
    const Rational r16 = seq[16].eval(half);

    const Rational d1 = r8 - r4;
    const Rational d2 = r16 - r8;
    if ((d1 > 0) != (d2 > 0) && d1 != 0 && d2 != 0)
        throw InconclusiveError("R_n(1/2) samples are not monotone in n");

    Regime numeric;
    // converged when |R_16 - R_8| < R_8 * 2^(-8/4); geometric families
    // contract much faster than that
    const Rational conv_threshold = r8 / Rational(4);
    const Rational abs_d2 = d2 < 0 ? Rational(-d2) : d2;
    if (d2 <= 0) {
        numeric = abs_d2 < conv_threshold ? Regime::Saturating : Regime::SeriesLike;
    } else {
        // increasing: parallel-like when the unavailability keeps halving
        const Rational u8 = Rational(1) - r8;
        const Rational u16 = Rational(1) - r16;
        numeric = (2 * u16 < u8) ? Regime::ParallelLike : Regime::Saturating;
    }

    const Regime expected = expected_regime(family);
    if (numeric != expected)
        throw UnsupportedError(std::string("numeric classification '") + regime_name(numeric) +
                               "' disagrees with the built-in label '" + regime_name(expected) + "'");

    RegimeLabel label{numeric, std::nullopt};
    if (family == Family::GeneralizedFan) label.r_infinity = fan_limit_reliability();
    return label;
}

}  // namespace relnet
