#pragma once

#include "relnet/poly.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace relnet {

enum class Family {
    Series,
    Parallel,
    KOutOfN,
    K4Ladder,
    GeneralizedFan,
    DoubleFan,
    Street3xN,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws UnsupportedError

/// A family instance. n indexes the size; k is used by KOutOfN only.
struct Architecture {
    Family family;
    int n = 1;
    int k = 0;
};

/// Throws UnsupportedError on invalid (family, n, k) combinations.
void validate(const Architecture& arch);

/// Explicit node/edge realization used by the oracle. Edges may repeat
/// (parallel links); self-loops are never produced.
struct Graph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    int source = 0;
    int target = 0;
};

/// Ratio of two polynomials, used for saturating limits.
struct RationalFunction {
    Poly num;
    Poly den;
    Rational eval(const Rational& x) const { return num.eval(x) / den.eval(x); }
};

// ---- eigen data -----------------------------------------------------------
//
// Enough recursion structure for the asymptotics module to produce zeta+
// and alpha+ as truncated series. x0/x1 are the seeds of
// x_n = trace x_{n-1} - det x_{n-2}; on_unavailability says whether x is
// U_n (parallel-like) instead of R_n (series-like).

struct TwoEigen {
    Poly trace;
    Poly det;
    Poly x0;
    Poly x1;
    bool on_unavailability = false;
};

/// Generating function N / (D1 D2); vectors hold z-power coefficients,
/// each an exact polynomial in p.
struct DenominatorRoot {
    std::vector<Poly> numer;
    std::vector<Poly> den1;
    std::vector<Poly> den2;
    std::vector<Poly> full_denominator() const;
};

/// Closed-form dominant eigenvalue and amplitude (series/parallel chains).
struct ExplicitEigen {
    Poly zeta;
    Poly alpha;
    bool on_unavailability = false;
};

/// Families whose dominant structure is a repeated eigenvalue with an
/// n-linear prefactor; no simple (zeta+, alpha+) pair exists.
struct RepeatedEigen {
    Poly zeta;
};

using EigenData = std::variant<TwoEigen, DenominatorRoot, ExplicitEigen, RepeatedEigen>;

// ---- operations ------------------------------------------------------------

/// Exact two-terminal reliability polynomial R_n(p).
Poly reliability_polynomial(const Architecture& arch);

/// R_0..R_{n_max} in one pass (the recursions are shared work).
std::vector<Poly> reliability_sequence(Family family, int n_max, int k = 0);

/// Graph realization; KOutOfN has none (structure function, not a graph).
Graph graph(const Architecture& arch);

EigenData eigen_data(const Architecture& arch);

/// n -> infinity reliability of the generalized fan, p^2/(1-p(1-p))^2.
RationalFunction fan_limit_reliability();

}  // namespace relnet
