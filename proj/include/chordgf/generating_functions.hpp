#pragma once

#include <cstddef>
#include <string>

#include "chordgf/power_series.hpp"

namespace chordgf {

/// Sum over n of (2n-1)!! x^n, all rooted diagrams.
PowerSeries series_D(std::size_t order);
/// Connected diagrams, from 2x C C' = C(1 + C) - x solved coefficientwise.
/// Requires order >= 1.
PowerSeries series_C(std::size_t order);
/// t = C^2/x.
PowerSeries series_t(std::size_t order);
/// 2-connected diagrams: (t - C) composed with the reversion of t.
/// Requires order >= 2.
PowerSeries series_C2(std::size_t order);
/// Diagrams of connectivity exactly one: C - C2.
PowerSeries series_C1(std::size_t order);
/// 1 / (1 - C2/x).
PowerSeries series_S(std::size_t order);

/// Looks a family up by its CLI name (D, C, C1, C2, S); throws
/// PreconditionError for anything else.
PowerSeries series_by_name(const std::string& family, std::size_t order);

// Residuals of the three identities tying D and C together. Each is the
// zero series exactly when the identity holds to its order.
PowerSeries lemma_composition_residual(std::size_t order);  // D - 1 - C(x D^2)
PowerSeries lemma_linear_residual(std::size_t order);       // D - 1 - x D - 2 x^2 D'
PowerSeries lemma_ode_residual(std::size_t order);          // 2x C C' - C(1 + C) + x

/// C' - (C - x)/x^2 * [1 - C2'(C^2/x)] for caller-supplied C and C2. The
/// result has order min(c.order, c2.order) - 2.
PowerSeries derivative_identity_residual(const PowerSeries& c, const PowerSeries& c2);
/// True iff the identity holds exactly to order - 1. Requires order >= 3.
bool verify_derivative_identity(std::size_t order);

/// The four series of the 2-connected decomposition.
struct DecompositionSeries {
  PowerSeries t_series;      // C^2/x
  PowerSeries ratio;         // (C2(t)/t^2) at t = C^2/x
  PowerSeries root_free;     // C^2 * ratio
  PowerSeries root_covered;  // (C - x)/x * C^2 * ratio
};
DecompositionSeries decomposition_series(std::size_t order);

}  // namespace chordgf
