#ifndef CAGVRP_TOLERANCES_HPP
#define CAGVRP_TOLERANCES_HPP

namespace cagvrp {

/// Central numeric tolerances. Every module compares through these; no
/// local magic epsilons.
namespace tol {

/// LP primal feasibility (row activity and bound satisfaction).
inline constexpr double feasibility = 1e-7;

/// A variable value v is integral when |v - round(v)| <= integrality.
inline constexpr double integrality = 1e-6;

/// Minimum violation for a separated cut to be worth emitting.
inline constexpr double cut_violation = 1e-4;

/// Cost-equality tolerance used when comparing solver objective values.
inline constexpr double cost_eq = 1e-6;

/// Exact-arithmetic tolerance (re-summations of identical terms).
inline constexpr double exact = 1e-9;

/// Support-graph activation threshold for relaxation values.
inline constexpr double support = 1e-6;

}  // namespace tol

}  // namespace cagvrp

#endif
