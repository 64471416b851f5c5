#pragma once

#include "qbell/states.hpp"

namespace qbell {

/// Bipartite entanglement of the probe.  C is the concurrence of the
/// two-component superposition with nonorthogonal branches; E is its
/// entanglement entropy in ebits (binary entropy of the Schmidt weights).
struct EntanglementResult {
  double C;
  double E;
  double kappa;
};

/// Concurrence C = 2|l|(1 - kappa^2) / (1 + l^2 + 2 l kappa^2).
/// 0 at l = 0 (product state), exactly 1 at l = -1 for any kappa < 1, and
/// (1 - kappa^2)/(1 + kappa^2) at l = 1 (reaching 1 only as kappa -> 0).
double concurrence(const ProbeParams& p);

/// E = h2((1 + sqrt(1 - C^2))/2) with h2 the base-2 binary entropy; equals
/// the von Neumann entropy of the reduced single-mode state.
EntanglementResult entanglement_entropy(const ProbeParams& p);

}  // namespace qbell
