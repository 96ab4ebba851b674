#pragma once

#include <vector>

#include "gdm/graph.hpp"

namespace gdm {

// Separation oracle: is there an acyclic gamma-nonzero set containing every
// edge of `keep` and none of `avoid`? Decided by comparing kappa of the
// contraction/deletion minor against kappa of g; no enumeration involved.
// The two sets must be disjoint.
bool is_separable(const LabelledGraph& g, const std::vector<int>& keep,
                  const std::vector<int>& avoid);

// A concrete witness for a separable pair: a feasible set F with
// keep ⊆ F and F ∩ avoid = ∅, built from per-component spanning trees of
// the contraction/deletion minor. Throws undefined_operation when the pair
// is not separable. Deterministic: tree edges are chosen in edge order and
// the dropped edge of a zero-sum tree is the smallest-index candidate.
std::vector<int> extend_to_feasible(const LabelledGraph& g, const std::vector<int>& keep,
                                    const std::vector<int>& avoid);

}  // namespace gdm
