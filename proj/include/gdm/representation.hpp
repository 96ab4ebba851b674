#pragma once

#include <vector>

#include "gdm/field_matrix.hpp"
#include "gdm/graph.hpp"

namespace gdm {

// Injective homomorphism from Z_p^k into GF(p^ell): the label (c_1..c_k)
// maps to sum of c_i * images[i]. The images must be linearly independent
// over GF(p), which needs ell >= k.
struct Homomorphism {
  long long p = 0;
  int k = 0;
  std::vector<GaloisField::Elem> images;

  static Homomorphism power_basis(const GaloisField& f, int k);  // 1, x, x^2, ...
};

bool independent_over_prime_field(const GaloisField& f,
                                  const std::vector<GaloisField::Elem>& elems);

GaloisField::Elem apply(const GaloisField& f, const Homomorphism& phi, const GroupElement& label);

// Signed vertex-edge incidence matrix over the field: +1 at the head, -1 at
// the tail of each non-loop edge; loop columns are zero. The canonical
// orientation points from the smaller vertex index to the larger; `flip`
// (one bool per edge) reverses individual edges, which only matters for
// orientation-independence checks.
FieldMatrix incidence_matrix(const LabelledGraph& g, const GaloisField& f);
FieldMatrix incidence_matrix(const LabelledGraph& g, const GaloisField& f,
                             const std::vector<bool>& flip);

// The symmetric edge-by-edge matrix I^T B I with B diagonal, B_vv the field
// inverse of phi(label(v)). Its nonsingular principal submatrices are
// exactly the acyclic gamma-nonzero sets. Requires a Z_p^k-labelled graph
// (Z_p accepted as k = 1), matching characteristic, ell >= k, and nonzero
// labels everywhere (apply nonzero_gadget first otherwise).
FieldMatrix build_representation(const LabelledGraph& g, const GaloisField& f,
                                 const Homomorphism& phi);

struct GadgetResult {
  LabelledGraph graph;          // all labels nonzero
  std::vector<int> contracted;  // pendant edges; contracting them restores g
};

// Attaches a pendant vertex with labels (g0, -g0) to every zero-labelled
// vertex, for a fixed nonzero g0.
GadgetResult nonzero_gadget(const LabelledGraph& g);

}  // namespace gdm
