#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdm/graph.hpp"

namespace gdm {

// Explicit set system over an ordered ground set of edge ids. Feasible sets
// are bitmasks over ground positions, stored sorted and unique. This is the
// brute-force engine the polynomial algorithms are verified against.
struct SetSystem {
  std::vector<std::string> ground;
  std::vector<std::uint64_t> feasible;

  int size() const { return static_cast<int>(ground.size()); }
  std::uint64_t full_mask() const {
    return ground.size() == 64 ? ~0ull : (1ull << ground.size()) - 1;
  }
  int position(const std::string& id) const;  // throws on unknown id
  std::uint64_t mask_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids_of(std::uint64_t mask) const;
  bool contains(std::uint64_t mask) const;
};

inline constexpr int kDefaultEnumerationCap = 20;

// All acyclic gamma-nonzero edge sets of g, by testing every subset.
// Throws undefined_operation when edge_count() exceeds the cap.
SetSystem enumerate_gamma_graphic(const LabelledGraph& g, int cap = kDefaultEnumerationCap);

struct ExchangeViolation {
  std::uint64_t x, y;
  int element;  // ground position e in x ^ y with no valid partner f
};

// Symmetric exchange axiom: for feasible X, Y and e in X^Y some f in X^Y
// has X^{e,f} feasible. Returns the first violation, or nullopt.
std::optional<ExchangeViolation> check_exchange_axiom(const SetSystem& m);

SetSystem twist(const SetSystem& m, std::uint64_t x);
// Deletion: keeps feasible sets disjoint from x and drops x from the ground
// set. Throws undefined_operation when every feasible set meets x.
SetSystem remove(const SetSystem& m, std::uint64_t x);
SetSystem minor(const SetSystem& m, std::uint64_t x, std::uint64_t y);

bool is_even(const SetSystem& m);

// (elements in no feasible set, elements in every feasible set)
std::pair<std::uint64_t, std::uint64_t> loops_and_coloops(const SetSystem& m);

// Same ground ids (any order) and the same feasible family under the id
// correspondence.
bool same_system(const SetSystem& a, const SetSystem& b);

// Replaces every label by the Z_2 indicator of being nonzero.
LabelledGraph z2_reduction(const LabelledGraph& g);

}  // namespace gdm
