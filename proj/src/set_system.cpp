#include "gdm/set_system.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gdm/disjoint_sets.hpp"
#include "gdm/errors.hpp"

namespace gdm {

int SetSystem::position(const std::string& id) const {
  for (size_t i = 0; i < ground.size(); ++i)
    if (ground[i] == id) return static_cast<int>(i);
  throw std::invalid_argument("unknown ground element '" + id + "'");
}

std::uint64_t SetSystem::mask_of(const std::vector<std::string>& ids) const {
  std::uint64_t m = 0;
  for (const auto& id : ids) m |= 1ull << position(id);
  return m;
}

std::vector<std::string> SetSystem::ids_of(std::uint64_t mask) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < ground.size(); ++i)
    if (mask >> i & 1) out.push_back(ground[i]);
  return out;
}

bool SetSystem::contains(std::uint64_t mask) const {
  return std::binary_search(feasible.begin(), feasible.end(), mask);
}

SetSystem enumerate_gamma_graphic(const LabelledGraph& g, int cap) {
  int m = g.edge_count();
  if (m > cap)
    throw undefined_operation("enumeration cap of " + std::to_string(cap) +
                              " edges exceeded: graph has " + std::to_string(m));
  int n = g.vertex_count();
  int s = g.slot_count();
  const auto& slots = g.group()->slots();
  const auto& flat = g.flat_labels();

  SetSystem out;
  out.ground.reserve(m);
  for (int e = 0; e < m; ++e) out.ground.push_back(g.edge_id(e));

  DisjointSets uf(n);
  std::vector<long long> sums(static_cast<size_t>(n) * s);
  std::vector<int> size(n);
  std::vector<unsigned char> any_nonzero(n);

  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    for (int v = 0; v < n; ++v) uf.parent[v] = v;
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e)
      if (mask >> e & 1) acyclic = uf.unite(g.edge_u(e), g.edge_v(e));
    if (!acyclic) continue;

    std::fill(sums.begin(), sums.end(), 0);
    std::fill(size.begin(), size.end(), 0);
    std::fill(any_nonzero.begin(), any_nonzero.end(), 0);
    for (int v = 0; v < n; ++v) {
      int r = uf.find(v);
      ++size[r];
      if (!g.label_is_zero(v)) any_nonzero[r] = 1;
      for (int i = 0; i < s; ++i)
        sums[static_cast<size_t>(r) * s + i] =
            slot_add(slots[i], sums[static_cast<size_t>(r) * s + i],
                     flat[static_cast<size_t>(v) * s + i]);
    }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (uf.parent[v] != v) continue;
      if (any_nonzero[v]) {
        bool sum_zero = true;
        for (int i = 0; i < s; ++i)
          if (sums[static_cast<size_t>(v) * s + i] != 0) {
            sum_zero = false;
            break;
          }
        if (sum_zero) ok = false;
      } else if (size[v] != g.full_component_size(g.full_component_of(v))) {
        ok = false;
      }
    }
    if (ok) out.feasible.push_back(mask);
  }
  return out;  // masks are generated in increasing order
}

std::optional<ExchangeViolation> check_exchange_axiom(const SetSystem& m) {
  int width = m.size();
  // Constant-time membership for the widths enumeration produces.
  std::vector<unsigned char> present;
  bool use_table = width <= 22;
  if (use_table) {
    present.assign(1ull << width, 0);
    for (std::uint64_t f : m.feasible) present[f] = 1;
  }
  auto member = [&](std::uint64_t f) { return use_table ? present[f] != 0 : m.contains(f); };

  for (std::uint64_t x : m.feasible) {
    for (std::uint64_t y : m.feasible) {
      std::uint64_t d = x ^ y;
      for (std::uint64_t de = d; de; de &= de - 1) {
        std::uint64_t be = de & -de;
        bool found = false;
        for (std::uint64_t df = d; df && !found; df &= df - 1) {
          std::uint64_t bf = df & -df;
          std::uint64_t cand = (bf == be) ? (x ^ be) : (x ^ be ^ bf);
          found = member(cand);
        }
        if (!found)
          return ExchangeViolation{x, y, std::countr_zero(be)};
      }
    }
  }
  return std::nullopt;
}

SetSystem twist(const SetSystem& m, std::uint64_t x) {
  if (x & ~m.full_mask()) throw std::invalid_argument("twist set outside the ground set");
  SetSystem out;
  out.ground = m.ground;
  out.feasible.reserve(m.feasible.size());
  for (std::uint64_t f : m.feasible) out.feasible.push_back(f ^ x);
  std::sort(out.feasible.begin(), out.feasible.end());
  return out;
}

SetSystem remove(const SetSystem& m, std::uint64_t x) {
  if (x & ~m.full_mask()) throw std::invalid_argument("deletion set outside the ground set");
  SetSystem out;
  std::vector<int> new_pos(m.size(), -1);
  for (int i = 0; i < m.size(); ++i) {
    if (x >> i & 1) continue;
    new_pos[i] = static_cast<int>(out.ground.size());
    out.ground.push_back(m.ground[i]);
  }
  for (std::uint64_t f : m.feasible) {
    if (f & x) continue;
    std::uint64_t g = 0;
    for (std::uint64_t r = f; r; r &= r - 1)
      g |= 1ull << new_pos[std::countr_zero(r)];
    out.feasible.push_back(g);
  }
  if (out.feasible.empty())
    throw undefined_operation("deletion undefined: every feasible set meets the deleted elements");
  std::sort(out.feasible.begin(), out.feasible.end());
  return out;
}

SetSystem minor(const SetSystem& m, std::uint64_t x, std::uint64_t y) {
  return remove(twist(m, x), y);
}

bool is_even(const SetSystem& m) {
  if (m.feasible.empty()) return true;
  int parity = std::popcount(m.feasible.front()) & 1;
  for (std::uint64_t f : m.feasible)
    if ((std::popcount(f) & 1) != parity) return false;
  return true;
}

std::pair<std::uint64_t, std::uint64_t> loops_and_coloops(const SetSystem& m) {
  std::uint64_t in_all = m.full_mask();
  std::uint64_t in_some = 0;
  for (std::uint64_t f : m.feasible) {
    in_all &= f;
    in_some |= f;
  }
  if (m.feasible.empty()) in_all = 0;
  return {m.full_mask() & ~in_some, in_all};
}

bool same_system(const SetSystem& a, const SetSystem& b) {
  if (a.ground.size() != b.ground.size() || a.feasible.size() != b.feasible.size()) return false;
  std::vector<int> to_a(b.ground.size());
  for (size_t i = 0; i < b.ground.size(); ++i) {
    bool found = false;
    for (size_t j = 0; j < a.ground.size(); ++j)
      if (a.ground[j] == b.ground[i]) {
        to_a[i] = static_cast<int>(j);
        found = true;
        break;
      }
    if (!found) return false;
  }
  std::vector<std::uint64_t> mapped;
  mapped.reserve(b.feasible.size());
  for (std::uint64_t f : b.feasible) {
    std::uint64_t g = 0;
    for (std::uint64_t r = f; r; r &= r - 1)
      g |= 1ull << to_a[std::countr_zero(r)];
    mapped.push_back(g);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == a.feasible;
}

LabelledGraph z2_reduction(const LabelledGraph& g) {
  auto z2 = GroupDescriptor::cyclic(2);
  std::vector<VertexSpec> vs;
  vs.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    vs.push_back({g.vertex_id(v), make_element(z2, {g.label_is_zero(v) ? 0ll : 1ll})});
  std::vector<EdgeSpec> es;
  es.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    es.push_back({g.edge_id(e), g.vertex_id(g.edge_u(e)), g.vertex_id(g.edge_v(e))});
  return LabelledGraph(z2, std::move(vs), std::move(es));
}

}  // namespace gdm
