#include "gdm/representation.hpp"

#include <stdexcept>
#include <unordered_set>

#include "gdm/errors.hpp"

namespace gdm {

Homomorphism Homomorphism::power_basis(const GaloisField& f, int k) {
  if (k < 1 || k > f.degree())
    throw std::invalid_argument("power basis needs 1 <= k <= field degree");
  Homomorphism phi;
  phi.p = f.characteristic();
  phi.k = k;
  GaloisField::Elem cur = f.one();
  for (int i = 0; i < k; ++i) {
    phi.images.push_back(cur);
    if (i + 1 < k) cur = f.mul(cur, f.x());
  }
  return phi;
}

bool independent_over_prime_field(const GaloisField& f,
                                  const std::vector<GaloisField::Elem>& elems) {
  // Row-reduce the coefficient vectors over GF(p).
  long long p = f.characteristic();
  int ell = f.degree();
  std::vector<std::vector<int>> rows;
  for (auto e : elems) rows.push_back(f.coeffs(e));
  int r = 0;
  for (int col = 0; col < ell && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    long long inv = 1;
    for (long long c = 1; c < p; ++c)
      if (rows[r][col] * c % p == 1) {
        inv = c;
        break;
      }
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      long long factor = rows[i][col] * inv % p;
      for (int j = 0; j < ell; ++j)
        rows[i][j] = static_cast<int>(((rows[i][j] - factor * rows[r][j]) % p + p) % p);
    }
    ++r;
  }
  return r == static_cast<int>(elems.size());
}

namespace {

// Residue vector of a Z_p^k (or prime Z_p) label.
std::vector<long long> residues(const LabelledGraph& g, int v, long long p, int k) {
  const auto& flat = g.flat_labels();
  int s = g.slot_count();
  (void)p;
  std::vector<long long> out(flat.begin() + static_cast<size_t>(v) * s,
                             flat.begin() + static_cast<size_t>(v) * s + k);
  return out;
}

void check_group_matches(const LabelledGraph& g, const GaloisField& f, long long* p_out,
                         int* k_out) {
  const auto& d = *g.group();
  long long p;
  int k;
  if (d.kind() == GroupKind::VectorMod) {
    p = d.prime();
    k = d.dimension();
  } else if (d.kind() == GroupKind::CyclicMod && is_prime(d.modulus())) {
    p = d.modulus();
    k = 1;
  } else {
    throw undefined_operation("representation needs labels in Z_p^k, got " + d.to_string());
  }
  if (p != f.characteristic())
    throw undefined_operation("label group modulus " + std::to_string(p) +
                              " does not match field characteristic " +
                              std::to_string(f.characteristic()));
  if (k > f.degree())
    throw undefined_operation("field degree " + std::to_string(f.degree()) +
                              " is smaller than the label dimension " + std::to_string(k));
  *p_out = p;
  *k_out = k;
}

}  // namespace

GaloisField::Elem apply(const GaloisField& f, const Homomorphism& phi, const GroupElement& label) {
  if (static_cast<int>(label.v.size()) < phi.k)
    throw std::invalid_argument("label has fewer components than the homomorphism expects");
  GaloisField::Elem acc = f.zero();
  for (int i = 0; i < phi.k; ++i)
    acc = f.add(acc, f.mul(f.from_int(label.v[i]), phi.images[i]));
  return acc;
}

FieldMatrix incidence_matrix(const LabelledGraph& g, const GaloisField& f) {
  return incidence_matrix(g, f, std::vector<bool>(g.edge_count(), false));
}

FieldMatrix incidence_matrix(const LabelledGraph& g, const GaloisField& f,
                             const std::vector<bool>& flip) {
  if (static_cast<int>(flip.size()) != g.edge_count())
    throw std::invalid_argument("orientation vector size mismatch");
  FieldMatrix m = FieldMatrix::zero(g.vertex_count(), g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) m.row_ids.push_back(g.vertex_id(v));
  for (int e = 0; e < g.edge_count(); ++e) m.col_ids.push_back(g.edge_id(e));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    int tail = std::min(g.edge_u(e), g.edge_v(e));
    int head = std::max(g.edge_u(e), g.edge_v(e));
    if (flip[e]) std::swap(tail, head);
    m.at(head, e) = f.one();
    m.at(tail, e) = f.neg(f.one());
  }
  return m;
}

FieldMatrix build_representation(const LabelledGraph& g, const GaloisField& f,
                                 const Homomorphism& phi) {
  long long p;
  int k;
  check_group_matches(g, f, &p, &k);
  if (phi.p != p || phi.k != k)
    throw std::invalid_argument("homomorphism does not match the label group");
  if (static_cast<int>(phi.images.size()) != k)
    throw std::invalid_argument("homomorphism needs exactly k images");
  if (!independent_over_prime_field(f, phi.images))
    throw std::invalid_argument("homomorphism images are linearly dependent over GF(p)");

  std::vector<GaloisField::Elem> diag(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.label_is_zero(v))
      throw undefined_operation("vertex '" + g.vertex_id(v) +
                                "' has label zero; attach the pendant gadget first");
    auto res = residues(g, v, p, k);
    GaloisField::Elem img = f.zero();
    for (int i = 0; i < k; ++i) img = f.add(img, f.mul(f.from_int(res[i]), phi.images[i]));
    diag[v] = f.inv(img);  // injective homomorphism, so img != 0
  }

  FieldMatrix inc = incidence_matrix(g, f);
  FieldMatrix scaled = inc;  // B * I with B diagonal: scale rows
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int e = 0; e < g.edge_count(); ++e)
      scaled.at(v, e) = f.mul(diag[v], inc.at(v, e));
  FieldMatrix rep = matmul(f, transpose(inc), scaled);
  rep.row_ids = inc.col_ids;
  rep.col_ids = inc.col_ids;
  return rep;
}

GadgetResult nonzero_gadget(const LabelledGraph& g) {
  GroupElement g0 = first_nonzero(g.group());
  GroupElement g0n = negate(g0);

  std::unordered_set<std::string> vertex_taken, edge_taken;
  for (int v = 0; v < g.vertex_count(); ++v) vertex_taken.insert(g.vertex_id(v));
  for (int e = 0; e < g.edge_count(); ++e) edge_taken.insert(g.edge_id(e));

  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  std::vector<std::string> pendant_ids;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.label_is_zero(v)) {
      std::string wid = g.vertex_id(v) + "_nz";
      while (!vertex_taken.insert(wid).second) wid += "_";
      std::string eid = g.vertex_id(v) + "_nze";
      while (!edge_taken.insert(eid).second) eid += "_";
      vs.push_back({g.vertex_id(v), g0});
      vs.push_back({wid, g0n});
      es.push_back({eid, g.vertex_id(v), wid});
      pendant_ids.push_back(eid);
    } else {
      vs.push_back({g.vertex_id(v), g.label(v)});
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    es.push_back({g.edge_id(e), g.vertex_id(g.edge_u(e)), g.vertex_id(g.edge_v(e))});

  LabelledGraph h(g.group(), std::move(vs), std::move(es));
  GadgetResult out{std::move(h), {}};
  for (const auto& id : pendant_ids) out.contracted.push_back(out.graph.edge_index(id));
  return out;
}

}  // namespace gdm
