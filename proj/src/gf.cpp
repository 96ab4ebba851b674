#include "gdm/gf.hpp"

#include <array>
#include <stdexcept>

#include "gdm/errors.hpp"
#include "gdm/group.hpp"

namespace gdm {

namespace {

constexpr int kMaxDegree = 8;

using Poly = std::vector<int>;  // coefficients mod p, lowest degree first

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// a mod b over GF(p); b monic-normalizable (leading coefficient invertible).
Poly poly_mod(Poly a, const Poly& b, long long p) {
  int db = poly_degree(b);
  // inverse of the leading coefficient of b
  long long lead = b[db], inv = 1;
  for (long long c = 1; c < p; ++c)
    if (lead * c % p == 1) {
      inv = c;
      break;
    }
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    long long f = a[da] * inv % p;
    for (int i = 0; i <= db; ++i) {
      long long t = (a[da - db + i] - f * b[i]) % p;
      a[da - db + i] = static_cast<int>((t + p) % p);
    }
  }
  return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

// Irreducibility by trial division: a reducible polynomial of degree d has
// a monic factor of degree between 1 and d/2.
bool is_irreducible(const Poly& cand, long long p, int ell) {
  for (int d = 1; 2 * d <= ell; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Poly div(d + 1, 0);
      std::uint64_t e = enc;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(e % p);
        e /= p;
      }
      div[d] = 1;
      if (poly_is_zero(poly_mod(cand, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(long long p, int ell) : p_(p), ell_(ell) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (ell < 1 || ell > kMaxDegree)
    throw std::invalid_argument("field degree must be between 1 and " +
                                std::to_string(kMaxDegree));
  order_ = 1;
  for (int i = 0; i < ell; ++i) {
    order_ *= static_cast<std::uint64_t>(p);
    if (order_ > (1u << 30)) throw std::invalid_argument("field order too large");
  }

  if (ell == 1) {
    modulus_.assign(1, 0);  // x == 0, i.e. the prime field itself
    return;
  }
  for (std::uint64_t enc = 0; enc < order_; ++enc) {
    Poly cand(ell + 1, 0);
    std::uint64_t e = enc;
    for (int i = 0; i < ell; ++i) {
      cand[i] = static_cast<int>(e % p);
      e /= p;
    }
    cand[ell] = 1;
    if (is_irreducible(cand, p, ell)) {
      modulus_.assign(cand.begin(), cand.end() - 1);
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");  // cannot happen
}

GaloisField::Elem GaloisField::x() const {
  if (ell_ < 2) throw std::invalid_argument("prime field has no generator polynomial x");
  return static_cast<Elem>(p_);
}

GaloisField::Elem GaloisField::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

GaloisField::Elem GaloisField::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > ell_)
    throw std::invalid_argument("too many coefficients for the field degree");
  std::uint64_t enc = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    long long r = c[i] % p_;
    if (r < 0) r += p_;
    enc = enc * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(r);
  }
  return static_cast<Elem>(enc);
}

std::vector<int> GaloisField::coeffs(Elem a) const {
  std::vector<int> c(ell_);
  for (int i = 0; i < ell_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a = static_cast<Elem>(a / p_);
  }
  return c;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  Elem out = 0;
  std::uint64_t mult = 1;
  for (int i = 0; i < ell_; ++i) {
    long long da = a % p_, db = b % p_;
    out += static_cast<Elem>((da + db) % p_ * mult);
    a = static_cast<Elem>(a / p_);
    b = static_cast<Elem>(b / p_);
    mult *= static_cast<std::uint64_t>(p_);
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  Elem out = 0;
  std::uint64_t mult = 1;
  for (int i = 0; i < ell_; ++i) {
    long long da = a % p_;
    out += static_cast<Elem>((p_ - da) % p_ * mult);
    a = static_cast<Elem>(a / p_);
    mult *= static_cast<std::uint64_t>(p_);
  }
  return out;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  std::array<long long, 2 * kMaxDegree> prod{};
  std::array<int, kMaxDegree> da{}, db{};
  Elem ta = a, tb = b;
  for (int i = 0; i < ell_; ++i) {
    da[i] = static_cast<int>(ta % p_);
    ta = static_cast<Elem>(ta / p_);
    db[i] = static_cast<int>(tb % p_);
    tb = static_cast<Elem>(tb / p_);
  }
  for (int i = 0; i < ell_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < ell_; ++j) prod[i + j] += static_cast<long long>(da[i]) * db[j];
  }
  // Reduce by the monic modulus: x^ell == -(sum of modulus coefficients).
  for (int i = 2 * ell_ - 2; i >= ell_; --i) {
    long long c = prod[i] % p_;
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < ell_; ++j) prod[i - ell_ + j] -= c * modulus_[j];
  }
  Elem out = 0;
  std::uint64_t mult = 1;
  for (int i = 0; i < ell_; ++i) {
    long long c = prod[i] % p_;
    if (c < 0) c += p_;
    out += static_cast<Elem>(c * mult);
    mult *= static_cast<std::uint64_t>(p_);
  }
  return out;
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  Elem out = one();
  while (e) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
    e >>= 1;
  }
  return out;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw undefined_operation("inverse of zero in GF(" + std::to_string(p_) + "^" +
                                        std::to_string(ell_) + ")");
  return pow(a, order_ - 2);
}

}  // namespace gdm
