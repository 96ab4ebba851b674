#pragma once

#include <cstdint>
#include <vector>

namespace gdm {

// GF(p^ell) with a deterministic modulus: the monic irreducible polynomial
// of degree ell over GF(p) with the smallest coefficient encoding
// (sum of c_i * p^i over the non-leading coefficients). Elements are packed
// as base-p digit strings, constant term in the lowest digit, so equality
// and hashing are plain integer operations.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  GaloisField(long long p, int ell);  // p prime, 1 <= ell <= 8

  long long characteristic() const { return p_; }
  int degree() const { return ell_; }
  std::uint64_t order() const { return order_; }
  // Non-leading modulus coefficients c_0..c_{ell-1}; the x^ell term is monic.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem x() const;  // the polynomial x; requires ell >= 2

  Elem from_int(long long v) const;
  Elem from_coeffs(const std::vector<int>& c) const;
  std::vector<int> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws undefined_operation on zero
  Elem pow(Elem a, std::uint64_t e) const;

 private:
  long long p_ = 0;
  int ell_ = 0;
  std::uint64_t order_ = 0;
  std::vector<int> modulus_;
};

}  // namespace gdm
