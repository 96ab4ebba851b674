#include "gdm/group.hpp"

#include <climits>
#include <stdexcept>

#include "gdm/errors.hpp"

namespace gdm {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroupDescriptorPtr GroupDescriptor::integers() {
  auto d = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
  d->kind_ = GroupKind::Integers;
  d->slots_ = {0};
  return d;
}

GroupDescriptorPtr GroupDescriptor::cyclic(long long k) {
  if (k < 2) throw std::invalid_argument("cyclic group order must be at least 2");
  auto d = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
  d->kind_ = GroupKind::CyclicMod;
  d->k_ = k;
  d->slots_ = {k};
  return d;
}

GroupDescriptorPtr GroupDescriptor::vector_mod(long long p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("vector group modulus must be prime");
  if (k < 1) throw std::invalid_argument("vector group dimension must be positive");
  auto d = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
  d->kind_ = GroupKind::VectorMod;
  d->p_ = p;
  d->dim_ = k;
  d->slots_.assign(static_cast<size_t>(k), p);
  return d;
}

GroupDescriptorPtr GroupDescriptor::product(std::vector<GroupDescriptorPtr> factors) {
  if (factors.empty()) throw std::invalid_argument("product group needs at least one factor");
  auto d = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
  d->kind_ = GroupKind::Product;
  for (const auto& f : factors) {
    if (!f) throw std::invalid_argument("null factor in product group");
    d->slots_.insert(d->slots_.end(), f->slots().begin(), f->slots().end());
  }
  d->factors_ = std::move(factors);
  return d;
}

std::string GroupDescriptor::to_string() const {
  switch (kind_) {
    case GroupKind::Integers:
      return "Z";
    case GroupKind::CyclicMod:
      return "Z_" + std::to_string(k_);
    case GroupKind::VectorMod:
      return "Z_" + std::to_string(p_) + "^" + std::to_string(dim_);
    case GroupKind::Product: {
      std::string s;
      for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += factors_[i]->to_string();
      }
      return s;
    }
  }
  return "?";
}

bool same_group(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GroupKind::Integers:
      return true;
    case GroupKind::CyclicMod:
      return a.modulus() == b.modulus();
    case GroupKind::VectorMod:
      return a.prime() == b.prime() && a.dimension() == b.dimension();
    case GroupKind::Product: {
      if (a.factors().size() != b.factors().size()) return false;
      for (size_t i = 0; i < a.factors().size(); ++i)
        if (!same_group(*a.factors()[i], *b.factors()[i])) return false;
      return true;
    }
  }
  return false;
}

bool same_group(const GroupDescriptorPtr& a, const GroupDescriptorPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_group(*a, *b);
}

bool GroupElement::operator==(const GroupElement& o) const {
  return same_group(desc, o.desc) && v == o.v;
}

long long slot_add(long long modulus, long long a, long long b) {
  if (modulus == 0) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("integer label arithmetic overflowed");
    return r;
  }
  return (a + b) % modulus;  // canonical inputs, so a + b < 2*modulus
}

long long slot_negate(long long modulus, long long a) {
  if (modulus == 0) {
    if (a == LLONG_MIN) throw std::overflow_error("integer label arithmetic overflowed");
    return -a;
  }
  return a == 0 ? 0 : modulus - a;
}

GroupElement zero(const GroupDescriptorPtr& desc) {
  if (!desc) throw std::invalid_argument("null group descriptor");
  return GroupElement{desc, std::vector<long long>(desc->slots().size(), 0)};
}

GroupElement make_element(const GroupDescriptorPtr& desc, std::vector<long long> raw) {
  if (!desc) throw std::invalid_argument("null group descriptor");
  const auto& slots = desc->slots();
  if (raw.size() != slots.size())
    throw std::invalid_argument("group element has " + std::to_string(raw.size()) +
                                " components, expected " + std::to_string(slots.size()));
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] != 0) raw[i] = ((raw[i] % slots[i]) + slots[i]) % slots[i];
  }
  return GroupElement{desc, std::move(raw)};
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  if (!same_group(a.desc, b.desc))
    throw std::invalid_argument("cannot add elements of different groups");
  const auto& slots = a.desc->slots();
  std::vector<long long> r(slots.size());
  for (size_t i = 0; i < slots.size(); ++i) r[i] = slot_add(slots[i], a.v[i], b.v[i]);
  return GroupElement{a.desc, std::move(r)};
}

GroupElement negate(const GroupElement& a) {
  const auto& slots = a.desc->slots();
  std::vector<long long> r(slots.size());
  for (size_t i = 0; i < slots.size(); ++i) r[i] = slot_negate(slots[i], a.v[i]);
  return GroupElement{a.desc, std::move(r)};
}

bool is_zero(const GroupElement& a) {
  for (long long x : a.v)
    if (x != 0) return false;
  return true;
}

GroupElement sum(const GroupDescriptorPtr& desc, const std::vector<GroupElement>& elements) {
  GroupElement acc = zero(desc);
  for (const auto& e : elements) acc = add(acc, e);
  return acc;
}

GroupElement first_nonzero(const GroupDescriptorPtr& desc) {
  GroupElement g = zero(desc);
  if (g.v.empty()) throw undefined_operation("group has no nonzero element");
  g.v[0] = 1;
  return g;
}

}  // namespace gdm
