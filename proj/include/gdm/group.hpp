#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gdm {

enum class GroupKind { Integers, CyclicMod, VectorMod, Product };

class GroupDescriptor;
using GroupDescriptorPtr = std::shared_ptr<const GroupDescriptor>;

bool is_prime(long long p);

// A runtime-chosen abelian group: Z, Z_k, Z_p^k, or a finite direct product
// of such groups. Elements are stored flattened, one integer slot per cyclic
// or integer factor; slot modulus 0 stands for Z.
class GroupDescriptor {
 public:
  static GroupDescriptorPtr integers();
  static GroupDescriptorPtr cyclic(long long k);             // Z_k, k >= 2
  static GroupDescriptorPtr vector_mod(long long p, int k);  // Z_p^k, p prime
  static GroupDescriptorPtr product(std::vector<GroupDescriptorPtr> factors);

  GroupKind kind() const { return kind_; }
  long long modulus() const { return k_; }  // CyclicMod only
  long long prime() const { return p_; }    // VectorMod only
  int dimension() const { return dim_; }    // VectorMod only
  const std::vector<GroupDescriptorPtr>& factors() const { return factors_; }

  // Flattened slot moduli, in factor order; 0 stands for Z.
  const std::vector<long long>& slots() const { return slots_; }

  std::string to_string() const;

 private:
  GroupDescriptor() = default;

  GroupKind kind_ = GroupKind::Integers;
  long long k_ = 0;
  long long p_ = 0;
  int dim_ = 0;
  std::vector<GroupDescriptorPtr> factors_;
  std::vector<long long> slots_;
};

bool same_group(const GroupDescriptor& a, const GroupDescriptor& b);
bool same_group(const GroupDescriptorPtr& a, const GroupDescriptorPtr& b);

// A value of the group named by `desc`: one canonical value per slot
// (least non-negative residue for modular slots, checked 64-bit for Z).
struct GroupElement {
  GroupDescriptorPtr desc;
  std::vector<long long> v;

  bool operator==(const GroupElement& o) const;
};

GroupElement zero(const GroupDescriptorPtr& desc);
// Reduces raw slot values into canonical range; size must match the slots.
GroupElement make_element(const GroupDescriptorPtr& desc, std::vector<long long> raw);
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupElement& a);
bool is_zero(const GroupElement& a);
GroupElement sum(const GroupDescriptorPtr& desc, const std::vector<GroupElement>& elements);
// A fixed nonzero element (1 in the first slot); every supported group has one.
GroupElement first_nonzero(const GroupDescriptorPtr& desc);

// Slot-level arithmetic for hot paths that avoid GroupElement allocation.
long long slot_add(long long modulus, long long a, long long b);
long long slot_negate(long long modulus, long long a);

}  // namespace gdm
