#pragma once

#include <memory>
#include <string>
#include <vector>

namespace repkit {

// Finite group given by its full multiplication table.  Construction
// validates the axioms (associativity exhaustively up to order 64, by seeded
// random triples above) and precomputes inverses, conjugacy classes, the
// center and the derived subgroup.  Instances are immutable after
// construction and shared by pointer.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 2187;

  static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::vector<int>> table,
                                                       std::string name = "",
                                                       std::vector<std::string> labels = {});

  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  static std::shared_ptr<const FiniteGroup> symmetric(int n);
  static std::shared_ptr<const FiniteGroup> dihedral(int n);  // order 2n
  static std::shared_ptr<const FiniteGroup> quaternion8();
  // Heisenberg group of order n^3 for an odd prime n, generated by A, B, C
  // with A^n = B^n = C^n = 1, AC = CA, BC = CB, AB = CBA.
  static std::shared_ptr<const FiniteGroup> heisenberg(int n);
  static std::shared_ptr<const FiniteGroup> direct_product(
      const std::shared_ptr<const FiniteGroup>& a, const std::shared_ptr<const FiniteGroup>& b);
  // (A x A) : Z/2 with the involution swapping the factors.
  static std::shared_ptr<const FiniteGroup> swap_wreath(const std::shared_ptr<const FiniteGroup>& a);

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj_elt(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int power(int g, long long k) const;
  int order_of(int g) const { return elt_order_[g]; }
  long exponent() const;

  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int g) const { return class_of_[g]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_rep(int c) const { return classes_[c][0]; }

  const std::vector<int>& center_elements() const { return center_; }
  const std::vector<int>& derived_elements() const { return derived_; }
  bool is_abelian() const { return static_cast<int>(center_.size()) == n_; }

  std::vector<int> closure(std::vector<int> gens) const;
  bool is_subset_normal(const std::vector<int>& sorted_elements) const;

  const std::vector<int>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  const std::string& element_label(int g) const { return labels_[g]; }

  // Permutation images for symmetric-group presets; empty otherwise.
  const std::vector<std::vector<int>>& perms() const { return perms_; }

 private:
  FiniteGroup() = default;
  void finalize();  // validation + precomputation

  int n_ = 0;
  int e_ = 0;
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> center_;
  std::vector<int> derived_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup realized both as a subset of the parent and as a group in its
// own right, with index translation both ways.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted parent indices, closed under products
  GroupPtr group;             // abstract copy on indices 0..|elements|-1
  std::vector<int> from_parent_;

  static Subgroup from_elements(const GroupPtr& parent, std::vector<int> elements);
  static Subgroup from_generators(const GroupPtr& parent, const std::vector<int>& gens);
  static Subgroup whole(const GroupPtr& parent);

  int to_parent(int i) const { return elements[i]; }
  int to_sub(int p) const { return from_parent_[p]; }
  bool contains(int p) const { return from_parent_[p] >= 0; }
  int order() const { return static_cast<int>(elements.size()); }
  bool is_normal() const { return parent->is_subset_normal(elements); }
};

// Quotient of a parent by a normal subgroup, with the coset map.
struct Quotient {
  GroupPtr group;
  std::vector<int> coset_of;  // parent element -> coset index
  std::vector<int> reps;      // coset index -> smallest representative
};
Quotient quotient_by_normal(const GroupPtr& parent, const std::vector<int>& normal_elements);

}  // namespace repkit
