#pragma once

#include <optional>

#include "repkit/cyclotomic.hpp"
#include "repkit/group.hpp"

namespace repkit {

// Small dense square matrix over cyclotomic scalars.
class CycMat {
 public:
  CycMat() : n_(0) {}
  explicit CycMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static CycMat identity(int n);

  int dim() const { return n_; }
  Cyclotomic& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Cyclotomic& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  CycMat operator*(const CycMat& o) const;
  CycMat scaled(const Cyclotomic& c) const;
  Cyclotomic trace() const;
  bool operator==(const CycMat& o) const;
  bool operator!=(const CycMat& o) const { return !(*this == o); }
  bool commutes_with(const CycMat& o) const { return (*this * o) == (o * *this); }

  static CycMat kron(const CycMat& a, const CycMat& b);
  static CycMat direct_sum(const CycMat& a, const CycMat& b);

 private:
  int n_;
  std::vector<Cyclotomic> a_;
};

// Class function on a finite group, one exact cyclotomic value per
// conjugacy class.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);
  static ClassFunction trivial(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  const Cyclotomic& at_class(int c) const { return values_[c]; }
  const Cyclotomic& at_element(int g) const { return values_[group_->class_of(g)]; }
  const std::vector<Cyclotomic>& values() const { return values_; }

  // Dimension of a character: value at the identity, a nonnegative integer.
  long long dim() const;

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction conj() const;
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }

  ClassFunction restrict_to(const Subgroup& s) const;

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

// Matrix representation with exact cyclotomic entries, stored for every
// element.  Construction from generator images expands by breadth-first
// products and then certifies the homomorphism property on every
// (element, generator) pair, which proves it for all products.
class MatrixRep {
 public:
  static MatrixRep from_generator_images(GroupPtr group, const std::vector<int>& gens,
                                         const std::vector<CycMat>& images);
  static MatrixRep from_images(GroupPtr group, std::vector<CycMat> images, bool verify = true);
  static MatrixRep trivial(const GroupPtr& group);
  static MatrixRep regular(const GroupPtr& group);  // dim capped at 64
  static MatrixRep from_linear(const ClassFunction& chi);

  const GroupPtr& group() const { return group_; }
  int dim() const { return dim_; }
  const CycMat& image(int g) const { return images_[g]; }

  MatrixRep tensor_with_linear(const ClassFunction& chi) const;
  MatrixRep conjugated_by(int h) const;  // g -> image(h g h^-1)
  MatrixRep restricted_to(const Subgroup& s) const;
  static MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);
  static MatrixRep kron(const MatrixRep& a, const MatrixRep& b);

 private:
  MatrixRep(GroupPtr group, int dim, std::vector<CycMat> images)
      : group_(std::move(group)), dim_(dim), images_(std::move(images)) {}
  GroupPtr group_;
  int dim_;
  std::vector<CycMat> images_;
};

ClassFunction character(const MatrixRep& rep);

// (1/|G|) sum_g f(g) conj(h(g)); a nonnegative integer for characters.
Rat inner_product(const ClassFunction& f, const ClassFunction& h);

// chi1(g)^k == chi2(g)^k on every class.
bool kth_power_equal(const ClassFunction& chi1, const ClassFunction& chi2, long long k);

// When chi1, chi2 are nonzero at g and agree after k-th powers, their ratio
// is a k-th root of unity; returns the exponent j with chi2 = zeta_k^j chi1.
std::optional<long> kth_root_ratio_witness(const Cyclotomic& v1, const Cyclotomic& v2,
                                           long long k);

// All |G / [G,G]| linear characters, trivial character first, in a fixed
// deterministic order.
std::vector<ClassFunction> linear_characters(const GroupPtr& group);

// Exhaustive twist search over the linear characters of the common group.
std::optional<ClassFunction> twist_search(const MatrixRep& rho1, const MatrixRep& rho2);

// Dimension of { X : X rho(g) = rho(g) X for all g }, by exact elimination.
long long commutant_dimension(const MatrixRep& rep);

// The n-dimensional Heisenberg module rho_a: A acts diagonally by
// zeta^{(i-1)a}, B cycles the basis, C is the central scalar zeta^a.
MatrixRep heisenberg_rep(const GroupPtr& heis, int a);
MatrixRep heisenberg_rep(int n, int a);

// Preset representations used by the command-line front end and tests.
MatrixRep symmetric_standard_rep(const GroupPtr& sym);   // dim n-1
MatrixRep symmetric_permutation_rep(const GroupPtr& sym);
ClassFunction symmetric_sign_character(const GroupPtr& sym);
MatrixRep dihedral_plane_rep(const GroupPtr& dih);  // dim 2
MatrixRep quaternion_plane_rep(const GroupPtr& q8);  // dim 2

}  // namespace repkit
