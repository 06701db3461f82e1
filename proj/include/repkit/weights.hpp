#pragma once

#include <map>
#include <vector>

namespace repkit::weights {

// Torus weight: an integer vector in ZZ^r.
using WVec = std::vector<long long>;

// Total order used everywhere for "highest weight" extraction: compare
// coordinates left to right.  Translation invariant, which is what the
// inductive recovery arguments need.
struct LexOrder {
  bool operator()(const WVec& a, const WVec& b) const { return a < b; }
};

// Finite multiset of weights with positive multiplicities.
class WeightMultiset {
 public:
  explicit WeightMultiset(int rank);
  static WeightMultiset from_list(int rank, const std::vector<WVec>& vecs);

  int rank() const { return rank_; }
  bool empty() const { return entries_.empty(); }
  long long total_size() const;
  long long multiplicity(const WVec& v) const;
  const std::map<WVec, long long, LexOrder>& entries() const { return entries_; }

  void add(const WVec& v, long long mult = 1);
  const WVec& lex_max() const;  // throws on empty multiset

  // Every weight repeated according to its multiplicity, ascending.
  std::vector<WVec> expanded() const;

  bool operator==(const WeightMultiset& o) const {
    return rank_ == o.rank_ && entries_ == o.entries_;
  }

 private:
  int rank_;
  std::map<WVec, long long, LexOrder> entries_;
};

WeightMultiset tensor_power(const WeightMultiset& w, long long k);
WeightMultiset sym_power(const WeightMultiset& w, long long k);
WeightMultiset ext_power(const WeightMultiset& w, long long k);
WeightMultiset adjoint(const WeightMultiset& w);
WeightMultiset dual(const WeightMultiset& w);

// Weights of a tensor product of two modules over the same torus.
WeightMultiset pairwise_sum(const WeightMultiset& a, const WeightMultiset& b);
// External product: weights of an outer tensor over a product torus.
WeightMultiset box_product(const WeightMultiset& a, const WeightMultiset& b);

// Multiset difference; requires b to be contained in a with multiplicity.
WeightMultiset subtract(const WeightMultiset& a, const WeightMultiset& b);

// Inverse of sym_power / tensor_power for multisets in the image.  The
// answer is validated by a full forward recomputation before returning.
WeightMultiset recover_from_sym(const WeightMultiset& s, long long k, long long n);
WeightMultiset recover_from_tensor(const WeightMultiset& t, long long k, long long n);

bool multiset_equal(const WeightMultiset& a, const WeightMultiset& b);

}  // namespace repkit::weights
