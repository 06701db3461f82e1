#pragma once

#include <string>
#include <vector>

#include "repkit/weights.hpp"

namespace repkit::liealg {

using weights::WVec;
using weights::WeightMultiset;

/*
 * Root data for the rank <= 2 simple algebras A1, A2, C2.  Weights are
 * stored in "lattice coordinates" (the usual epsilon realization projected
 * to ZZ^r), chosen so that every positive root is lex-positive.  That makes
 * the plain left-to-right lex order on coordinates a total order refining
 * dominance: the lex-max of any Weyl-invariant multiset is dominant, and the
 * lex-max of an irreducible module is its highest weight.  Highest weights
 * travel through the API in fundamental-weight coordinates.
 */
struct AlgebraData {
  std::string name;
  int rank;
  std::vector<WVec> simple_roots;
  std::vector<WVec> fundamental_weights;
  std::vector<WVec> positive_roots;
  WVec weyl_vector;
  std::vector<std::vector<long long>> form;  // integer-scaled invariant form

  static const AlgebraData& get(const std::string& name);  // A1, A2, C2
};

struct HighestWeight {
  std::vector<long long> coeffs;  // fundamental-weight coordinates, all >= 0

  bool operator==(const HighestWeight& o) const { return coeffs == o.coeffs; }
  bool operator<(const HighestWeight& o) const { return coeffs < o.coeffs; }
  bool is_trivial() const {
    for (long long c : coeffs)
      if (c != 0) return false;
    return true;
  }
};

constexpr long long kDefaultDimCap = 5000;
constexpr long long kDefaultProductCap = 20000;

long long bilinear(const AlgebraData& alg, const WVec& u, const WVec& v);
long long cartan_pairing(const AlgebraData& alg, const WVec& mu, int i);  // <mu, alpha_i^vee>
bool is_dominant(const AlgebraData& alg, const WVec& mu);
WVec reflect(const AlgebraData& alg, const WVec& mu, int i);
WVec dominant_conjugate(const AlgebraData& alg, const WVec& mu);
WVec to_lattice(const AlgebraData& alg, const HighestWeight& hw);
HighestWeight from_lattice(const AlgebraData& alg, const WVec& mu);
HighestWeight dual_weight(const AlgebraData& alg, const HighestWeight& hw);

long long weyl_dim(const AlgebraData& alg, const HighestWeight& hw);

// Weight multiset of the irreducible module, multiplicities by Freudenthal.
WeightMultiset irr_weights(const AlgebraData& alg, const HighestWeight& hw,
                           long long dim_cap = kDefaultDimCap);

// Multiset of highest weights of the irreducible constituents of a tensor
// product, by iterated extraction of the lex-max dominant weight.
std::vector<HighestWeight> tensor_decompose(const AlgebraData& alg, const HighestWeight& h1,
                                            const HighestWeight& h2,
                                            long long product_cap = kDefaultProductCap);

struct FactorTuple {
  std::vector<HighestWeight> factors;  // sorted
};

struct FactorizationReport {
  std::string algebra;
  long long bound = 0;
  long long max_factors = 0;
  long long tuples_checked = 0;
  long long pairs_checked = 0;
  std::vector<std::pair<FactorTuple, FactorTuple>> counterexamples;
};

// Exhaustively verifies that equal tensor-product weight multisets of
// nontrivial irreducibles force equal factor multisets, over all tuples with
// coordinates <= bound and at most max_factors factors.
FactorizationReport check_unique_factorization(const AlgebraData& alg, long long bound,
                                               long long max_factors,
                                               long long product_cap = kDefaultProductCap,
                                               bool parallel = true);
FactorizationReport check_unique_factorization_serial(const AlgebraData& alg, long long bound,
                                                      long long max_factors,
                                                      long long product_cap = kDefaultProductCap);

// All dominant weights with coordinates <= bound whose adjoint weight
// multiset matches that of hw.  Expected answer: { hw, dual(hw) }.
std::vector<HighestWeight> adjoint_fibre(const AlgebraData& alg, const HighestWeight& hw,
                                         long long bound,
                                         long long product_cap = kDefaultProductCap);

struct AdjointCounterexampleReport {
  bool adjoints_equal = false;
  bool v_isomorphic_w = false;
  bool v_isomorphic_w_dual = false;
};

// The product-group phenomenon on A2 x A2: V = std (x) std and
// W = std (x) std* have equal adjoint multisets without being isomorphic or
// dual to each other.
AdjointCounterexampleReport product_group_adjoint_counterexample();

}  // namespace repkit::liealg
