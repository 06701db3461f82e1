#pragma once

#include "repkit/intmat.hpp"

namespace repkit {

/*
 * Sublattices of ZZ^n with exact integer arithmetic.  A Lattice stores its
 * basis in row-style Hermite normal form, so two lattices are equal exactly
 * when their stored bases coincide.  Saturation (torsion closure), direct
 * summand tests, pushouts with free quotients and splittings of free
 * quotients all reduce to Smith/Hermite normal form computations.
 */
class Lattice {
 public:
  // Requires the vectors to be linearly independent over QQ.
  static Lattice from_basis(int ambient_rank, const std::vector<std::vector<Int>>& basis);
  // Accepts any generating set; reduces to a basis.
  static Lattice from_generators(int ambient_rank, const std::vector<std::vector<Int>>& gens);
  static Lattice full(int ambient_rank);
  static Lattice zero(int ambient_rank);

  int ambient_rank() const { return ambient_; }
  int rank() const { return basis_.rows(); }
  const IntMat& basis() const { return basis_; }

  bool contains(const std::vector<Int>& v) const;
  bool operator==(const Lattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

 private:
  Lattice(int ambient, IntMat hnf_basis) : ambient_(ambient), basis_(std::move(hnf_basis)) {}
  int ambient_;
  IntMat basis_;
};

// Morphism of free abelian groups, as a (target_rank x source_rank) matrix
// acting on column vectors.  Composition is matrix multiplication.
struct LatticeMap {
  int source_rank = 0;
  int target_rank = 0;
  IntMat matrix;

  LatticeMap() = default;
  LatticeMap(int src, int tgt, IntMat m);
  static LatticeMap identity(int rank);

  std::vector<Int> apply(const std::vector<Int>& v) const { return matrix.apply(v); }
  bool operator==(const LatticeMap& o) const {
    return source_rank == o.source_rank && target_rank == o.target_rank && matrix == o.matrix;
  }
};

LatticeMap compose(const LatticeMap& f, const LatticeMap& g);  // f after g

// Torsion closure { a : n*a in L for some nonzero integer n }.
Lattice saturate(const Lattice& l);

bool is_direct_summand(const Lattice& l);

// Index [super : sub] for sub contained in super with equal rank.
Int index_in(const Lattice& sub, const Lattice& super);

// Pushout of p : X -> M and q : X -> C with torsion factors dropped; M1 is
// the maximal torsion-free quotient of (M + C) / {(p(x), -q(x))}.  The two
// returned maps make the square commute: from_m . p == from_c . q.
struct PushoutResult {
  Lattice m1;
  LatticeMap from_m;
  LatticeMap from_c;
};
PushoutResult pushout_torsion_free(const LatticeMap& p, const LatticeMap& q);

// Section of the quotient B -> B/image(incl) when that quotient is free.
// projection . section is the identity on the quotient.
struct SplitResult {
  LatticeMap section;     // B/A -> B
  LatticeMap projection;  // B -> B/A
};
SplitResult split_free_quotient(const LatticeMap& incl);

// Extends `restriction` along `target_extension`: returns E with
// E . target_extension == restriction, when the cokernel of the extension is
// free.  Fails with InconsistentDiagram if restriction does not kill the
// kernel of the extension.
LatticeMap lift_torus_map(const LatticeMap& restriction, const LatticeMap& target_extension);

}  // namespace repkit
