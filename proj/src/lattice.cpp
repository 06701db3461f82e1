#include "repkit/lattice.hpp"

#include <cassert>

#include "repkit/errors.hpp"

namespace repkit {

Lattice Lattice::from_basis(int ambient_rank, const std::vector<std::vector<Int>>& basis) {
  Lattice l = from_generators(ambient_rank, basis);
  if (l.rank() != static_cast<int>(basis.size()))
    throw BadParameters("basis vectors are linearly dependent");
  return l;
}

Lattice Lattice::from_generators(int ambient_rank, const std::vector<std::vector<Int>>& gens) {
  if (ambient_rank < 0) throw BadParameters("negative ambient rank");
  for (const auto& v : gens)
    if (static_cast<int>(v.size()) != ambient_rank)
      throw BadParameters("generator length differs from ambient rank");
  if (gens.empty()) return Lattice(ambient_rank, IntMat(0, ambient_rank));
  return Lattice(ambient_rank, hnf_rows(IntMat::from_rows(gens)));
}

Lattice Lattice::full(int ambient_rank) {
  return Lattice(ambient_rank, IntMat::identity(ambient_rank));
}

Lattice Lattice::zero(int ambient_rank) {
  return Lattice(ambient_rank, IntMat(0, ambient_rank));
}

bool Lattice::contains(const std::vector<Int>& v) const {
  return solve_in_hnf(basis_, v).has_value();
}

LatticeMap::LatticeMap(int src, int tgt, IntMat m) : source_rank(src), target_rank(tgt), matrix(std::move(m)) {
  if (matrix.rows() != tgt || matrix.cols() != src)
    throw BadParameters("lattice map matrix shape mismatch");
}

LatticeMap LatticeMap::identity(int rank) {
  return LatticeMap(rank, rank, IntMat::identity(rank));
}

LatticeMap compose(const LatticeMap& f, const LatticeMap& g) {
  if (f.source_rank != g.target_rank) throw BadParameters("lattice map composition mismatch");
  return LatticeMap(g.source_rank, f.target_rank, f.matrix * g.matrix);
}

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return Lattice::zero(l.ambient_rank());
  SnfDecomposition s = snf_full(l.basis());
  // rows of right_inv at indices < rank span the QQ-span of L intersected
  // with ZZ^n: the basis rows equal diag * (those rows) up to the left
  // unimodular factor.
  std::vector<std::vector<Int>> gens;
  for (int i = 0; i < s.rank; ++i) gens.push_back(s.right_inv.row(i));
  Lattice sat = Lattice::from_generators(l.ambient_rank(), gens);
  assert(sat.rank() == l.rank());
  return sat;
}

bool is_direct_summand(const Lattice& l) { return saturate(l) == l; }

Int index_in(const Lattice& sub, const Lattice& super) {
  if (sub.ambient_rank() != super.ambient_rank())
    throw BadParameters("ambient rank mismatch in index computation");
  if (sub.rank() != super.rank())
    throw BadParameters("index is infinite: ranks differ");
  const int r = sub.rank();
  IntMat t(r, r);
  for (int i = 0; i < r; ++i) {
    auto coeffs = solve_in_hnf(super.basis(), sub.basis().row(i));
    if (!coeffs) throw BadParameters("sublattice is not contained in superlattice");
    for (int j = 0; j < r; ++j) t.at(i, j) = (*coeffs)[j];
  }
  return abs(det_bareiss(t));
}

PushoutResult pushout_torsion_free(const LatticeMap& p, const LatticeMap& q) {
  if (p.source_rank != q.source_rank)
    throw BadParameters("pushout legs must share their source rank");
  const int m = p.target_rank, c = q.target_rank, x = p.source_rank;
  IntMat rel = IntMat::vstack(p.matrix, -q.matrix);  // (m+c) x x
  if (rel.rows() != m + c) rel = IntMat(m + c, x);   // x == 0 with empty stacks
  SnfDecomposition s = snf_full(rel);
  const int k = m + c - s.rank;
  IntMat quot = s.left.row_slice(s.rank, m + c);  // k x (m+c)
  PushoutResult out{Lattice::full(k),
                    LatticeMap(m, k, quot.col_slice(0, m)),
                    LatticeMap(c, k, quot.col_slice(m, m + c))};
  assert(compose(out.from_m, p).matrix == compose(out.from_c, q).matrix);
  return out;
}

SplitResult split_free_quotient(const LatticeMap& incl) {
  const int b = incl.target_rank;
  SnfDecomposition s = snf_full(incl.matrix);
  for (int i = 0; i < s.rank; ++i)
    if (s.diag[i] > 1)
      throw NotFreeQuotient("cokernel has torsion: invariant factor " + s.diag[i].get_str());
  const int r = s.rank;
  SplitResult out{LatticeMap(b - r, b, s.left_inv.col_slice(r, b)),
                  LatticeMap(b, b - r, s.left.row_slice(r, b))};
  assert((out.projection.matrix * out.section.matrix) == IntMat::identity(b - r));
  assert((out.projection.matrix * incl.matrix).is_zero());
  return out;
}

LatticeMap lift_torus_map(const LatticeMap& restriction, const LatticeMap& target_extension) {
  if (restriction.source_rank != target_extension.source_rank)
    throw BadParameters("restriction and extension must share their source");
  const int a = target_extension.source_rank;
  const int b = target_extension.target_rank;
  const int c = restriction.target_rank;
  SnfDecomposition s = snf_full(target_extension.matrix);
  for (int i = 0; i < s.rank; ++i)
    if (s.diag[i] > 1)
      throw NotFreeQuotient("cokernel has torsion: invariant factor " + s.diag[i].get_str());
  IntMat g = restriction.matrix * s.right;  // c x a
  IntMat f(c, b);
  for (int j = 0; j < a; ++j) {
    if (j < s.rank) {
      for (int i = 0; i < c; ++i) f.at(i, j) = g.at(i, j);
    } else {
      for (int i = 0; i < c; ++i)
        if (g.at(i, j) != 0)
          throw InconsistentDiagram("restriction does not vanish on the kernel of the extension");
    }
  }
  LatticeMap lifted(b, c, f * s.left);
  assert(compose(lifted, target_extension).matrix == restriction.matrix);
  return lifted;
}

}  // namespace repkit
