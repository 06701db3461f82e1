#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repkit/errors.hpp"
#include "repkit/lattice.hpp"

using namespace repkit;

namespace {

IntMat mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return IntMat::from_rows(conv);
}

std::vector<Int> vec(const std::vector<long>& v) { return std::vector<Int>(v.begin(), v.end()); }

IntMat diag_matrix(const std::vector<Int>& d, int rows, int cols) {
  IntMat m(rows, cols);
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

// Brute-force membership oracle: does some integer combination of the rows
// of B with coefficients in [-box, box] equal v?  Independent of the HNF
// machinery.
bool combo_member(const IntMat& b, const std::vector<Int>& v, long box) {
  const int r = b.rows();
  std::vector<long> c(r, -box);
  for (;;) {
    std::vector<Int> acc(b.cols(), 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < b.cols(); ++j) acc[j] += Int(c[i]) * b.at(i, j);
    if (acc == v) return true;
    int i = 0;
    for (; i < r; ++i) {
      if (++c[i] <= box) break;
      c[i] = -box;
    }
    if (i == r) return false;
  }
}

}  // namespace

TEST_CASE("snf of the 2x2 example matches the gcd/determinant oracle") {
  IntMat a = mat({{2, 4}, {6, 8}});
  SnfResult s = snf(a);
  // Oracle: d1 is the gcd of all entries, d1*d2 the absolute determinant.
  Int g = gcd(gcd(Int(2), Int(4)), gcd(Int(6), Int(8)));
  Int det = abs(det_bareiss(a));
  CHECK(s.diag[0] == g);
  CHECK(s.diag[0] * s.diag[1] == det);
  CHECK(s.diag == std::vector<Int>{2, 4});
  CHECK(s.left * a * s.right == diag_matrix(s.diag, 2, 2));
}

TEST_CASE("snf identity and zero cases") {
  SnfResult id = snf(IntMat::identity(3));
  CHECK(id.diag == std::vector<Int>{1, 1, 1});
  SnfResult z = snf(IntMat(2, 2));
  CHECK(z.diag == std::vector<Int>{0, 0});
}

TEST_CASE("snf reconstruction on random matrices up to 8x8") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + static_cast<int>(rng() % 8);
    int n = 1 + static_cast<int>(rng() % 8);
    IntMat a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = static_cast<long>(rng() % 101) - 50;
    SnfResult s = snf(a);
    CHECK(s.left * a * s.right == diag_matrix(s.diag, m, n));
    CHECK(abs(det_bareiss(s.left)) == 1);
    CHECK(abs(det_bareiss(s.right)) == 1);
    for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
      if (s.diag[i] == 0) CHECK(s.diag[i + 1] == 0);
      if (s.diag[i] != 0 && s.diag[i + 1] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
  }
}

TEST_CASE("hermite form is canonical for the row span") {
  IntMat a = mat({{2, 4, 6}, {4, 2, 8}});
  IntMat b = mat({{6, 6, 14}, {4, 2, 8}});  // unimodular row change of the same lattice
  CHECK(hnf_rows(a) == hnf_rows(b));
  IntMat proper = mat({{6, 6, 14}, {-2, 2, -2}});  // index-two sublattice
  CHECK(hnf_rows(a) != hnf_rows(proper));
}

TEST_CASE("saturate: finite-index examples") {
  Lattice l1 = Lattice::from_basis(2, {vec({2, 0}), vec({0, 3})});
  CHECK(saturate(l1) == Lattice::full(2));

  Lattice l2 = Lattice::from_basis(2, {vec({2, 4})});
  CHECK(saturate(l2) == Lattice::from_basis(2, {vec({1, 2})}));
  CHECK_FALSE(is_direct_summand(l2));
  CHECK(is_direct_summand(saturate(l2)));
}

TEST_CASE("saturate of span{(2,2,0),(0,4,4)} against the small-vector oracle") {
  IntMat basis = mat({{2, 2, 0}, {0, 4, 4}});
  Lattice l = Lattice::from_basis(3, {vec({2, 2, 0}), vec({0, 4, 4})});
  Lattice sat = saturate(l);
  CHECK(sat == Lattice::from_basis(3, {vec({1, 1, 0}), vec({0, 1, 1})}));

  // Oracle: collect every small vector v such that n*v is an explicit small
  // integer combination of the generators, and compare against membership in
  // the computed saturation.
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y)
      for (long z = -3; z <= 3; ++z) {
        bool multiple_in_l = false;
        for (long n = 1; n <= 8 && !multiple_in_l; ++n)
          multiple_in_l = combo_member(basis, vec({n * x, n * y, n * z}), 12);
        CHECK(multiple_in_l == sat.contains(vec({x, y, z})));
      }
}

TEST_CASE("is_direct_summand on basic cases") {
  CHECK(is_direct_summand(Lattice::from_basis(2, {vec({1, 2})})));
  CHECK_FALSE(is_direct_summand(Lattice::from_basis(2, {vec({2, 4})})));
  CHECK(is_direct_summand(Lattice::full(4)));
}

TEST_CASE("saturation properties on random sublattices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    int r = 1 + static_cast<int>(rng() % n);
    std::vector<std::vector<Int>> rows(r, std::vector<Int>(n));
    for (auto& row : rows)
      for (auto& x : row) x = static_cast<long>(rng() % 41) - 20;
    Lattice l = Lattice::from_generators(n, rows);
    if (l.rank() == 0) continue;
    Lattice sat = saturate(l);
    CHECK(saturate(sat) == sat);
    CHECK(sat.rank() == l.rank());
    Int prod = 1;
    for (const Int& d : snf(l.basis()).diag)
      if (d != 0) prod *= d;
    CHECK(index_in(l, sat) == prod);
  }
}

TEST_CASE("pushout over the diagonal is the identity square") {
  LatticeMap id = LatticeMap::identity(1);
  PushoutResult r = pushout_torsion_free(id, id);
  CHECK(r.m1.rank() == 1);
  CHECK(abs(r.from_m.matrix.at(0, 0)) == 1);
  CHECK(r.from_m.matrix == r.from_c.matrix);
}

TEST_CASE("pushout of multiplication by 2 and 3") {
  LatticeMap p(1, 1, mat({{2}}));
  LatticeMap q(1, 1, mat({{3}}));
  PushoutResult r = pushout_torsion_free(p, q);
  // Oracle: the relation matrix [[2],[-3]] has Smith form (1), so the
  // quotient of ZZ^2 is free of rank 1 and the legs land as multiplication
  // by 3 and 2 up to a common sign.
  CHECK(r.m1.rank() == 1);
  CHECK(abs(r.from_m.matrix.at(0, 0)) == 3);
  CHECK(abs(r.from_c.matrix.at(0, 0)) == 2);
  CHECK(compose(r.from_m, p).matrix == compose(r.from_c, q).matrix);
}

TEST_CASE("pushout with a zero leg keeps the full rank") {
  LatticeMap p(1, 2, mat({{1}, {0}}));
  LatticeMap q(1, 1, mat({{0}}));
  PushoutResult r = pushout_torsion_free(p, q);
  CHECK(r.m1.rank() == 2);
  CHECK(compose(r.from_m, p).matrix == compose(r.from_c, q).matrix);
}

TEST_CASE("pushout commutation on random squares") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    int x = 1 + static_cast<int>(rng() % 4);
    IntMat pm(m, x), qm(c, x);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < x; ++j) pm.at(i, j) = static_cast<long>(rng() % 19) - 9;
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < x; ++j) qm.at(i, j) = static_cast<long>(rng() % 19) - 9;
    LatticeMap p(x, m, pm), q(x, c, qm);
    PushoutResult r = pushout_torsion_free(p, q);
    CHECK(compose(r.from_m, p).matrix == compose(r.from_c, q).matrix);
    CHECK(r.m1.rank() == m + c - snf_full(IntMat::vstack(pm, -qm)).rank);
  }
}

TEST_CASE("split_free_quotient on a coordinate inclusion") {
  LatticeMap incl(1, 2, mat({{1}, {0}}));
  SplitResult s = split_free_quotient(incl);
  CHECK(s.projection.matrix * s.section.matrix == IntMat::identity(1));
  CHECK((s.projection.matrix * incl.matrix).is_zero());
}

TEST_CASE("split_free_quotient rejects torsion cokernels") {
  LatticeMap doubling(1, 1, mat({{2}}));
  CHECK_THROWS_AS(split_free_quotient(doubling), NotFreeQuotient);
}

TEST_CASE("split_free_quotient with cokernel of rank one") {
  LatticeMap incl(2, 3, mat({{1, 0}, {0, 1}, {0, 0}}));
  SplitResult s = split_free_quotient(incl);
  CHECK(s.projection.matrix * s.section.matrix == IntMat::identity(1));
  // Decomposition: the columns of [incl | section] form a basis of ZZ^3.
  CHECK(abs(det_bareiss(IntMat::hstack(incl.matrix, s.section.matrix))) == 1);
}

TEST_CASE("split projection identity on random unimodular inclusions") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int b = 1 + static_cast<int>(rng() % 6);
    IntMat u = IntMat::identity(b);
    for (int ops = 0; ops < 3 * b; ++ops) {
      int i = static_cast<int>(rng() % b), j = static_cast<int>(rng() % b);
      if (i == j) continue;
      u.add_row(i, j, Int(static_cast<long>(rng() % 5) - 2));
    }
    int a = static_cast<int>(rng() % (b + 1));
    LatticeMap incl(a, b, u.col_slice(0, a));
    SplitResult s = split_free_quotient(incl);
    CHECK(s.projection.matrix * s.section.matrix == IntMat::identity(b - a));
    CHECK((s.projection.matrix * incl.matrix).is_zero());
  }
}

TEST_CASE("lift_torus_map returns the restriction on an identity extension") {
  LatticeMap restriction(2, 2, mat({{3, 1}, {0, 7}}));
  LatticeMap extension = LatticeMap::identity(2);
  CHECK(lift_torus_map(restriction, extension) == restriction);
}

TEST_CASE("lift across a rank-one split extension, with a search oracle") {
  // ZZ -> ZZ^2 as (1,2) has a free cokernel; extending [7] along it must
  // satisfy E * (1,2)^T = 7.
  LatticeMap extension(1, 2, mat({{1}, {2}}));
  LatticeMap restriction(1, 1, mat({{7}}));
  LatticeMap lifted = lift_torus_map(restriction, extension);
  CHECK(compose(lifted, extension).matrix == restriction.matrix);

  // Oracle: exhaustive search over small-entry candidates finds a solution,
  // confirming solvability independently.
  bool oracle_found = false;
  for (long e0 = -10; e0 <= 10 && !oracle_found; ++e0)
    for (long e1 = -10; e1 <= 10 && !oracle_found; ++e1)
      oracle_found = e0 * 1 + e1 * 2 == 7;
  CHECK(oracle_found);
}

TEST_CASE("lift_torus_map error paths") {
  LatticeMap torsion(1, 1, mat({{2}}));
  CHECK_THROWS_AS(lift_torus_map(LatticeMap(1, 1, mat({{1}})), torsion), NotFreeQuotient);

  // Extension with a kernel the restriction does not kill.
  LatticeMap killer(2, 1, mat({{1, 0}}));
  LatticeMap bad_restriction(2, 1, mat({{1, 1}}));
  CHECK_THROWS_AS(lift_torus_map(bad_restriction, killer), InconsistentDiagram);
}

TEST_CASE("lattice construction validation") {
  CHECK_THROWS_AS(Lattice::from_basis(2, {vec({1, 2}), vec({2, 4})}), BadParameters);
  Lattice ok = Lattice::from_generators(2, {vec({1, 2}), vec({2, 4})});
  CHECK(ok.rank() == 1);
}
