#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "repkit/chartab.hpp"
#include "repkit/errors.hpp"
#include "repkit/rep.hpp"

using namespace repkit;

namespace {

Cyclotomic zeta(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

bool table_contains(const std::vector<ClassFunction>& table, const ClassFunction& chi) {
  for (const ClassFunction& row : table)
    if (row == chi) return true;
  return false;
}

}  // namespace

TEST_CASE("characters of basic representations") {
  GroupPtr z3 = FiniteGroup::cyclic(3);
  ClassFunction reg = character(MatrixRep::regular(z3));
  CHECK(reg.at_element(0) == Cyclotomic(Rat(3)));
  CHECK(reg.at_element(1).is_zero());
  CHECK(reg.at_element(2).is_zero());

  GroupPtr s3 = FiniteGroup::symmetric(3);
  ClassFunction triv = character(MatrixRep::trivial(s3));
  for (int c = 0; c < s3->num_classes(); ++c) CHECK(triv.at_class(c) == Cyclotomic(Rat(1)));
}

TEST_CASE("the heisenberg module: central scalars and vanishing traces") {
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  for (int a : {1, 2}) {
    MatrixRep rho = heisenberg_rep(h3, a);
    // rho_a(C) is the central scalar zeta^a.
    const CycMat& c_img = rho.image(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(c_img.at(i, j) == (i == j ? zeta(3, a) : Cyclotomic()));
    // rho_a(A) e_i = zeta^{(i-1)a} e_i, rho_a(B) e_i = e_{i+1}.
    const CycMat& a_img = rho.image(1);
    const CycMat& b_img = rho.image(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(a_img.at(i, j) == (i == j ? zeta(3, a * i) : Cyclotomic()));
        CHECK(b_img.at(i, j) == (i == (j + 1) % 3 ? Cyclotomic(Rat(1)) : Cyclotomic()));
      }

    ClassFunction chi = character(rho);
    for (int g = 0; g < h3->order(); ++g) {
      bool central = std::find(h3->center_elements().begin(), h3->center_elements().end(), g) !=
                     h3->center_elements().end();
      if (central) {
        int z = g / 9;  // g = C^z
        CHECK(chi.at_element(g) == Cyclotomic(Rat(3)) * zeta(3, a * z));
      } else {
        CHECK(chi.at_element(g).is_zero());
      }
    }
  }
}

TEST_CASE("inner products") {
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  ClassFunction chi1 = character(heisenberg_rep(h3, 1));
  CHECK(inner_product(chi1, chi1) == 1);

  GroupPtr s3 = FiniteGroup::symmetric(3);
  ClassFunction triv = ClassFunction::trivial(s3);
  CHECK(inner_product(triv, triv) == 1);
  ClassFunction std_chi = character(symmetric_standard_rep(s3));
  CHECK(inner_product(std_chi, triv) == 0);
  CHECK(inner_product(std_chi, std_chi) == 1);

  CHECK_THROWS_AS(inner_product(triv, chi1), GroupMismatch);

  // A cooked non-character whose inner product is irrational.
  GroupPtr z3 = FiniteGroup::cyclic(3);
  std::vector<Cyclotomic> vals{Cyclotomic(), zeta(3, 1), Cyclotomic()};
  ClassFunction crooked(z3, vals);
  CHECK_THROWS_AS(inner_product(crooked, ClassFunction::trivial(z3)), NonRationalResult);
}

TEST_CASE("k-th power comparison") {
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  ClassFunction chi1 = character(heisenberg_rep(h3, 1));
  ClassFunction chi2 = character(heisenberg_rep(h3, 2));
  CHECK(kth_power_equal(chi1, chi2, 3));
  CHECK_FALSE(kth_power_equal(chi1, chi2, 1));
  CHECK(kth_power_equal(chi1, chi1, 5));

  // Wherever both values are nonzero the ratio is a cube root of unity.
  for (int c = 0; c < h3->num_classes(); ++c) {
    if (chi1.at_class(c).is_zero()) continue;
    auto witness = kth_root_ratio_witness(chi1.at_class(c), chi2.at_class(c), 3);
    REQUIRE(witness.has_value());
    CHECK(chi1.at_class(c) * zeta(3, *witness) == chi2.at_class(c));
  }

  GroupPtr s3 = FiniteGroup::symmetric(3);
  ClassFunction std_chi = character(symmetric_standard_rep(s3));
  ClassFunction ts = ClassFunction::trivial(s3) + symmetric_sign_character(s3);
  CHECK_FALSE(kth_power_equal(std_chi, ts, 1));
}

TEST_CASE("twist search") {
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  MatrixRep rho1 = heisenberg_rep(h3, 1), rho2 = heisenberg_rep(h3, 2);
  CHECK_FALSE(twist_search(rho1, rho2).has_value());

  auto self = twist_search(rho1, rho1);
  REQUIRE(self.has_value());
  CHECK(*self == ClassFunction::trivial(h3));

  // Planted witness with a nonvanishing character: unique recovery.
  GroupPtr z5 = FiniteGroup::cyclic(5);
  auto chars = linear_characters(z5);
  MatrixRep base = MatrixRep::from_linear(chars[1]);
  MatrixRep twisted = base.tensor_with_linear(chars[2]);
  auto found = twist_search(base, twisted);
  REQUIRE(found.has_value());
  CHECK(*found == chars[2]);

  // Planted witness on the Heisenberg module: existence is guaranteed even
  // though the vanishing locus makes the witness non-unique.
  auto eta0 = linear_characters(h3)[4];
  auto found2 = twist_search(rho1, rho1.tensor_with_linear(eta0));
  REQUIRE(found2.has_value());
  CHECK(character(rho1) * *found2 == character(rho1.tensor_with_linear(eta0)));

  GroupPtr s3 = FiniteGroup::symmetric(3);
  CHECK_THROWS_AS(twist_search(rho1, MatrixRep::trivial(h3)), DimMismatch);
  CHECK_THROWS_AS(twist_search(rho1, MatrixRep::trivial(s3)), GroupMismatch);
}

TEST_CASE("linear character groups") {
  struct Case {
    GroupPtr g;
    size_t count;
  };
  std::vector<Case> cases{{FiniteGroup::symmetric(3), 2},
                          {FiniteGroup::dihedral(4), 4},
                          {FiniteGroup::quaternion8(), 4},
                          {FiniteGroup::heisenberg(3), 9},
                          {FiniteGroup::cyclic(6), 6}};
  for (const Case& c : cases) {
    auto chars = linear_characters(c.g);
    CHECK(chars.size() == c.count);
    CHECK(chars[0] == ClassFunction::trivial(c.g));
    // Distinct and closed under products.
    for (size_t i = 0; i < chars.size(); ++i) {
      for (size_t j = i + 1; j < chars.size(); ++j) CHECK_FALSE(chars[i] == chars[j]);
      for (size_t j = 0; j < chars.size(); ++j) CHECK(table_contains(chars, chars[i] * chars[j]));
      CHECK(inner_product(chars[i], chars[i]) == 1);
    }
  }
}

TEST_CASE("commutant dimension cross-checks the character norm") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  MatrixRep std_rep = symmetric_standard_rep(s3);
  MatrixRep ts = MatrixRep::direct_sum(MatrixRep::trivial(s3),
                                       MatrixRep::from_linear(symmetric_sign_character(s3)));
  MatrixRep st = MatrixRep::direct_sum(std_rep, MatrixRep::trivial(s3));
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  MatrixRep rho1 = heisenberg_rep(h3, 1);
  GroupPtr q8 = FiniteGroup::quaternion8();
  MatrixRep q2 = quaternion_plane_rep(q8);
  GroupPtr z3 = FiniteGroup::cyclic(3);
  MatrixRep reg = MatrixRep::regular(z3);

  for (const MatrixRep* rep : {&std_rep, &ts, &st, &rho1, &q2, &reg}) {
    ClassFunction chi = character(*rep);
    Rat norm = inner_product(chi, chi);
    CHECK(Rat(static_cast<long>(commutant_dimension(*rep))) == norm);
  }
}

TEST_CASE("character tables") {
  struct Case {
    GroupPtr g;
    std::multiset<long long> dims;
  };
  std::vector<Case> cases{
      {FiniteGroup::symmetric(3), {1, 1, 2}},
      {FiniteGroup::dihedral(4), {1, 1, 1, 1, 2}},
      {FiniteGroup::quaternion8(), {1, 1, 1, 1, 2}},
      {FiniteGroup::heisenberg(3), {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3}},
      {FiniteGroup::symmetric(4), {1, 1, 2, 3, 3}},
  };
  for (const Case& c : cases) {
    auto table = character_table(c.g);
    CHECK(static_cast<int>(table.size()) == c.g->num_classes());
    std::multiset<long long> dims;
    long long sq = 0;
    for (const ClassFunction& chi : table) {
      dims.insert(chi.dim());
      sq += chi.dim() * chi.dim();
      CHECK(inner_product(chi, chi) == 1);
    }
    CHECK(dims == c.dims);
    CHECK(sq == c.g->order());
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = i + 1; j < table.size(); ++j) CHECK(inner_product(table[i], table[j]) == 0);
  }
}

TEST_CASE("character tables contain the characters of constructed modules") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  CHECK(table_contains(character_table(s3), character(symmetric_standard_rep(s3))));
  CHECK(table_contains(character_table(s3), symmetric_sign_character(s3)));
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  CHECK(table_contains(character_table(h3), character(heisenberg_rep(h3, 1))));
  CHECK(table_contains(character_table(h3), character(heisenberg_rep(h3, 2))));
  GroupPtr q8 = FiniteGroup::quaternion8();
  CHECK(table_contains(character_table(q8), character(quaternion_plane_rep(q8))));
  GroupPtr d5 = FiniteGroup::dihedral(5);
  CHECK(table_contains(character_table(d5), character(dihedral_plane_rep(d5))));
}

TEST_CASE("abelian and modular table routes agree") {
  GroupPtr z6 = FiniteGroup::cyclic(6);
  auto fast = character_table(z6);
  auto modular = character_table_modular(z6);
  REQUIRE(fast.size() == modular.size());
  for (const ClassFunction& chi : fast) CHECK(table_contains(modular, chi));
}

TEST_CASE("representation construction validation") {
  GroupPtr z4 = FiniteGroup::cyclic(4);
  CycMat bogus(1);
  bogus.at(0, 0) = Cyclotomic(Rat(2));  // 2 has infinite multiplicative order
  CHECK_THROWS_AS(MatrixRep::from_generator_images(z4, {1}, {bogus}), BadParameters);

  CycMat good(1);
  good.at(0, 0) = zeta(4, 1);
  MatrixRep ok = MatrixRep::from_generator_images(z4, {1}, {good});
  CHECK(ok.image(2).at(0, 0) == Cyclotomic(Rat(-1)));

  // Generators that do not generate.
  GroupPtr z6 = FiniteGroup::cyclic(6);
  CycMat partial(1);
  partial.at(0, 0) = zeta(3, 1);
  CHECK_THROWS_AS(MatrixRep::from_generator_images(z6, {2}, {partial}), BadParameters);

  CHECK_THROWS_AS(heisenberg_rep(3, 3), BadParameters);
  CHECK_THROWS_AS(MatrixRep::regular(FiniteGroup::symmetric(5)), BadParameters);
}

TEST_CASE("standard symmetric character equals fixed points minus one") {
  for (int n : {3, 4}) {
    GroupPtr s = FiniteGroup::symmetric(n);
    ClassFunction std_chi = character(symmetric_standard_rep(s));
    ClassFunction perm_chi = character(symmetric_permutation_rep(s));
    for (int c = 0; c < s->num_classes(); ++c)
      CHECK(std_chi.at_class(c) + Cyclotomic(Rat(1)) == perm_chi.at_class(c));
  }
}

TEST_CASE("equal k-th powers force equal character norms") {
  // Pairs whose k-th power characters agree carry the same inner product
  // with themselves; irreducibility transfers across the pair.
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  ClassFunction chi1 = character(heisenberg_rep(h3, 1));
  ClassFunction chi2 = character(heisenberg_rep(h3, 2));
  REQUIRE(kth_power_equal(chi1, chi2, 3));
  CHECK(inner_product(chi1, chi1) == inner_product(chi2, chi2));

  auto lins = linear_characters(h3);
  for (size_t i = 1; i < 4; ++i) {
    ClassFunction twisted = chi1 * lins[i];
    REQUIRE(kth_power_equal(chi1, twisted, 3));
    CHECK(inner_product(chi1, chi1) == inner_product(twisted, twisted));
  }
}

TEST_CASE("homomorphism identity holds on every pair of elements") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  MatrixRep rep = symmetric_standard_rep(s3);
  for (int x = 0; x < s3->order(); ++x)
    for (int y = 0; y < s3->order(); ++y)
      CHECK(rep.image(s3->mul(x, y)) == rep.image(x) * rep.image(y));

  GroupPtr q8 = FiniteGroup::quaternion8();
  MatrixRep q2 = quaternion_plane_rep(q8);
  for (int x = 0; x < q8->order(); ++x)
    for (int y = 0; y < q8->order(); ++y)
      CHECK(q2.image(q8->mul(x, y)) == q2.image(x) * q2.image(y));
}

TEST_CASE("restriction and conjugation of representations") {
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  MatrixRep rho = heisenberg_rep(h3, 1);
  Subgroup t = Subgroup::from_generators(h3, {1, 9});
  MatrixRep res = rho.restricted_to(t);
  CHECK(res.dim() == 3);
  CHECK(res.group() == t.group);
  CHECK(character(res).at_element(t.to_sub(9)) == Cyclotomic(Rat(3)) * zeta(3, 1));

  // Conjugate representations share their character.
  MatrixRep conj = rho.conjugated_by(3);
  CHECK(character(conj) == character(rho));
}
