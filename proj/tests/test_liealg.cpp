#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repkit/errors.hpp"
#include "repkit/liealg.hpp"

using namespace repkit;
using liealg::AlgebraData;
using liealg::HighestWeight;
using weights::WeightMultiset;
using weights::WVec;

namespace {

WeightMultiset reflect_all(const AlgebraData& alg, const WeightMultiset& w, int i) {
  WeightMultiset out(alg.rank);
  for (const auto& [mu, m] : w.entries()) out.add(liealg::reflect(alg, mu, i), m);
  return out;
}

}  // namespace

TEST_CASE("root data sanity: Cartan pairings reconstruct the Cartan matrix") {
  for (const char* name : {"A1", "A2", "C2"}) {
    const AlgebraData& alg = AlgebraData::get(name);
    for (int i = 0; i < alg.rank; ++i) {
      CHECK(liealg::cartan_pairing(alg, alg.simple_roots[i], i) == 2);
      for (int j = 0; j < alg.rank; ++j)
        CHECK(liealg::cartan_pairing(alg, alg.fundamental_weights[i], j) == (i == j ? 1 : 0));
    }
  }
  CHECK(AlgebraData::get("A1").positive_roots.size() == 1);
  CHECK(AlgebraData::get("A2").positive_roots.size() == 3);
  CHECK(AlgebraData::get("C2").positive_roots.size() == 4);
  CHECK_THROWS_AS(AlgebraData::get("B7"), BadParameters);
}

TEST_CASE("weyl_dim closed forms") {
  const AlgebraData& a1 = AlgebraData::get("A1");
  for (long long a = 0; a <= 6; ++a) CHECK(liealg::weyl_dim(a1, {{a}}) == a + 1);
  const AlgebraData& a2 = AlgebraData::get("A2");
  CHECK(liealg::weyl_dim(a2, {{1, 0}}) == 3);
  CHECK(liealg::weyl_dim(a2, {{1, 1}}) == 8);
  CHECK(liealg::weyl_dim(a2, {{2, 1}}) == 15);
  const AlgebraData& c2 = AlgebraData::get("C2");
  CHECK(liealg::weyl_dim(c2, {{1, 0}}) == 4);
  CHECK(liealg::weyl_dim(c2, {{0, 1}}) == 5);
  CHECK(liealg::weyl_dim(c2, {{2, 0}}) == 10);
}

TEST_CASE("irr_weights: the classical sl2 string") {
  WeightMultiset w = liealg::irr_weights(AlgebraData::get("A1"), {{2}});
  CHECK(w.total_size() == 3);
  CHECK(w.multiplicity({2}) == 1);
  CHECK(w.multiplicity({0}) == 1);
  CHECK(w.multiplicity({-2}) == 1);
}

TEST_CASE("irr_weights: the A2 adjoint has a double zero weight") {
  WeightMultiset w = liealg::irr_weights(AlgebraData::get("A2"), {{1, 1}});
  CHECK(w.total_size() == 8);
  CHECK(w.multiplicity({0, 0}) == 2);
  long long distinct = 0;
  for (const auto& e : w.entries()) {
    (void)e;
    ++distinct;
  }
  CHECK(distinct == 7);
}

TEST_CASE("irr_weights: the C2 standard module") {
  WeightMultiset w = liealg::irr_weights(AlgebraData::get("C2"), {{1, 0}});
  CHECK(w.total_size() == 4);
  for (const auto& [mu, m] : w.entries()) CHECK(m == 1);
  CHECK(w.multiplicity({1, 0}) == 1);
  CHECK(w.multiplicity({-1, 0}) == 1);
  CHECK(w.multiplicity({0, 1}) == 1);
  CHECK(w.multiplicity({0, -1}) == 1);
}

TEST_CASE("irr_weights output is Weyl invariant with lex-max the highest weight") {
  for (const char* name : {"A1", "A2", "C2"}) {
    const AlgebraData& alg = AlgebraData::get(name);
    std::vector<HighestWeight> samples;
    if (alg.rank == 1)
      samples = {{{3}}, {{5}}};
    else
      samples = {{{1, 1}}, {{2, 1}}, {{0, 2}}};
    for (const HighestWeight& hw : samples) {
      WeightMultiset w = liealg::irr_weights(alg, hw);
      for (int i = 0; i < alg.rank; ++i)
        CHECK(weights::multiset_equal(reflect_all(alg, w, i), w));
      CHECK(w.lex_max() == liealg::to_lattice(alg, hw));
    }
  }
}

TEST_CASE("dimension consistency across all small modules") {
  for (const char* name : {"A1", "A2", "C2"}) {
    const AlgebraData& alg = AlgebraData::get(name);
    long long bound = alg.rank == 1 ? 30 : 8;
    std::vector<HighestWeight> hws;
    if (alg.rank == 1)
      for (long long a = 0; a <= bound; ++a) hws.push_back({{a}});
    else
      for (long long a = 0; a <= bound; ++a)
        for (long long b = 0; b <= bound; ++b) hws.push_back({{a, b}});
    for (const HighestWeight& hw : hws) {
      long long d = liealg::weyl_dim(alg, hw);
      if (d > 200) continue;
      CHECK(liealg::irr_weights(alg, hw).total_size() == d);
    }
  }
}

TEST_CASE("tensor_decompose: Clebsch-Gordan for sl2") {
  auto parts = liealg::tensor_decompose(AlgebraData::get("A1"), {{2}}, {{3}});
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].coeffs == std::vector<long long>{1});
  CHECK(parts[1].coeffs == std::vector<long long>{3});
  CHECK(parts[2].coeffs == std::vector<long long>{5});
}

TEST_CASE("tensor_decompose: std (x) std* on A2") {
  auto parts = liealg::tensor_decompose(AlgebraData::get("A2"), {{1, 0}}, {{0, 1}});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].coeffs == std::vector<long long>{0, 0});
  CHECK(parts[1].coeffs == std::vector<long long>{1, 1});
}

TEST_CASE("tensor_decompose: unit element") {
  auto parts = liealg::tensor_decompose(AlgebraData::get("A1"), {{4}}, {{0}});
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].coeffs == std::vector<long long>{4});
}

TEST_CASE("tensor_decompose re-expansion identity and dimension count") {
  struct Pair {
    const char* alg;
    HighestWeight h1, h2;
  };
  std::vector<Pair> pairs{{"A2", {{2, 1}}, {{1, 1}}},
                          {"C2", {{1, 1}}, {{0, 1}}},
                          {"A1", {{6}}, {{4}}},
                          {"C2", {{2, 0}}, {{1, 0}}}};
  for (const Pair& p : pairs) {
    const AlgebraData& alg = AlgebraData::get(p.alg);
    auto parts = liealg::tensor_decompose(alg, p.h1, p.h2);
    WeightMultiset expect =
        weights::pairwise_sum(liealg::irr_weights(alg, p.h1), liealg::irr_weights(alg, p.h2));
    WeightMultiset rebuilt(alg.rank);
    long long dim_sum = 0;
    for (const HighestWeight& h : parts) {
      dim_sum += liealg::weyl_dim(alg, h);
      WeightMultiset irr = liealg::irr_weights(alg, h);
      for (const auto& [mu, m] : irr.entries()) rebuilt.add(mu, m);
    }
    CHECK(weights::multiset_equal(rebuilt, expect));
    CHECK(dim_sum == liealg::weyl_dim(alg, p.h1) * liealg::weyl_dim(alg, p.h2));
  }
}

TEST_CASE("unique factorization sweeps find nothing") {
  auto a1 = liealg::check_unique_factorization(AlgebraData::get("A1"), 3, 2);
  CHECK(a1.counterexamples.empty());
  CHECK(a1.tuples_checked == 9);  // 3 singles + 6 unordered pairs
  auto a2 = liealg::check_unique_factorization(AlgebraData::get("A2"), 1, 2);
  CHECK(a2.counterexamples.empty());
  auto c2 = liealg::check_unique_factorization(AlgebraData::get("C2"), 1, 2);
  CHECK(c2.counterexamples.empty());
}

TEST_CASE("degenerate sweep bound gives a vacuous report") {
  auto rep = liealg::check_unique_factorization(AlgebraData::get("A1"), 0, 2);
  CHECK(rep.tuples_checked == 0);
  CHECK(rep.counterexamples.empty());
}

TEST_CASE("serial and parallel sweeps agree") {
  auto par = liealg::check_unique_factorization(AlgebraData::get("A2"), 2, 2);
  auto ser = liealg::check_unique_factorization_serial(AlgebraData::get("A2"), 2, 2);
  CHECK(par.tuples_checked == ser.tuples_checked);
  CHECK(par.pairs_checked == ser.pairs_checked);
  CHECK(par.counterexamples.size() == ser.counterexamples.size());
}

TEST_CASE("adjoint_fibre returns the module and its dual") {
  auto a2 = liealg::adjoint_fibre(AlgebraData::get("A2"), {{1, 0}}, 3);
  REQUIRE(a2.size() == 2);
  CHECK(a2[0].coeffs == std::vector<long long>{0, 1});
  CHECK(a2[1].coeffs == std::vector<long long>{1, 0});

  auto a1 = liealg::adjoint_fibre(AlgebraData::get("A1"), {{3}}, 8);
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].coeffs == std::vector<long long>{3});

  auto c2 = liealg::adjoint_fibre(AlgebraData::get("C2"), {{1, 0}}, 2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].coeffs == std::vector<long long>{1, 0});
}

TEST_CASE("dual weights") {
  const AlgebraData& a2 = AlgebraData::get("A2");
  CHECK(liealg::dual_weight(a2, {{1, 0}}).coeffs == std::vector<long long>{0, 1});
  CHECK(liealg::dual_weight(a2, {{1, 1}}).coeffs == std::vector<long long>{1, 1});
  CHECK(liealg::dual_weight(AlgebraData::get("C2"), {{2, 1}}).coeffs ==
        std::vector<long long>{2, 1});
  CHECK(liealg::dual_weight(AlgebraData::get("A1"), {{5}}).coeffs == std::vector<long long>{5});
}

TEST_CASE("the A2 x A2 adjoint counterexample") {
  auto rep = liealg::product_group_adjoint_counterexample();
  CHECK(rep.adjoints_equal);
  CHECK_FALSE(rep.v_isomorphic_w);
  CHECK_FALSE(rep.v_isomorphic_w_dual);

  // Sanity: a module is isomorphic to itself and double duals collapse.
  const AlgebraData& a2 = AlgebraData::get("A2");
  WeightMultiset std3 = liealg::irr_weights(a2, {{1, 0}});
  WeightMultiset v = weights::box_product(std3, std3);
  CHECK(weights::multiset_equal(v, v));
  CHECK(weights::multiset_equal(weights::dual(weights::dual(v)), v));
}

TEST_CASE("dimension cap raises DimensionOverflow") {
  CHECK_THROWS_AS(liealg::irr_weights(AlgebraData::get("A2"), {{60, 60}}), DimensionOverflow);
  CHECK_THROWS_AS(liealg::tensor_decompose(AlgebraData::get("A2"), {{9, 9}}, {{9, 9}}),
                  DimensionOverflow);
}

TEST_CASE("non-dominant input is rejected") {
  CHECK_THROWS_AS(liealg::weyl_dim(AlgebraData::get("A2"), {{-1, 0}}), BadParameters);
}
