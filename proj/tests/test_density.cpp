#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repkit/chartab.hpp"
#include "repkit/density.hpp"
#include "repkit/errors.hpp"

using namespace repkit;

namespace {

Subgroup alternating(const GroupPtr& s) {
  std::vector<int> evens;
  for (int x = 0; x < s->order(); ++x) {
    const auto& p = s->perms()[x];
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) evens.push_back(x);
  }
  return Subgroup::from_elements(s, evens);
}

ComponentModel s3_model() {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  ClassFunction std_chi = character(symmetric_standard_rep(s3));
  ClassFunction ts = ClassFunction::trivial(s3) + symmetric_sign_character(s3);
  return ComponentModel::make(s3, alternating(s3), std_chi, ts);
}

}  // namespace

TEST_CASE("the S3 model: lambda 1/2 and agreement 2/3") {
  ComponentModel m = s3_model();
  CHECK(m.m == 2);
  CHECK(m.num_components() == 2);
  CHECK(component_lambda(m) == Rat(1, 2));
  CHECK(exact_agreement_density(m) == Rat(2, 3));

  DensityReport rep = orthogonality_audit(m);
  CHECK(rep.mean_sq_char_diff == 3);
  CHECK(rep.upper_bound == 8);
  CHECK(rep.lambda == Rat(1, 2));
  CHECK_FALSE(rep.both_irreducible);  // triv + sign is reducible
  CHECK(rep.distinct);
  CHECK(rep.all_passed());
}

TEST_CASE("identical characters give lambda one and zero difference") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  ClassFunction chi = character(symmetric_standard_rep(s3));
  ComponentModel m = ComponentModel::make(s3, alternating(s3), chi, chi);
  CHECK(component_lambda(m) == 1);
  CHECK(exact_agreement_density(m) == 1);
  DensityReport rep = orthogonality_audit(m);
  CHECK(rep.mean_sq_char_diff == 0);
  CHECK_FALSE(rep.lower_bound_applies);
  SampleResult s = sample_density(m, 500, 999);
  CHECK(s.estimate == 1);
}

TEST_CASE("a connected model with disagreement has lambda zero") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  ClassFunction std_chi = character(symmetric_standard_rep(s3));
  ClassFunction ts = ClassFunction::trivial(s3) + symmetric_sign_character(s3);
  ComponentModel m = ComponentModel::make(s3, Subgroup::whole(s3), std_chi, ts);
  CHECK(m.num_components() == 1);
  CHECK(component_lambda(m) == 0);
}

TEST_CASE("the heisenberg model against an elementwise census oracle") {
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  ClassFunction chi1 = character(heisenberg_rep(h3, 1));
  ClassFunction chi2 = character(heisenberg_rep(h3, 2));
  ComponentModel m = ComponentModel::make(
      h3, Subgroup::from_elements(h3, h3->center_elements()), chi1, chi2);

  // Oracle: direct elementwise census of the agreement set.
  long agree = 0;
  for (int g = 0; g < h3->order(); ++g)
    if (chi1.at_element(g) == chi2.at_element(g)) ++agree;
  CHECK(Rat(agree, 27) == exact_agreement_density(m));
  CHECK(exact_agreement_density(m) == Rat(25, 27));
  CHECK(component_lambda(m) == Rat(8, 9));
  CHECK(component_lambda(m) <= exact_agreement_density(m));
}

TEST_CASE("sampling determinism and serial equivalence") {
  ComponentModel m = s3_model();
  for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
    SampleResult a = sample_density(m, 40000, seed);
    SampleResult b = sample_density(m, 40000, seed);
    SampleResult c = sample_density_serial(m, 40000, seed);
    CHECK(a.hits == b.hits);
    CHECK(a.hits == c.hits);
  }
}

TEST_CASE("single-sample estimates are zero or one") {
  ComponentModel m = s3_model();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SampleResult s = sample_density(m, 1, seed);
    CHECK((s.estimate == 0 || s.estimate == 1));
  }
  CHECK_THROWS_AS(sample_density(m, 0, 0), BadParameters);
}

TEST_CASE("sampling converges into its own interval") {
  ComponentModel m = s3_model();
  SampleResult s = sample_density(m, 100000, 31337);
  double exact = 2.0 / 3.0;
  CHECK(s.interval_lo <= exact);
  CHECK(exact <= s.interval_hi);
  CHECK(s.interval_hi - s.interval_lo < 0.02);
}

TEST_CASE("density thresholds") {
  CHECK(dh_thresholds(2, 3, 3).first == Rat(7, 8));
  CHECK(dh_thresholds(3, 1, 5).second == 0);
  auto [dh1, dh2] = dh_thresholds(3, 2, 2);
  CHECK(dh1 == Rat(17, 18));
  CHECK(dh2 == Rat(1, 2));
  CHECK_THROWS_AS(dh_thresholds(0, 1, 1), BadParameters);
}

TEST_CASE("thresholds are monotone in every argument") {
  for (long long m = 1; m <= 6; ++m)
    for (long long c = 1; c <= 6; ++c) {
      CHECK(dh_thresholds(m, c, c).first <= dh_thresholds(m + 1, c, c).first);
      CHECK(dh_thresholds(m, c, c).second <= dh_thresholds(m, c + 1, c).second);
      CHECK(dh_thresholds(m, c, c).second <= dh_thresholds(m, c, c + 1).second);
    }
}

TEST_CASE("distinct irreducibles: the mean is exactly two") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  auto table = character_table(s3);
  Subgroup a3 = alternating(s3);
  for (size_t i = 0; i < table.size(); ++i)
    for (size_t j = 0; j < table.size(); ++j) {
      if (i == j) continue;
      ComponentModel m = ComponentModel::make(s3, a3, table[i], table[j]);
      DensityReport rep = orthogonality_audit(m);
      CHECK(rep.lower_bound_applies);
      CHECK(rep.mean_sq_char_diff == 2);
      CHECK(rep.mean_sq_char_diff <= rep.upper_bound);
    }
}

TEST_CASE("irrational class data is reported, not silently accepted") {
  GroupPtr z5 = FiniteGroup::cyclic(5);
  std::vector<Cyclotomic> f(5), h(5);
  f[0] = Cyclotomic(Rat(1));
  f[1] = Cyclotomic(Rat(1)) + Cyclotomic::root_of_unity(5, 1);
  h[0] = Cyclotomic(Rat(1));
  ComponentModel m = ComponentModel::make(z5, Subgroup::whole(z5), ClassFunction(z5, f),
                                          ClassFunction(z5, h));
  CHECK_THROWS_AS(orthogonality_audit(m), NonRationalResult);
}

TEST_CASE("model validation") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  ClassFunction chi = character(symmetric_standard_rep(s3));
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->order_of(x) == 2) transposition = x;
  Subgroup bad = Subgroup::from_generators(s3, {transposition});
  CHECK_THROWS_AS(ComponentModel::make(s3, bad, chi, chi), NotNormal);
}
