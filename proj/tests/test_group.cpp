#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repkit/errors.hpp"
#include "repkit/group.hpp"

using namespace repkit;

TEST_CASE("cyclic groups") {
  GroupPtr g = FiniteGroup::cyclic(6);
  CHECK(g->order() == 6);
  CHECK(g->is_abelian());
  CHECK(g->num_classes() == 6);
  CHECK(g->exponent() == 6);
  CHECK(g->order_of(1) == 6);
  CHECK(g->order_of(2) == 3);
  CHECK(g->power(1, 4) == 4);
  CHECK(g->power(1, -1) == 5);
}

TEST_CASE("symmetric groups") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  CHECK(s3->order() == 6);
  CHECK(s3->num_classes() == 3);
  CHECK(s3->derived_elements().size() == 3);
  CHECK(s3->center_elements().size() == 1);
  GroupPtr s4 = FiniteGroup::symmetric(4);
  CHECK(s4->order() == 24);
  CHECK(s4->num_classes() == 5);
  CHECK(s4->derived_elements().size() == 12);
  CHECK_THROWS_AS(FiniteGroup::symmetric(7), BadParameters);
}

TEST_CASE("dihedral groups") {
  GroupPtr d4 = FiniteGroup::dihedral(4);
  CHECK(d4->order() == 8);
  CHECK(d4->num_classes() == 5);
  CHECK(d4->center_elements().size() == 2);
  CHECK(d4->derived_elements().size() == 2);
  GroupPtr d5 = FiniteGroup::dihedral(5);
  CHECK(d5->num_classes() == 4);
}

TEST_CASE("quaternion group") {
  GroupPtr q8 = FiniteGroup::quaternion8();
  CHECK(q8->order() == 8);
  CHECK(q8->num_classes() == 5);
  CHECK(q8->center_elements().size() == 2);
  CHECK(q8->derived_elements().size() == 2);
  // i^2 = j^2 = -1 and ij = -ji.
  int i = q8->generators()[0], j = q8->generators()[1];
  CHECK(q8->mul(i, i) == q8->mul(j, j));
  CHECK(q8->mul(i, j) == q8->inv(q8->mul(j, i)));
  CHECK(q8->order_of(i) == 4);
}

TEST_CASE("heisenberg groups satisfy the defining relations") {
  for (int n : {3, 5}) {
    GroupPtr h = FiniteGroup::heisenberg(n);
    CHECK(h->order() == n * n * n);
    int A = h->generators()[0], B = h->generators()[1], C = h->generators()[2];
    CHECK(h->power(A, n) == h->identity());
    CHECK(h->power(B, n) == h->identity());
    CHECK(h->power(C, n) == h->identity());
    CHECK(h->mul(A, C) == h->mul(C, A));
    CHECK(h->mul(B, C) == h->mul(C, B));
    CHECK(h->mul(A, B) == h->mul(h->mul(C, B), A));
    CHECK(h->num_classes() == n * n + n - 1);
    CHECK(static_cast<int>(h->center_elements().size()) == n);
    CHECK(h->center_elements() == h->derived_elements());
    CHECK(h->exponent() == n);
  }
  CHECK_THROWS_AS(FiniteGroup::heisenberg(4), BadParameters);
  CHECK_THROWS_AS(FiniteGroup::heisenberg(9), BadParameters);
  CHECK_THROWS_AS(FiniteGroup::heisenberg(13), BadParameters);  // 13^3 over the cap
}

TEST_CASE("table validation rejects corrupt input") {
  // Not associative (a Latin square that is not a group).
  std::vector<std::vector<int>> bad{{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), BadParameters);
  // Not a Latin square.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {0, 0}}), BadParameters);
  // A quasigroup without a two-sided identity.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), BadParameters);
  // Valid table round trip: Z/2.
  GroupPtr z2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(z2->order() == 2);
}

TEST_CASE("closure and normality") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  // The derived subgroup of S3 is A3 and is normal.
  CHECK(s3->is_subset_normal(s3->derived_elements()));
  // A single transposition generates a non-normal subgroup of order 2.
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->order_of(x) == 2) {
      transposition = x;
      break;
    }
  std::vector<int> sub = s3->closure({transposition});
  CHECK(sub.size() == 2);
  CHECK_FALSE(s3->is_subset_normal(sub));
}

TEST_CASE("subgroups as groups in their own right") {
  GroupPtr h3 = FiniteGroup::heisenberg(3);
  Subgroup t = Subgroup::from_generators(h3, {1, 9});
  CHECK(t.order() == 9);
  CHECK(t.group->is_abelian());
  CHECK(t.is_normal());
  CHECK(t.to_sub(t.to_parent(5)) == 5);

  CHECK_THROWS_AS(Subgroup::from_elements(h3, {0, 1}), BadParameters);  // not closed

  GroupPtr s3 = FiniteGroup::symmetric(3);
  Subgroup whole = Subgroup::whole(s3);
  CHECK(whole.order() == 6);
}

TEST_CASE("quotients by normal subgroups") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  Quotient q = quotient_by_normal(s3, s3->derived_elements());
  CHECK(q.group->order() == 2);
  CHECK(q.coset_of[s3->identity()] == q.group->identity());

  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->order_of(x) == 2) transposition = x;
  CHECK_THROWS_AS(quotient_by_normal(s3, s3->closure({transposition})), NotNormal);

  GroupPtr h3 = FiniteGroup::heisenberg(3);
  Quotient qz = quotient_by_normal(h3, h3->center_elements());
  CHECK(qz.group->order() == 9);
  CHECK(qz.group->is_abelian());
}

TEST_CASE("products and the swap wreath") {
  GroupPtr z2 = FiniteGroup::cyclic(2);
  GroupPtr z3 = FiniteGroup::cyclic(3);
  GroupPtr p = FiniteGroup::direct_product(z2, z3);
  CHECK(p->order() == 6);
  CHECK(p->is_abelian());
  CHECK(p->exponent() == 6);

  GroupPtr s3 = FiniteGroup::symmetric(3);
  GroupPtr w = FiniteGroup::swap_wreath(s3);
  CHECK(w->order() == 72);
  std::vector<int> base;
  for (int x = 0; x < 36; ++x) base.push_back(2 * x);
  CHECK(w->is_subset_normal(base));
  CHECK_FALSE(w->is_abelian());
}

TEST_CASE("group order cap") {
  CHECK_THROWS_AS(FiniteGroup::cyclic(5000), BadParameters);
}
