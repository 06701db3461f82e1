#pragma once

#include "repkit/chartab.hpp"
#include "repkit/rep.hpp"

namespace repkit {

struct IsotypicComponent {
  ClassFunction character;  // irreducible character of the normal subgroup
  long long multiplicity;
};

// Restriction of a representation to a normal subgroup, decomposed into
// isotypic components, together with the permutation action of the coset
// group on the component index set.
struct CliffordDecomposition {
  Subgroup normal;
  std::vector<IsotypicComponent> components;
  std::vector<int> coset_reps;           // smallest representative per coset
  std::vector<std::vector<int>> action;  // action[c][i]: image of component i
};

CliffordDecomposition clifford_decompose(const MatrixRep& rho, const Subgroup& normal);

// Smallest representative of each left coset, in order of appearance.
std::vector<int> coset_reps_of(const Subgroup& sub);

// Fixed components S(phi) = { i : action[phi][i] == i }, one set per coset.
std::vector<std::vector<int>> fixed_sets(const CliffordDecomposition& dec);

// Induced representation from a subgroup, by the block construction over
// coset representatives.
MatrixRep induce(const MatrixRep& sub_rep, const Subgroup& sub);

// Independent route to the induced character, for cross-checking induce().
ClassFunction induced_character(const ClassFunction& chi, const Subgroup& sub);

// Twisted tensor product of rho with its images under the given
// automorphisms of the (sub)group rho lives on: the tensor over all of them.
MatrixRep pre_asai(const MatrixRep& rho, const std::vector<std::vector<int>>& automorphisms);

// Conjugation automorphisms x -> t x t^-1 of a normal subgroup, one per
// coset lift.
std::vector<std::vector<int>> conjugation_automorphisms(const Subgroup& normal,
                                                        const std::vector<int>& lifts);

// T(sigma) = rho1(sigma)^-1 rho2(sigma) for representations agreeing on a
// subgroup; verifies the cocycle identity and commutation with rho1 on the
// subgroup, exhaustively.
std::vector<CycMat> twist_cocycle(const MatrixRep& rho1, const MatrixRep& rho2,
                                  const Subgroup& equal_on);

// chi^g == chi for every coset of the normal subgroup carrying chi.
bool invariant_character_check(const ClassFunction& chi, const Subgroup& normal);

// Constructs a linear extension to the parent when chi is invariant and the
// quotient is cyclic; the result restricts back to chi.
std::optional<ClassFunction> extend_invariant_character(const ClassFunction& chi,
                                                        const Subgroup& normal);

}  // namespace repkit
