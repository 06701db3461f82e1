#pragma once

#include "repkit/rep.hpp"

namespace repkit {

/*
 * Full list of irreducible characters with exact cyclotomic values.
 * Abelian groups go through the character group of the abelianization;
 * nonabelian groups use the modular eigenvector method on the class
 * algebra: central characters are computed over a prime field F_p with
 * p = 1 (mod exp G), degrees and eigenvalue multiplicities are lifted to
 * exact roots of unity, and the result is certified by the orthogonality
 * relations before being returned.  Deterministic output order.
 */
std::vector<ClassFunction> character_table(const GroupPtr& group);

// Forces the modular route even for abelian groups (cross-validation hook).
std::vector<ClassFunction> character_table_modular(const GroupPtr& group);

}  // namespace repkit
