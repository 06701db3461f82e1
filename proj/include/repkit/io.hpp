#pragma once

#include <json.hpp>

#include "repkit/clifford.hpp"
#include "repkit/density.hpp"
#include "repkit/lattice.hpp"
#include "repkit/liealg.hpp"
#include "repkit/weights.hpp"

namespace repkit::io {

using json = nlohmann::json;

// Integer matrices travel as arrays of arrays of decimal strings so that
// arbitrary-precision entries survive the trip.
json imat_to_json(const IntMat& m);
IntMat imat_from_json(const json& j);
json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json rat_to_json(const Rat& r);  // decimal string "p/q"

// Weight multisets: text is one weight per line, "mult c1 c2 ... cr".
std::string weights_to_text(const weights::WeightMultiset& w);
weights::WeightMultiset weights_from_text(const std::string& text);
json weights_to_json(const weights::WeightMultiset& w);
weights::WeightMultiset weights_from_json(const json& j);

// Cyclotomic literals: "q0 + q1*z^1 + q2*z^2" with a declared conductor.
Cyclotomic parse_cyclotomic(const std::string& literal, long conductor);
json cyclotomic_to_json(const Cyclotomic& z);
json classfunction_to_json(const ClassFunction& f);
json cycmat_to_json(const CycMat& m);

// Group specs: a preset name ("heisenberg:3", "sym:4", "cyclic:6",
// "dihedral:5", "quaternion:8") or inline JSON {"table": [[...]]}.
GroupPtr parse_group_spec(const std::string& spec);

// Subgroup selectors: "full", "trivial", "center", "derived", "alt"
// (symmetric presets), or a comma list of element indices whose closure is
// taken.
Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec);

// Character and representation specs: '+'-joined terms among
// triv, sign, std, perm, reg, plane, rho:a, lin:j, irr:i.
// irr:i is character-only; everything else also resolves to matrices.
ClassFunction parse_character_spec(const GroupPtr& g, const std::string& spec);
MatrixRep parse_rep_spec(const GroupPtr& g, const std::string& spec);

// Representation input file: {"conductor": m, "generators": [...],
// "images": [[[literal, ...], ...], ...]}.
MatrixRep rep_from_json(const GroupPtr& g, const json& j);

json highest_weight_to_json(const liealg::HighestWeight& hw);
liealg::HighestWeight highest_weight_from_string(const std::string& s);  // "a,b"

}  // namespace repkit::io
