#pragma once

#include <cstdint>

#include "repkit/rep.hpp"

namespace repkit {

// Finite model of a two-representation comparison: a group standing in for
// the component structure, a normal subgroup playing the identity
// component, and two characters of a common bounding dimension m.
struct ComponentModel {
  GroupPtr group;
  Subgroup g0;
  ClassFunction chi1, chi2;
  long long m = 0;  // max of the two dimensions; both |chi_i| <= m

  static ComponentModel make(const GroupPtr& group, Subgroup g0, ClassFunction chi1,
                             ClassFunction chi2);
  long long num_components() const;  // |G / G0|
};

// Fraction of cosets of g0 on which the two characters agree identically.
Rat component_lambda(const ComponentModel& model);

// Fraction of single elements on which the characters agree; always at
// least component_lambda.
Rat exact_agreement_density(const ComponentModel& model);

struct SampleResult {
  Rat estimate;
  long long hits = 0;
  long long samples = 0;
  double interval_lo = 0.0;  // Wilson two-sided 95% interval
  double interval_hi = 1.0;
};

// Uniform draws from the group via a counter-based SplitMix64 stream: draw i
// depends only on (seed, i), so any sharding of the index range yields the
// same counts as the serial loop, bit for bit.
SampleResult sample_density(const ComponentModel& model, long long samples, std::uint64_t seed);
SampleResult sample_density_serial(const ComponentModel& model, long long samples,
                                   std::uint64_t seed);

// DH1 = 1 - 1/(2 m^2); DH2 = min(1 - 1/c1, 1 - 1/c2).
std::pair<Rat, Rat> dh_thresholds(long long m, long long c1, long long c2);

struct AuditCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

struct DensityReport {
  Rat lambda;
  Rat empirical_density;  // census or sampled agreement fraction
  long long sample_size = 0;
  Rat dh1, dh2;
  Rat mean_sq_char_diff;
  Rat upper_bound;  // (1 - lambda) * 4 m^2
  bool both_irreducible = false;
  bool distinct = false;
  bool lower_bound_applies = false;
  std::vector<AuditCheck> checks;
  bool all_passed() const;
};

// Mean of |chi1 - chi2|^2 over the group, with the two-sided bounds
// 2 <= mean <= (1 - lambda) 4 m^2 (the lower bound only under the
// irreducible-and-distinct hypothesis).
DensityReport orthogonality_audit(const ComponentModel& model);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace repkit
