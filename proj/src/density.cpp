#include "repkit/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "repkit/errors.hpp"

namespace repkit {

ComponentModel ComponentModel::make(const GroupPtr& group, Subgroup g0, ClassFunction chi1,
                                    ClassFunction chi2) {
  if (g0.parent != group) throw GroupMismatch("g0 lives in a different group");
  if (chi1.group() != group || chi2.group() != group)
    throw GroupMismatch("characters live on a different group");
  if (!g0.is_normal()) throw NotNormal("g0 is not normal");
  ComponentModel m{group, std::move(g0), std::move(chi1), std::move(chi2), 0};
  m.m = std::max(m.chi1.dim(), m.chi2.dim());
  if (m.m < 1) throw BadParameters("characters must have positive dimension");
  return m;
}

long long ComponentModel::num_components() const {
  return group->order() / g0.order();
}

namespace {

std::vector<bool> agreement_mask(const ComponentModel& model) {
  std::vector<bool> agree(model.group->order());
  for (int c = 0; c < model.group->num_classes(); ++c) {
    bool eq = model.chi1.at_class(c) == model.chi2.at_class(c);
    for (int x : model.group->classes()[c]) agree[x] = eq;
  }
  return agree;
}

}  // namespace

Rat component_lambda(const ComponentModel& model) {
  std::vector<bool> agree = agreement_mask(model);
  const GroupPtr& g = model.group;
  std::vector<bool> seen(g->order(), false);
  long long total = 0, inside = 0;
  for (int x = 0; x < g->order(); ++x) {
    if (seen[x]) continue;
    ++total;
    bool all = true;
    for (int i = 0; i < model.g0.order(); ++i) {
      int y = g->mul(x, model.g0.to_parent(i));
      seen[y] = true;
      all = all && agree[y];
    }
    if (all) ++inside;
  }
  Rat out(static_cast<long>(inside), static_cast<long>(total));
  out.canonicalize();
  return out;
}

Rat exact_agreement_density(const ComponentModel& model) {
  std::vector<bool> agree = agreement_mask(model);
  long long hits = 0;
  for (bool b : agree) hits += b;
  Rat out(static_cast<long>(hits), static_cast<long>(model.group->order()));
  out.canonicalize();
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

SampleResult finish_sample(long long hits, long long samples) {
  SampleResult r;
  r.hits = hits;
  r.samples = samples;
  r.estimate = Rat(static_cast<long>(hits), static_cast<long>(samples));
  r.estimate.canonicalize();
  // Wilson score interval at 95%.
  const double z = 1.959963984540054;
  const double n = static_cast<double>(samples);
  const double ph = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (ph + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
  r.interval_lo = std::max(0.0, center - half);
  r.interval_hi = std::min(1.0, center + half);
  return r;
}

long long sampled_hits(const ComponentModel& model, long long samples, std::uint64_t seed,
                       bool parallel) {
  std::vector<bool> agree = agreement_mask(model);
  const std::uint64_t order = static_cast<std::uint64_t>(model.group->order());
  long long hits = 0;
  // Counter-based stream: the i-th draw is a pure function of (seed, i),
  // so the reduction is schedule-independent.
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for reduction(+ : hits) schedule(static)
    for (long long i = 0; i < samples; ++i) {
      std::uint64_t u = splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
      hits += agree[static_cast<size_t>(u % order)] ? 1 : 0;
    }
    return hits;
  }
#else
  (void)parallel;
#endif
  for (long long i = 0; i < samples; ++i) {
    std::uint64_t u = splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
    hits += agree[static_cast<size_t>(u % order)] ? 1 : 0;
  }
  return hits;
}

}  // namespace

SampleResult sample_density(const ComponentModel& model, long long samples, std::uint64_t seed) {
  if (samples < 1) throw BadParameters("need at least one sample");
  return finish_sample(sampled_hits(model, samples, seed, /*parallel=*/true), samples);
}

SampleResult sample_density_serial(const ComponentModel& model, long long samples,
                                   std::uint64_t seed) {
  if (samples < 1) throw BadParameters("need at least one sample");
  return finish_sample(sampled_hits(model, samples, seed, /*parallel=*/false), samples);
}

std::pair<Rat, Rat> dh_thresholds(long long m, long long c1, long long c2) {
  if (m < 1 || c1 < 1 || c2 < 1) throw BadParameters("thresholds need positive arguments");
  Rat dh1 = Rat(1) - Rat(1, static_cast<long>(2 * m * m));
  Rat a = Rat(1) - Rat(1, static_cast<long>(c1));
  Rat b = Rat(1) - Rat(1, static_cast<long>(c2));
  Rat dh2 = std::min(a, b);
  dh1.canonicalize();
  dh2.canonicalize();
  return {dh1, dh2};
}

bool DensityReport::all_passed() const {
  for (const AuditCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

DensityReport orthogonality_audit(const ComponentModel& model) {
  DensityReport rep;
  rep.lambda = component_lambda(model);
  rep.empirical_density = exact_agreement_density(model);
  rep.sample_size = model.group->order();

  const GroupPtr& g = model.group;
  Cyclotomic sum;
  for (int c = 0; c < g->num_classes(); ++c) {
    Cyclotomic d = model.chi1.at_class(c) - model.chi2.at_class(c);
    sum += d * d.conj() * Cyclotomic(Rat(static_cast<long>(g->classes()[c].size())));
  }
  rep.mean_sq_char_diff = sum.to_rational() / Rat(static_cast<long>(g->order()));
  rep.mean_sq_char_diff.canonicalize();

  rep.upper_bound = (Rat(1) - rep.lambda) * Rat(static_cast<long>(4 * model.m * model.m));
  rep.upper_bound.canonicalize();

  long long c = model.num_components();
  auto [dh1, dh2] = dh_thresholds(model.m, c, c);
  rep.dh1 = dh1;
  rep.dh2 = dh2;

  Rat n1 = inner_product(model.chi1, model.chi1);
  Rat n2 = inner_product(model.chi2, model.chi2);
  rep.both_irreducible = n1 == 1 && n2 == 1;
  rep.distinct = !(model.chi1 == model.chi2);
  rep.lower_bound_applies = rep.both_irreducible && rep.distinct;

  auto add_check = [&rep](const std::string& name, bool pass, std::string details) {
    rep.checks.push_back({name, pass, std::move(details)});
  };
  std::ostringstream mean_s;
  mean_s << rep.mean_sq_char_diff.get_str() << " vs bound " << rep.upper_bound.get_str();
  add_check("upper_bound", rep.mean_sq_char_diff <= rep.upper_bound, mean_s.str());
  if (rep.lower_bound_applies)
    add_check("lower_bound", rep.mean_sq_char_diff >= 2,
              "mean " + rep.mean_sq_char_diff.get_str() + " >= 2");
  else
    add_check("lower_bound", true, "skipped: hypothesis not met");
  add_check("lambda_le_agreement", rep.lambda <= rep.empirical_density,
            rep.lambda.get_str() + " <= " + rep.empirical_density.get_str());
  return rep;
}

}  // namespace repkit
