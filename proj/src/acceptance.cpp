#include "repkit/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "repkit/chartab.hpp"
#include "repkit/clifford.hpp"
#include "repkit/density.hpp"
#include "repkit/errors.hpp"
#include "repkit/lattice.hpp"
#include "repkit/liealg.hpp"
#include "repkit/weights.hpp"

namespace repkit::accept {

namespace {

using weights::WeightMultiset;
using weights::WVec;

struct Outcome {
  bool pass;
  std::string details;
};

// --- 1. symmetric-power recovery round trip --------------------------------

Outcome run_sym_recovery() {
  std::mt19937_64 rng(0xC0FFEE);
  int good = 0;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    int r = 1 + static_cast<int>(rng() % 3);
    long long n = 1 + static_cast<long long>(rng() % 6);
    long long k = 1 + static_cast<long long>(rng() % 4);
    WeightMultiset w(r);
    for (long long i = 0; i < n; ++i) {
      WVec v(r);
      for (int j = 0; j < r; ++j) v[j] = static_cast<long long>(rng() % 19) - 9;
      w.add(v);
    }
    WeightMultiset s = weights::sym_power(w, k);
    try {
      if (weights::multiset_equal(weights::recover_from_sym(s, k, n), w)) ++good;
    } catch (const DomainError&) {
    }
  }
  std::ostringstream os;
  os << good << "/" << trials << " exact round trips";
  return {good == trials, os.str()};
}

// --- 2. unique tensor factorization sweeps ---------------------------------

Outcome run_factorization() {
  std::ostringstream os;
  bool pass = true;
  const std::vector<std::pair<std::string, long long>> sweeps{{"A1", 6}, {"A2", 2}, {"C2", 2}};
  for (const auto& [alg, bound] : sweeps) {
    auto rep = liealg::check_unique_factorization(liealg::AlgebraData::get(alg), bound, 2);
    pass = pass && rep.counterexamples.empty() && rep.tuples_checked > 0;
    os << alg << ": " << rep.tuples_checked << " tuples, " << rep.counterexamples.size()
       << " counterexamples; ";
  }
  return {pass, os.str()};
}

// --- 3. adjoint fibre -------------------------------------------------------

Outcome run_adjoint_fibre() {
  const auto& a2 = liealg::AlgebraData::get("A2");
  auto fibre = liealg::adjoint_fibre(a2, {{1, 0}}, 3);
  std::vector<liealg::HighestWeight> expected{{{0, 1}}, {{1, 0}}};
  std::ostringstream os;
  os << "fibre size " << fibre.size();
  return {fibre == expected, os.str()};
}

// --- 4. exterior-power counterexample ---------------------------------------

Outcome run_exterior_counterexample() {
  const auto& a2 = liealg::AlgebraData::get("A2");
  WeightMultiset v = weights::sym_power(liealg::irr_weights(a2, {{1, 0}}), 2);
  WeightMultiset vd = weights::dual(v);
  bool ext_equal = weights::multiset_equal(weights::ext_power(v, 3), weights::ext_power(vd, 3));
  bool self_dual = weights::multiset_equal(v, vd);
  std::ostringstream os;
  os << "E3 equal: " << ext_equal << ", V self-dual: " << self_dual;
  return {ext_equal && !self_dual, os.str()};
}

// --- 5. Heisenberg reproduction ---------------------------------------------

Outcome run_heisenberg() {
  GroupPtr g = FiniteGroup::heisenberg(3);
  std::vector<std::string> bad;
  auto expect = [&bad](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const int A = 1, B = 3, C = 9;
  expect(g->order() == 27, "order 27");
  expect(g->num_classes() == 11, "11 classes");
  expect(g->power(A, 3) == g->identity() && g->power(B, 3) == g->identity() &&
             g->power(C, 3) == g->identity(),
         "A^3=B^3=C^3=1");
  expect(g->mul(A, C) == g->mul(C, A) && g->mul(B, C) == g->mul(C, B), "C central");
  expect(g->mul(A, B) == g->mul(g->mul(C, B), A), "AB=CBA");

  MatrixRep rho1 = heisenberg_rep(g, 1), rho2 = heisenberg_rep(g, 2);
  ClassFunction chi1 = character(rho1), chi2 = character(rho2);
  expect(inner_product(chi1, chi1) == 1 && inner_product(chi2, chi2) == 1, "both irreducible");
  expect(kth_power_equal(chi1, chi2, 3), "cubes of characters agree");
  expect(linear_characters(g).size() == 9, "9 linear characters");
  expect(!twist_search(rho1, rho2).has_value(), "no twisting character");

  Subgroup t = Subgroup::from_generators(g, {A, C});
  CliffordDecomposition d1 = clifford_decompose(rho1, t);
  CliffordDecomposition d2 = clifford_decompose(rho2, t);
  bool mult_one = d1.components.size() == 3 && d2.components.size() == 3;
  for (const auto& c : d1.components) mult_one = mult_one && c.multiplicity == 1;
  for (const auto& c : d2.components) mult_one = mult_one && c.multiplicity == 1;
  expect(mult_one, "multiplicity one over T");
  expect(fixed_sets(d1) == fixed_sets(d2), "S1(phi) == S2(phi)");

  std::ostringstream os;
  if (bad.empty())
    os << "relations, irreducibility, k-th powers, twist search, Clifford all verified";
  else {
    os << "failed:";
    for (const auto& s : bad) os << ' ' << s << ';';
  }
  return {bad.empty(), os.str()};
}

// --- 6. orthogonality audit over all irreducible pairs ----------------------

Outcome run_orthogonality_audit() {
  std::vector<GroupPtr> groups{FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                               FiniteGroup::quaternion8(), FiniteGroup::heisenberg(3)};
  long long pairs = 0, violations = 0;
  for (const GroupPtr& g : groups) {
    auto table = character_table(g);
    Subgroup g0 = Subgroup::from_elements(g, g->derived_elements());
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = 0; j < table.size(); ++j) {
        if (i == j) continue;
        ++pairs;
        ComponentModel m = ComponentModel::make(g, g0, table[i], table[j]);
        DensityReport rep = orthogonality_audit(m);
        bool ok = rep.lower_bound_applies && rep.mean_sq_char_diff >= 2 &&
                  rep.mean_sq_char_diff <= rep.upper_bound;
        if (!ok) ++violations;
      }
  }
  std::ostringstream os;
  os << pairs << " ordered pairs, " << violations << " violations";
  return {violations == 0 && pairs > 0, os.str()};
}

// --- 7. density thresholds ---------------------------------------------------

Outcome run_thresholds() {
  auto [dh1a, dh2a] = dh_thresholds(3, 1, 5);
  auto [dh1b, dh2b] = dh_thresholds(3, 2, 2);
  bool pass = dh1a == Rat(17, 18) && dh1b == Rat(17, 18) && dh2a == 0 && dh2b == Rat(1, 2);
  std::ostringstream os;
  os << "DH1(m=3) = " << dh1a.get_str() << ", DH2(2,2) = " << dh2b.get_str();
  return {pass, os.str()};
}

// --- 8. sampling soundness ---------------------------------------------------

Outcome run_sampling() {
  std::vector<GroupPtr> pool;
  for (int n = 2; n <= 16; ++n) pool.push_back(FiniteGroup::cyclic(n));
  pool.push_back(FiniteGroup::cyclic(24));
  pool.push_back(FiniteGroup::cyclic(48));
  for (int n = 3; n <= 12; ++n) pool.push_back(FiniteGroup::dihedral(n));
  pool.push_back(FiniteGroup::dihedral(24));
  pool.push_back(FiniteGroup::symmetric(3));
  pool.push_back(FiniteGroup::symmetric(4));
  pool.push_back(FiniteGroup::quaternion8());
  pool.push_back(FiniteGroup::heisenberg(3));
  std::map<const FiniteGroup*, std::vector<ClassFunction>> tables;
  for (const GroupPtr& g : pool) tables[g.get()] = character_table(g);

  int lambda_ok = 0, covered = 0;
  const int models = 100;
  for (int i = 0; i < models; ++i) {
    std::mt19937_64 rng(0xACC8000ULL + i);
    const GroupPtr& g = pool[rng() % pool.size()];
    const auto& table = tables[g.get()];

    auto random_combo = [&]() {
      std::vector<long long> coeffs(table.size(), 0);
      bool nonzero = false;
      for (auto& c : coeffs) {
        c = rng() % 3;
        nonzero = nonzero || c > 0;
      }
      if (!nonzero) coeffs[rng() % coeffs.size()] = 1;
      std::optional<ClassFunction> acc;
      for (size_t k = 0; k < table.size(); ++k)
        for (long long rep = 0; rep < coeffs[k]; ++rep) acc = acc ? *acc + table[k] : table[k];
      return *acc;
    };
    ClassFunction chi1 = random_combo();
    ClassFunction chi2 = chi1;
    for (int tries = 0; tries < 200; ++tries) {
      ClassFunction cand = random_combo();
      if (cand.dim() == chi1.dim()) {
        chi2 = cand;
        break;
      }
    }
    Subgroup g0 = Subgroup::whole(g);
    switch (rng() % 5) {
      case 0: g0 = Subgroup::from_elements(g, {g->identity()}); break;
      case 1: g0 = Subgroup::from_elements(g, g->center_elements()); break;
      case 2: g0 = Subgroup::from_elements(g, g->derived_elements()); break;
      case 3: g0 = Subgroup::whole(g); break;
      default: {
        int c = static_cast<int>(rng() % g->num_classes());
        g0 = Subgroup::from_generators(g, g->classes()[c]);
        break;
      }
    }
    ComponentModel model = ComponentModel::make(g, g0, chi1, chi2);
    Rat exact = exact_agreement_density(model);
    if (component_lambda(model) <= exact) ++lambda_ok;
    SampleResult s = sample_density(model, 100000, splitmix64(0xD15EA5E0ULL + i));
    double ed = mpq_get_d(exact.get_mpq_t());
    if (s.interval_lo <= ed && ed <= s.interval_hi) ++covered;
  }
  std::ostringstream os;
  os << "lambda<=agreement " << lambda_ok << "/100, interval coverage " << covered << "/100";
  return {lambda_ok == 100 && covered >= 93, os.str()};
}

// --- 9. lattice suite ---------------------------------------------------------

Outcome run_lattice_suite(bool corrupt = false) {
  std::mt19937_64 rng(0x1A771CE);
  int sat_ok = 0, split_ok = 0, push_ok = 0;
  const int sat_trials = 200, split_trials = 100, push_trials = 100;

  for (int t = 0; t < sat_trials; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    int r = 1 + static_cast<int>(rng() % n);
    Lattice l = Lattice::zero(n);
    for (int tries = 0;; ++tries) {
      std::vector<std::vector<Int>> rows(r, std::vector<Int>(n));
      for (auto& row : rows)
        for (auto& x : row) x = static_cast<long>(rng() % 101) - 50;
      Lattice cand = Lattice::from_generators(n, rows);
      if (cand.rank() == r || tries > 50) {
        l = cand;
        break;
      }
    }
    if (l.rank() == 0) {
      ++sat_ok;  // degenerate draw; nothing to check
      continue;
    }
    Lattice sat = saturate(l);
    bool idem = saturate(sat) == sat && sat.rank() == l.rank();
    Int idx = index_in(l, sat);
    Int prod = 1;
    for (const Int& d : snf(l.basis()).diag)
      if (d != 0) prod *= d;
    if (corrupt) prod += 1;
    if (idem && idx == prod && is_direct_summand(sat)) ++sat_ok;
  }

  for (int t = 0; t < split_trials; ++t) {
    int b = 1 + static_cast<int>(rng() % 6);
    IntMat u = IntMat::identity(b);
    for (int ops = 0; ops < 3 * b; ++ops) {
      int i = static_cast<int>(rng() % b), j = static_cast<int>(rng() % b);
      if (i == j) continue;
      if (rng() % 4 == 0)
        u.swap_rows(i, j);
      else
        u.add_row(i, j, Int(static_cast<long>(rng() % 5) - 2));
    }
    int a = static_cast<int>(rng() % (b + 1));
    LatticeMap incl(a, b, u.col_slice(0, a));
    SplitResult s = split_free_quotient(incl);
    bool ok = (s.projection.matrix * s.section.matrix) == IntMat::identity(b - a) &&
              (s.projection.matrix * incl.matrix).is_zero();
    if (ok) ++split_ok;
  }

  for (int t = 0; t < push_trials; ++t) {
    int m = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    int x = 1 + static_cast<int>(rng() % 4);
    IntMat pm(m, x), qm(c, x);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < x; ++j) pm.at(i, j) = static_cast<long>(rng() % 19) - 9;
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < x; ++j) qm.at(i, j) = static_cast<long>(rng() % 19) - 9;
    LatticeMap p(x, m, pm), q(x, c, qm);
    PushoutResult res = pushout_torsion_free(p, q);
    int rel_rank = snf_full(IntMat::vstack(pm, -qm)).rank;
    bool ok = compose(res.from_m, p).matrix == compose(res.from_c, q).matrix &&
              res.m1.rank() == m + c - rel_rank;
    if (ok) ++push_ok;
  }

  std::ostringstream os;
  os << "saturation " << sat_ok << "/" << sat_trials << ", splittings " << split_ok << "/"
     << split_trials << ", pushouts " << push_ok << "/" << push_trials;
  return {sat_ok == sat_trials && split_ok == split_trials && push_ok == push_trials, os.str()};
}

// --- 10. pre-Asai lift independence -----------------------------------------

Outcome run_asai() {
  struct Config {
    std::string name;
    Subgroup normal;
    MatrixRep rep;
  };
  std::vector<Config> configs;

  GroupPtr h3 = FiniteGroup::heisenberg(3);
  Subgroup t = Subgroup::from_generators(h3, {1, 9});
  auto t_chars = linear_characters(t.group);
  for (int idx : {1, 3, 4})
    configs.push_back({"h3-linear", t, MatrixRep::from_linear(t_chars[idx])});
  configs.push_back({"h3-rho1", t, heisenberg_rep(h3, 1).restricted_to(t)});
  configs.push_back({"h3-rho2", t, heisenberg_rep(h3, 2).restricted_to(t)});

  GroupPtr s3 = FiniteGroup::symmetric(3);
  GroupPtr w = FiniteGroup::swap_wreath(s3);
  std::vector<int> base;
  for (int x = 0; x < s3->order(); ++x)
    for (int y = 0; y < s3->order(); ++y) base.push_back((x * s3->order() + y) * 2);
  Subgroup n = Subgroup::from_elements(w, base);
  MatrixRep s3_std = symmetric_standard_rep(s3);
  MatrixRep s3_triv = MatrixRep::trivial(s3);
  auto wreath_rep = [&](const MatrixRep& left, const MatrixRep& right) {
    std::vector<CycMat> images(n.order());
    for (int i = 0; i < n.order(); ++i) {
      int p = n.to_parent(i) / 2;
      int x = p / s3->order(), y = p % s3->order();
      images[i] = CycMat::kron(left.image(x), right.image(y));
    }
    return MatrixRep::from_images(n.group, std::move(images), /*verify=*/true);
  };
  configs.push_back({"wreath-std-triv", n, wreath_rep(s3_std, s3_triv)});
  configs.push_back({"wreath-triv-std", n, wreath_rep(s3_triv, s3_std)});
  configs.push_back({"wreath-std-std", n, wreath_rep(s3_std, s3_std)});

  for (int dn : {3, 4, 5, 6, 8, 10}) {
    GroupPtr d = FiniteGroup::dihedral(dn);
    Subgroup cn = Subgroup::from_generators(d, {1});
    auto chars = linear_characters(cn.group);
    configs.push_back({"dihedral-" + std::to_string(dn), cn,
                       MatrixRep::from_linear(chars[1 % chars.size()])});
  }

  GroupPtr s4 = FiniteGroup::symmetric(4);
  std::vector<int> evens;
  for (int x = 0; x < s4->order(); ++x) {
    const auto& p = s4->perms()[x];
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) evens.push_back(x);
  }
  Subgroup a4 = Subgroup::from_elements(s4, evens);
  auto a4_chars = linear_characters(a4.group);
  configs.push_back({"s4-a4-lin1", a4, MatrixRep::from_linear(a4_chars[1])});
  configs.push_back({"s4-a4-lin2", a4, MatrixRep::from_linear(a4_chars[2])});

  GroupPtr q8 = FiniteGroup::quaternion8();
  Subgroup c4 = Subgroup::from_generators(q8, {q8->generators()[0]});
  auto c4_chars = linear_characters(c4.group);
  configs.push_back({"q8-c4-lin1", c4, MatrixRep::from_linear(c4_chars[1])});
  configs.push_back({"q8-c4-lin2", c4, MatrixRep::from_linear(c4_chars[2])});

  Subgroup z3 = Subgroup::from_elements(h3, h3->center_elements());
  auto z_chars = linear_characters(z3.group);
  configs.push_back({"h3-center-lin1", z3, MatrixRep::from_linear(z_chars[1])});
  configs.push_back({"h3-center-lin2", z3, MatrixRep::from_linear(z_chars[2])});

  std::mt19937_64 rng(0xA5A1);
  int ok = 0;
  for (const Config& cfg : configs) {
    std::vector<int> lifts1 = coset_reps_of(cfg.normal);
    std::vector<int> lifts2 = lifts1;
    bool changed = false;
    for (size_t i = 0; i < lifts2.size(); ++i) {
      int nidx = static_cast<int>(rng() % cfg.normal.order());
      if (nidx != 0) changed = true;
      lifts2[i] = cfg.normal.parent->mul(lifts2[i], cfg.normal.to_parent(nidx));
    }
    if (!changed && cfg.normal.order() > 1) {
      lifts2[0] = cfg.normal.parent->mul(lifts2[0], cfg.normal.to_parent(1));
    }
    MatrixRep as1 = pre_asai(cfg.rep, conjugation_automorphisms(cfg.normal, lifts1));
    MatrixRep as2 = pre_asai(cfg.rep, conjugation_automorphisms(cfg.normal, lifts2));
    if (character(as1) == character(as2)) ++ok;
  }
  std::ostringstream os;
  os << ok << "/" << configs.size() << " configurations lift-independent";
  return {ok == static_cast<int>(configs.size()) && configs.size() >= 20, os.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& filter, bool negative_control) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"weights-recovery-roundtrip", run_sym_recovery},
      {"tensor-unique-factorization", run_factorization},
      {"adjoint-fibre", run_adjoint_fibre},
      {"exterior-counterexample", run_exterior_counterexample},
      {"heisenberg-reproduction", run_heisenberg},
      {"orthogonality-audit", run_orthogonality_audit},
      {"density-thresholds", run_thresholds},
      {"sampling-soundness", run_sampling},
      {"lattice-suite", []() { return run_lattice_suite(false); }},
      {"asai-lift-independence", run_asai},
  };
  if (negative_control)
    criteria.push_back({"negative-control-lattice", []() { return run_lattice_suite(true); }});

  std::vector<CriterionResult> out;
  for (auto& [name, fn] : criteria) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    CriterionResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = fn();
      r.pass = o.pass;
      r.details = o.details;
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace repkit::accept
