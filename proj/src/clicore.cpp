#include "repkit/clicore.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "repkit/acceptance.hpp"
#include "repkit/clifford.hpp"
#include "repkit/density.hpp"
#include "repkit/errors.hpp"
#include "repkit/io.hpp"

namespace repkit::cli {

namespace {

using io::json;

struct GlobalOpts {
  long long seed = 0;
  std::string output;
  std::string format = "json";
  bool timing = false;
};

std::string unescape_newlines(std::string s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
      out.push_back('\n');
      ++i;
    } else if (s[i] == ';') {
      out.push_back('\n');
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void add_check(json& report, const std::string& name, bool pass, const std::string& details) {
  report["checks"].push_back(json{{"name", name}, {"pass", pass}, {"details", details}});
}

bool all_checks_pass(const json& report) {
  if (!report.contains("checks")) return true;
  for (const json& c : report["checks"])
    if (!c.at("pass").get<bool>()) return false;
  return true;
}

void render_text(const json& report, std::ostream& out) {
  out << "command: " << report.value("command", "?") << "\n";
  if (report.contains("error"))
    out << "error: " << report["error"].get<std::string>() << " ("
        << report.value("message", "") << ")\n";
  if (report.contains("result")) out << "result:\n" << report["result"].dump(2) << "\n";
  if (report.contains("checks"))
    for (const json& c : report["checks"])
      out << (c.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ") << c.at("name").get<std::string>()
          << ": " << c.at("details").get<std::string>() << "\n";
}

void emit(const json& report, const GlobalOpts& g, std::ostream& out) {
  std::ostringstream buffer;
  if (g.format == "text")
    render_text(report, buffer);
  else
    buffer << report.dump(2) << "\n";
  if (g.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(g.output);
    if (!f) throw std::invalid_argument("cannot open output file '" + g.output + "'");
    f << buffer.str();
  }
}

json weights_result(const weights::WeightMultiset& w) {
  return json{{"json", io::weights_to_json(w)}, {"text", io::weights_to_text(w)}};
}

// ---------------------------------------------------------------------------

json cmd_recover(const std::string& kind, long long k, long long n, const std::string& inline_w,
                 const std::string& input_path) {
  std::string text = !input_path.empty() ? read_file(input_path) : unescape_newlines(inline_w);
  weights::WeightMultiset s = io::weights_from_text(text);
  weights::WeightMultiset rec = kind == "recover-sym" ? weights::recover_from_sym(s, k, n)
                                                      : weights::recover_from_tensor(s, k, n);
  json report;
  report["result"] = weights_result(rec);
  weights::WeightMultiset forward =
      kind == "recover-sym" ? weights::sym_power(rec, k) : weights::tensor_power(rec, k);
  add_check(report, "forward_recomputation", weights::multiset_equal(forward, s),
            "power of the recovered multiset reproduces the input");
  add_check(report, "size", rec.total_size() == n,
            "recovered " + std::to_string(rec.total_size()) + " weights");
  return report;
}

json cmd_ext_search(long long k, long long n, int rank, long long bound,
                    const std::string& inline_w, const std::string& input_path) {
  std::string text = !input_path.empty() ? read_file(input_path) : unescape_newlines(inline_w);
  weights::WeightMultiset target = io::weights_from_text(text);
  if (target.rank() != rank) throw BadParameters("target rank differs from --rank");

  // Candidate alphabet: every vector in the coordinate box.
  std::vector<weights::WVec> alphabet;
  {
    weights::WVec v(rank, -bound);
    for (;;) {
      alphabet.push_back(v);
      int i = 0;
      for (; i < rank; ++i) {
        if (++v[i] <= bound) break;
        v[i] = -bound;
      }
      if (i == rank) break;
    }
  }
  Int space = binomial(static_cast<long long>(alphabet.size()) + n - 1, n);
  if (space > 2000000)
    throw BadParameters("search space " + space.get_str() + " exceeds the harness cap");

  std::vector<weights::WeightMultiset> matches;
  std::vector<size_t> pick;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<long long>(pick.size()) == n) {
      weights::WeightMultiset w(rank);
      for (size_t i : pick) w.add(alphabet[i]);
      try {
        if (weights::multiset_equal(weights::ext_power(w, k), target)) matches.push_back(w);
      } catch (const KTooLarge&) {
      }
      return;
    }
    for (size_t i = start; i < alphabet.size(); ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  json report;
  report["result"]["match_count"] = matches.size();
  report["result"]["matches"] = json::array();
  for (const auto& w : matches) report["result"]["matches"].push_back(io::weights_to_json(w));
  bool verified = true;
  for (const auto& w : matches)
    verified = verified && weights::multiset_equal(weights::ext_power(w, k), target);
  add_check(report, "matches_verified", verified, "every match re-expands to the target");
  add_check(report, "search_space", true, "candidates: " + space.get_str());
  return report;
}

json factor_tuple_json(const liealg::FactorTuple& t) {
  json arr = json::array();
  for (const auto& h : t.factors) arr.push_back(io::highest_weight_to_json(h));
  return arr;
}

json cmd_factorize(const std::string& algebra, long long bound, long long max_factors,
                   long long cap, bool serial) {
  const auto& alg = liealg::AlgebraData::get(algebra);
  liealg::FactorizationReport rep =
      serial ? liealg::check_unique_factorization_serial(alg, bound, max_factors, cap)
             : liealg::check_unique_factorization(alg, bound, max_factors, cap);
  json report;
  report["result"] = json{{"algebra", rep.algebra},
                          {"bound", rep.bound},
                          {"max_factors", rep.max_factors},
                          {"tuples_checked", rep.tuples_checked},
                          {"pairs_checked", rep.pairs_checked},
                          {"counterexamples", json::array()}};
  for (const auto& [a, b] : rep.counterexamples)
    report["result"]["counterexamples"].push_back(
        json{{"first", factor_tuple_json(a)}, {"second", factor_tuple_json(b)}});
  add_check(report, "no_counterexamples", rep.counterexamples.empty(),
            std::to_string(rep.counterexamples.size()) + " collisions among " +
                std::to_string(rep.tuples_checked) + " tuples");
  return report;
}

json cmd_adjoint_fibre(const std::string& algebra, const std::string& hw_str, long long bound,
                       long long cap) {
  const auto& alg = liealg::AlgebraData::get(algebra);
  liealg::HighestWeight hw = io::highest_weight_from_string(hw_str);
  auto fibre = liealg::adjoint_fibre(alg, hw, bound, cap);
  json report;
  report["result"]["fibre"] = json::array();
  for (const auto& h : fibre) report["result"]["fibre"].push_back(io::highest_weight_to_json(h));
  liealg::HighestWeight dual = liealg::dual_weight(alg, hw);
  bool has_hw = std::find(fibre.begin(), fibre.end(), hw) != fibre.end();
  bool has_dual = std::find(fibre.begin(), fibre.end(), dual) != fibre.end();
  std::vector<liealg::HighestWeight> expected{hw, dual};
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end(),
                             [](const auto& a, const auto& b) { return a.coeffs == b.coeffs; }),
                 expected.end());
  add_check(report, "contains_hw", has_hw, "fibre contains the input weight");
  add_check(report, "contains_dual", has_dual, "fibre contains the dual weight");
  add_check(report, "fibre_is_hw_and_dual", fibre == expected,
            "fibre equals {hw, dual} exactly");
  return report;
}

struct RepPair {
  GroupPtr group;
  MatrixRep rho1;
  MatrixRep rho2;
};

RepPair load_rep_pair(const std::string& group_spec, const std::string& rep1,
                      const std::string& rep2, const std::string& input_path) {
  if (!input_path.empty()) {
    json j = json::parse(read_file(input_path));
    GroupPtr g = io::parse_group_spec(j.at("group").is_string()
                                          ? j.at("group").get<std::string>()
                                          : j.at("group").dump());
    return RepPair{g, io::rep_from_json(g, j.at("rep1")), io::rep_from_json(g, j.at("rep2"))};
  }
  GroupPtr g = io::parse_group_spec(group_spec);
  return RepPair{g, io::parse_rep_spec(g, rep1), io::parse_rep_spec(g, rep2)};
}

json cmd_twist_search(const std::string& group_spec, const std::string& rep1,
                      const std::string& rep2, const std::string& input_path) {
  RepPair pair = load_rep_pair(group_spec, rep1, rep2, input_path);
  auto eta = twist_search(pair.rho1, pair.rho2);
  json report;
  size_t candidates = linear_characters(pair.group).size();
  report["result"]["candidates"] = candidates;
  if (eta) {
    report["result"]["witness"] = io::classfunction_to_json(*eta);
    add_check(report, "witness_verified",
              character(pair.rho1) * *eta == character(pair.rho2),
              "chi2 == chi1 * eta exactly");
  } else {
    report["result"]["witness"] = nullptr;
    add_check(report, "exhausted", true,
              "all " + std::to_string(candidates) + " linear characters fail");
  }
  return report;
}

json clifford_json(const CliffordDecomposition& dec) {
  json out;
  out["components"] = json::array();
  for (const auto& c : dec.components)
    out["components"].push_back(json{{"multiplicity", c.multiplicity},
                                     {"dim", c.character.dim()},
                                     {"character", io::classfunction_to_json(c.character)}});
  out["coset_reps"] = json::array();
  for (int t : dec.coset_reps)
    out["coset_reps"].push_back(dec.normal.parent->element_label(t));
  out["action"] = dec.action;
  out["fixed_sets"] = fixed_sets(dec);
  return out;
}

json cmd_heisenberg(int n, int a, int b, long long k) {
  GroupPtr g = FiniteGroup::heisenberg(n);
  if (k <= 0) k = n;
  MatrixRep rho_a = heisenberg_rep(g, a), rho_b = heisenberg_rep(g, b);
  ClassFunction chi_a = character(rho_a), chi_b = character(rho_b);
  json report;
  report["result"]["order"] = g->order();
  report["result"]["classes"] = g->num_classes();
  report["result"]["kth_power_equal"] = kth_power_equal(chi_a, chi_b, k);
  auto eta = twist_search(rho_a, rho_b);
  report["result"]["twist_witness"] = eta ? json(io::classfunction_to_json(*eta)) : json(nullptr);

  Subgroup t = Subgroup::from_generators(g, {1, n * n});  // A and C
  CliffordDecomposition da = clifford_decompose(rho_a, t);
  CliffordDecomposition db = clifford_decompose(rho_b, t);
  report["result"]["clifford_a"] = clifford_json(da);
  report["result"]["clifford_b"] = clifford_json(db);

  add_check(report, "irreducible", inner_product(chi_a, chi_a) == 1 &&
                                       inner_product(chi_b, chi_b) == 1,
            "<chi,chi> = 1 for both");
  add_check(report, "kth_power_equal", kth_power_equal(chi_a, chi_b, k),
            "characters agree after k-th powers, k = " + std::to_string(k));
  add_check(report, "twist_search_empty", a % n == b % n ? eta.has_value() : !eta.has_value(),
            a % n == b % n ? "identical parameters twist trivially" : "no twisting character");
  bool mult_one = true;
  for (const auto& c : da.components) mult_one = mult_one && c.multiplicity == 1;
  for (const auto& c : db.components) mult_one = mult_one && c.multiplicity == 1;
  add_check(report, "multiplicity_one", mult_one, "restriction to T is multiplicity-free");
  add_check(report, "fixed_sets_agree", fixed_sets(da) == fixed_sets(db),
            "S_a(phi) == S_b(phi) for every coset");
  return report;
}

json cmd_clifford(const std::string& group_spec, const std::string& rep_spec,
                  const std::string& g0_spec) {
  GroupPtr g = io::parse_group_spec(group_spec);
  MatrixRep rho = io::parse_rep_spec(g, rep_spec);
  Subgroup n = io::parse_subgroup_spec(g, g0_spec);
  CliffordDecomposition dec = clifford_decompose(rho, n);
  json report;
  report["result"] = clifford_json(dec);
  long long dim_sum = 0;
  for (const auto& c : dec.components) dim_sum += c.multiplicity * c.character.dim();
  add_check(report, "dimension_sum", dim_sum == rho.dim(),
            std::to_string(dim_sum) + " == " + std::to_string(rho.dim()));
  add_check(report, "action_homomorphism", true, "verified on all coset pairs");
  return report;
}

json cmd_asai(const std::string& group_spec, const std::string& normal_spec,
              const std::string& rep_spec, long long seed) {
  GroupPtr g = io::parse_group_spec(group_spec);
  Subgroup n = io::parse_subgroup_spec(g, normal_spec);
  if (!n.is_normal()) throw NotNormal("the chosen subgroup is not normal");
  MatrixRep rho = io::parse_rep_spec(n.group, rep_spec);

  std::vector<int> lifts1 = coset_reps_of(n);
  std::vector<int> lifts2 = lifts1;
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed) ^ 0xA5A1ULL);
  bool changed = false;
  for (auto& t : lifts2) {
    int idx = static_cast<int>(rng() % n.order());
    changed = changed || idx != 0;
    t = g->mul(t, n.to_parent(idx));
  }
  if (!changed && n.order() > 1) lifts2[0] = g->mul(lifts2[0], n.to_parent(1));

  MatrixRep as1 = pre_asai(rho, conjugation_automorphisms(n, lifts1));
  MatrixRep as2 = pre_asai(rho, conjugation_automorphisms(n, lifts2));
  ClassFunction c1 = character(as1), c2 = character(as2);

  json report;
  report["result"]["dim"] = as1.dim();
  report["result"]["character"] = io::classfunction_to_json(c1);
  add_check(report, "lift_independent", c1 == c2,
            "characters agree for two distinct lift systems");
  // Product rule: the twisted-tensor character is the product of the
  // conjugate characters.
  bool product_rule = true;
  ClassFunction chi = character(rho);
  auto auts = conjugation_automorphisms(n, lifts1);
  for (int c = 0; c < n.group->num_classes() && product_rule; ++c) {
    int s = n.group->class_rep(c);
    Cyclotomic prod(Rat(1));
    for (const auto& f : auts) prod *= chi.at_element(f[s]);
    product_rule = c1.at_class(c) == prod;
  }
  add_check(report, "character_product_rule", product_rule,
            "As character equals the product of conjugate characters");
  return report;
}

json cmd_cocycle(const std::string& group_spec, const std::string& rep1_spec,
                 const std::string& rep2_spec, const std::string& sub_spec,
                 const std::string& input_path) {
  RepPair pair = load_rep_pair(group_spec, rep1_spec, rep2_spec, input_path);
  Subgroup n = io::parse_subgroup_spec(pair.group, sub_spec);
  std::vector<CycMat> t = twist_cocycle(pair.rho1, pair.rho2, n);
  json report;
  report["result"]["subgroup_order"] = n.order();
  if (pair.group->order() <= 32) {
    report["result"]["cocycle"] = json::array();
    for (int s = 0; s < pair.group->order(); ++s)
      report["result"]["cocycle"].push_back(
          json{{"element", pair.group->element_label(s)}, {"matrix", io::cycmat_to_json(t[s])}});
  } else {
    report["result"]["cocycle_sample"] = json::array();
    for (int s : pair.group->generators())
      report["result"]["cocycle_sample"].push_back(
          json{{"element", pair.group->element_label(s)}, {"matrix", io::cycmat_to_json(t[s])}});
  }
  add_check(report, "cocycle_identity", true, "verified on all pairs");
  add_check(report, "commutant_membership", true, "values commute with rho1 on the subgroup");
  return report;
}

json density_report_json(const DensityReport& rep) {
  json out;
  out["lambda"] = io::rat_to_json(rep.lambda);
  out["empirical_density"] = io::rat_to_json(rep.empirical_density);
  out["sample_size"] = rep.sample_size;
  out["dh1"] = io::rat_to_json(rep.dh1);
  out["dh2"] = io::rat_to_json(rep.dh2);
  out["mean_sq_char_diff"] = io::rat_to_json(rep.mean_sq_char_diff);
  out["upper_bound"] = io::rat_to_json(rep.upper_bound);
  out["both_irreducible"] = rep.both_irreducible;
  out["distinct"] = rep.distinct;
  out["lower_bound_applies"] = rep.lower_bound_applies;
  return out;
}

json cmd_density(const std::string& group_spec, const std::string& g0_spec,
                 const std::string& rep1_spec, const std::string& rep2_spec, long long samples,
                 long long seed) {
  GroupPtr g = io::parse_group_spec(group_spec);
  Subgroup g0 = io::parse_subgroup_spec(g, g0_spec);
  ClassFunction chi1 = io::parse_character_spec(g, rep1_spec);
  ClassFunction chi2 = io::parse_character_spec(g, rep2_spec);
  ComponentModel model = ComponentModel::make(g, g0, chi1, chi2);
  DensityReport audit = orthogonality_audit(model);
  SampleResult sampled = sample_density(model, samples, static_cast<std::uint64_t>(seed));
  SampleResult serial = sample_density_serial(model, samples, static_cast<std::uint64_t>(seed));

  json report;
  report["result"] = density_report_json(audit);
  report["result"]["m"] = model.m;
  report["result"]["components"] = model.num_components();
  report["result"]["sampled"] = json{{"estimate", io::rat_to_json(sampled.estimate)},
                                     {"hits", sampled.hits},
                                     {"samples", sampled.samples},
                                     {"interval", json::array({sampled.interval_lo,
                                                               sampled.interval_hi})}};
  for (const AuditCheck& c : audit.checks) add_check(report, c.name, c.pass, c.details);
  add_check(report, "serial_parallel_match", sampled.hits == serial.hits,
            "sharded and serial sampling agree bit for bit");
  double ed = mpq_get_d(audit.empirical_density.get_mpq_t());
  add_check(report, "interval_covers_exact",
            sampled.interval_lo <= ed && ed <= sampled.interval_hi,
            "95% interval contains the exact agreement density");
  return report;
}

json lattice_check_report(const Lattice& l) {
  json report;
  Lattice sat = saturate(l);
  report["result"]["saturation"] = io::lattice_to_json(sat);
  report["result"]["is_direct_summand"] = is_direct_summand(l);
  Int idx = l.rank() == sat.rank() && l.rank() > 0 ? index_in(l, sat) : Int(1);
  report["result"]["index_in_saturation"] = idx.get_str();
  Int prod = 1;
  for (const Int& d : snf(l.basis()).diag)
    if (d != 0) prod *= d;
  add_check(report, "idempotent", saturate(sat) == sat, "saturate(saturate(L)) == saturate(L)");
  add_check(report, "index_is_invariant_factor_product", idx == prod,
            idx.get_str() + " == " + prod.get_str());
  add_check(report, "saturation_is_summand", is_direct_summand(sat),
            "the saturation is its own torsion closure");
  return report;
}

json cmd_lattice_saturate(const std::string& input_path, int ambient,
                          const std::string& basis_str) {
  Lattice l = Lattice::zero(std::max(ambient, 0));
  if (!input_path.empty()) {
    l = io::lattice_from_json(json::parse(read_file(input_path)));
  } else {
    std::vector<std::vector<Int>> rows;
    std::stringstream ss(basis_str);
    std::string part;
    while (std::getline(ss, part, ';')) {
      std::istringstream ls(part);
      std::vector<Int> row;
      long long x;
      while (ls >> x) row.emplace_back(static_cast<long>(x));
      if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw BadParameters("no basis rows given");
    l = Lattice::from_generators(ambient, rows);
  }
  return lattice_check_report(l);
}

json cmd_lattice_lift(const std::string& input_path) {
  json j = json::parse(read_file(input_path));
  IntMat restr = io::imat_from_json(j.at("restriction"));
  IntMat ext = io::imat_from_json(j.at("extension"));
  LatticeMap restriction(restr.cols(), restr.rows(), restr);
  LatticeMap extension(ext.cols(), ext.rows(), ext);
  LatticeMap lifted = lift_torus_map(restriction, extension);
  json report;
  report["result"]["lift"] = io::imat_to_json(lifted.matrix);
  add_check(report, "lift_commutes", compose(lifted, extension).matrix == restriction.matrix,
            "lift composed with the extension reproduces the restriction");
  return report;
}

json cmd_selftest(const std::string& filter, bool negative_control, bool timing,
                  std::ostream& out, int& exit_code) {
  auto results = accept::run_acceptance(filter, negative_control);
  json report;
  report["result"]["criteria"] = json::array();
  bool all = true;
  for (const auto& r : results) {
    std::ostringstream line;
    line << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (timing) line << " (" << static_cast<long long>(r.millis) << " ms)";
    line << ": " << r.details;
    out << line.str() << "\n";
    json jr{{"name", r.name}, {"pass", r.pass}, {"details", r.details}};
    if (timing) jr["millis"] = r.millis;
    report["result"]["criteria"].push_back(jr);
    add_check(report, r.name, r.pass, r.details);
    all = all && r.pass;
  }
  exit_code = all ? 0 : 1;
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalOpts g;
  if (const char* env = std::getenv("REPKIT_SEED")) g.seed = std::atoll(env);

  CLI::App app{"Exact-arithmetic toolkit for recovering representations from "
               "tensor, symmetric, exterior and adjoint power data"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");
  app.add_option("--seed", g.seed, "Seed for randomized subcommands");
  app.add_option("--output", g.output, "Write the report to a file instead of stdout");
  app.add_option("--format", g.format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", g.timing, "Include wall-clock timings in the report");

  std::function<json()> handler;
  json config;

  // recover-sym / recover-tensor
  for (const std::string kind : {"recover-sym", "recover-tensor"}) {
    auto* sc = app.add_subcommand(
        kind, kind == "recover-sym" ? "Invert a symmetric power of a weight multiset"
                                    : "Invert a tensor power of a weight multiset");
    auto k = std::make_shared<long long>(0);
    auto n = std::make_shared<long long>(0);
    auto w = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    sc->add_option("--k", *k, "Power degree")->required();
    sc->add_option("--n", *n, "Size of the multiset to recover")->required();
    sc->add_option("--weights", *w, "Inline weights, lines of 'mult c1 ... cr'");
    sc->add_option("--input", *input, "File with one weight per line");
    sc->callback([&, kind, k, n, w, input]() {
      config = json{{"k", *k}, {"n", *n}, {"weights", *w}, {"input", *input}};
      handler = [=]() { return cmd_recover(kind, *k, *n, *w, *input); };
    });
  }

  {
    auto* sc = app.add_subcommand("ext-search",
                                  "Exhaustively search preimages of an exterior power");
    auto k = std::make_shared<long long>(0);
    auto n = std::make_shared<long long>(0);
    auto rank = std::make_shared<int>(1);
    auto bound = std::make_shared<long long>(2);
    auto w = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    sc->add_option("--k", *k, "Exterior power degree")->required();
    sc->add_option("--n", *n, "Size of the sought multiset")->required();
    sc->add_option("--rank", *rank, "Weight rank")->required();
    sc->add_option("--bound", *bound, "Coordinate box bound");
    sc->add_option("--target", *w, "Inline target multiset");
    sc->add_option("--input", *input, "File with the target multiset");
    sc->callback([&, k, n, rank, bound, w, input]() {
      config = json{{"k", *k},         {"n", *n},      {"rank", *rank},
                    {"bound", *bound}, {"target", *w}, {"input", *input}};
      handler = [=]() { return cmd_ext_search(*k, *n, *rank, *bound, *w, *input); };
    });
  }

  {
    auto* sc = app.add_subcommand("factorize", "Sweep for tensor factorization collisions");
    auto algebra = std::make_shared<std::string>("A1");
    auto bound = std::make_shared<long long>(2);
    auto factors = std::make_shared<long long>(2);
    auto cap = std::make_shared<long long>(liealg::kDefaultProductCap);
    auto serial = std::make_shared<bool>(false);
    sc->add_option("--algebra", *algebra, "A1, A2 or C2")->required();
    sc->add_option("--bound", *bound, "Max fundamental coordinate");
    sc->add_option("--max-factors", *factors, "Max tuple length");
    sc->add_option("--cap", *cap, "Product dimension cap");
    sc->add_flag("--serial", *serial, "Use the serial reference sweep");
    sc->callback([&, algebra, bound, factors, cap, serial]() {
      config = json{{"algebra", *algebra},
                    {"bound", *bound},
                    {"max_factors", *factors},
                    {"cap", *cap},
                    {"serial", *serial}};
      handler = [=]() { return cmd_factorize(*algebra, *bound, *factors, *cap, *serial); };
    });
  }

  {
    auto* sc = app.add_subcommand("adjoint-fibre",
                                  "All bounded modules sharing an adjoint weight multiset");
    auto algebra = std::make_shared<std::string>("A2");
    auto hw = std::make_shared<std::string>();
    auto bound = std::make_shared<long long>(3);
    auto cap = std::make_shared<long long>(liealg::kDefaultProductCap);
    sc->add_option("--algebra", *algebra, "A1, A2 or C2")->required();
    sc->add_option("--hw", *hw, "Highest weight, e.g. '1,0'")->required();
    sc->add_option("--bound", *bound, "Search bound on coordinates");
    sc->add_option("--cap", *cap, "Dimension cap");
    sc->callback([&, algebra, hw, bound, cap]() {
      config = json{{"algebra", *algebra}, {"hw", *hw}, {"bound", *bound}, {"cap", *cap}};
      handler = [=]() { return cmd_adjoint_fibre(*algebra, *hw, *bound, *cap); };
    });
  }

  {
    auto* sc = app.add_subcommand("twist-search",
                                  "Search for a linear character with rho2 = rho1 (x) eta");
    auto group = std::make_shared<std::string>();
    auto rep1 = std::make_shared<std::string>();
    auto rep2 = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    sc->add_option("--group", *group, "Group spec, e.g. heisenberg:3");
    sc->add_option("--rep1", *rep1, "First representation spec");
    sc->add_option("--rep2", *rep2, "Second representation spec");
    sc->add_option("--input", *input, "JSON file with group and generator images");
    sc->callback([&, group, rep1, rep2, input]() {
      config = json{{"group", *group}, {"rep1", *rep1}, {"rep2", *rep2}, {"input", *input}};
      handler = [=]() { return cmd_twist_search(*group, *rep1, *rep2, *input); };
    });
  }

  {
    auto* sc = app.add_subcommand("heisenberg", "The Heisenberg pair demonstration");
    auto n = std::make_shared<int>(3);
    auto a = std::make_shared<int>(1);
    auto b = std::make_shared<int>(2);
    auto k = std::make_shared<long long>(0);
    sc->add_option("--n", *n, "Odd prime");
    sc->add_option("--a", *a, "First parameter");
    sc->add_option("--b", *b, "Second parameter");
    sc->add_option("--k", *k, "Power to compare (default n)");
    sc->callback([&, n, a, b, k]() {
      config = json{{"n", *n}, {"a", *a}, {"b", *b}, {"k", *k}};
      handler = [=]() { return cmd_heisenberg(*n, *a, *b, *k); };
    });
  }

  {
    auto* sc = app.add_subcommand("clifford",
                                  "Isotypic decomposition over a normal subgroup");
    auto group = std::make_shared<std::string>();
    auto rep = std::make_shared<std::string>();
    auto g0 = std::make_shared<std::string>();
    sc->add_option("--group", *group, "Group spec")->required();
    sc->add_option("--rep", *rep, "Representation spec")->required();
    sc->add_option("--g0", *g0, "Normal subgroup selector")->required();
    sc->callback([&, group, rep, g0]() {
      config = json{{"group", *group}, {"rep", *rep}, {"g0", *g0}};
      handler = [=]() { return cmd_clifford(*group, *rep, *g0); };
    });
  }

  {
    auto* sc = app.add_subcommand("asai", "Twisted tensor (pre-Asai) representation");
    auto group = std::make_shared<std::string>();
    auto normal = std::make_shared<std::string>();
    auto rep = std::make_shared<std::string>();
    sc->add_option("--group", *group, "Ambient group spec")->required();
    sc->add_option("--normal", *normal, "Normal subgroup selector")->required();
    sc->add_option("--rep", *rep, "Representation spec on the subgroup")->required();
    sc->callback([&, group, normal, rep]() {
      config = json{{"group", *group}, {"normal", *normal}, {"rep", *rep}, {"seed", g.seed}};
      handler = [=, &g]() { return cmd_asai(*group, *normal, *rep, g.seed); };
    });
  }

  {
    auto* sc = app.add_subcommand("cocycle",
                                  "Cocycle T(s) = rho1(s)^-1 rho2(s) for a matched pair");
    auto group = std::make_shared<std::string>();
    auto rep1 = std::make_shared<std::string>();
    auto rep2 = std::make_shared<std::string>();
    auto sub = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    sc->add_option("--group", *group, "Group spec");
    sc->add_option("--rep1", *rep1, "First representation spec");
    sc->add_option("--rep2", *rep2, "Second representation spec");
    sc->add_option("--subgroup", *sub, "Subgroup the pair agrees on")->required();
    sc->add_option("--input", *input, "JSON file with group and generator images");
    sc->callback([&, group, rep1, rep2, sub, input]() {
      config = json{{"group", *group},
                    {"rep1", *rep1},
                    {"rep2", *rep2},
                    {"subgroup", *sub},
                    {"input", *input}};
      handler = [=]() { return cmd_cocycle(*group, *rep1, *rep2, *sub, *input); };
    });
  }

  {
    auto* sc = app.add_subcommand("density", "Component density and orthogonality audit");
    auto group = std::make_shared<std::string>();
    auto g0 = std::make_shared<std::string>();
    auto rep1 = std::make_shared<std::string>();
    auto rep2 = std::make_shared<std::string>();
    auto samples = std::make_shared<long long>(100000);
    sc->add_option("--group", *group, "Group spec")->required();
    sc->add_option("--g0", *g0, "Identity-component model subgroup")->required();
    sc->add_option("--rep1", *rep1, "First character spec")->required();
    sc->add_option("--rep2", *rep2, "Second character spec")->required();
    sc->add_option("--samples", *samples, "Monte Carlo sample count");
    sc->callback([&, group, g0, rep1, rep2, samples]() {
      config = json{{"group", *group},     {"g0", *g0},       {"rep1", *rep1},
                    {"rep2", *rep2},       {"samples", *samples}, {"seed", g.seed}};
      handler = [=, &g]() {
        return cmd_density(*group, *g0, *rep1, *rep2, *samples, g.seed);
      };
    });
  }

  {
    auto* sc = app.add_subcommand("lattice-saturate", "Torsion closure of a sublattice");
    auto input = std::make_shared<std::string>();
    auto ambient = std::make_shared<int>(0);
    auto basis = std::make_shared<std::string>();
    sc->add_option("--input", *input, "Lattice JSON file");
    sc->add_option("--ambient", *ambient, "Ambient rank for --basis");
    sc->add_option("--basis", *basis, "Rows 'a b c; d e f'");
    sc->callback([&, input, ambient, basis]() {
      config = json{{"input", *input}, {"ambient", *ambient}, {"basis", *basis}};
      handler = [=]() { return cmd_lattice_saturate(*input, *ambient, *basis); };
    });
  }

  {
    auto* sc = app.add_subcommand("lattice-lift",
                                  "Extend a character-lattice map along a free-cokernel inclusion");
    auto input = std::make_shared<std::string>();
    sc->add_option("--input", *input, "JSON with 'restriction' and 'extension' matrices")
        ->required();
    sc->callback([&, input]() {
      config = json{{"input", *input}};
      handler = [=]() { return cmd_lattice_lift(*input); };
    });
  }

  bool selftest_requested = false;
  auto filter = std::make_shared<std::string>();
  auto negctl = std::make_shared<bool>(false);
  {
    auto* sc = app.add_subcommand("selftest", "Run the end-to-end verification suite");
    sc->add_option("--filter", *filter, "Only run criteria whose name contains this");
    sc->add_flag("--negative-control", *negctl,
                 "Append a deliberately corrupted criterion that must fail");
    sc->callback([&, filter, negctl]() {
      selftest_requested = true;
      config = json{{"filter", *filter}, {"negative_control", *negctl}};
    });
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 3;
  }

  std::string command = app.get_subcommands().front()->get_name();
  json report;
  report["command"] = command;
  report["config"] = config;
  report["config"]["seed"] = g.seed;
  report["config"]["format"] = g.format;

  auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;
  try {
    if (selftest_requested) {
      std::ostringstream lines;
      json body = cmd_selftest(*filter, *negctl, g.timing, lines, exit_code);
      report.update(body);
      report["result"]["lines"] = lines.str();
      if (g.format == "text") {
        out << lines.str();
        return exit_code;
      }
    } else {
      report.update(handler());
    }
  } catch (const BadParameters& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    report["error"] = e.name();
    report["message"] = e.what();
    emit(report, g, out);
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  }
  if (g.timing)
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report["all_checks_pass"] = all_checks_pass(report);
  emit(report, g, out);
  return exit_code;
}

}  // namespace repkit::cli
