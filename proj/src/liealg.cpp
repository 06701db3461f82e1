#include "repkit/liealg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "repkit/errors.hpp"

namespace repkit::liealg {

const AlgebraData& AlgebraData::get(const std::string& name) {
  static const AlgebraData a1{"A1", 1, {{2}}, {{1}}, {{2}}, {1}, {{1}}};
  static const AlgebraData a2{"A2",
                              2,
                              {{1, -1}, {1, 2}},
                              {{1, 0}, {1, 1}},
                              {{1, -1}, {1, 2}, {2, 1}},
                              {2, 1},
                              {{2, -1}, {-1, 2}}};
  static const AlgebraData c2{"C2",
                              2,
                              {{1, -1}, {0, 2}},
                              {{1, 0}, {1, 1}},
                              {{1, -1}, {0, 2}, {1, 1}, {2, 0}},
                              {2, 1},
                              {{1, 0}, {0, 1}}};
  if (name == "A1") return a1;
  if (name == "A2") return a2;
  if (name == "C2") return c2;
  throw BadParameters("unknown algebra '" + name + "' (expected A1, A2 or C2)");
}

long long bilinear(const AlgebraData& alg, const WVec& u, const WVec& v) {
  long long s = 0;
  for (int i = 0; i < alg.rank; ++i)
    for (int j = 0; j < alg.rank; ++j) s += u[i] * alg.form[i][j] * v[j];
  return s;
}

long long cartan_pairing(const AlgebraData& alg, const WVec& mu, int i) {
  long long num = 2 * bilinear(alg, mu, alg.simple_roots[i]);
  long long den = bilinear(alg, alg.simple_roots[i], alg.simple_roots[i]);
  assert(num % den == 0);
  return num / den;
}

bool is_dominant(const AlgebraData& alg, const WVec& mu) {
  for (int i = 0; i < alg.rank; ++i)
    if (cartan_pairing(alg, mu, i) < 0) return false;
  return true;
}

WVec reflect(const AlgebraData& alg, const WVec& mu, int i) {
  long long c = cartan_pairing(alg, mu, i);
  WVec r = mu;
  for (int j = 0; j < alg.rank; ++j) r[j] -= c * alg.simple_roots[i][j];
  return r;
}

WVec dominant_conjugate(const AlgebraData& alg, const WVec& mu) {
  WVec v = mu;
  for (int guard = 0; guard < 100000; ++guard) {
    int neg = -1;
    for (int i = 0; i < alg.rank; ++i)
      if (cartan_pairing(alg, v, i) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    v = reflect(alg, v, neg);
  }
  throw std::logic_error("dominant_conjugate did not terminate");
}

WVec to_lattice(const AlgebraData& alg, const HighestWeight& hw) {
  if (static_cast<int>(hw.coeffs.size()) != alg.rank)
    throw BadParameters("highest weight rank mismatch");
  WVec v(alg.rank, 0);
  for (int i = 0; i < alg.rank; ++i)
    for (int j = 0; j < alg.rank; ++j) v[j] += hw.coeffs[i] * alg.fundamental_weights[i][j];
  return v;
}

HighestWeight from_lattice(const AlgebraData& alg, const WVec& mu) {
  HighestWeight hw;
  hw.coeffs.resize(alg.rank);
  for (int i = 0; i < alg.rank; ++i) hw.coeffs[i] = cartan_pairing(alg, mu, i);
  return hw;
}

HighestWeight dual_weight(const AlgebraData& alg, const HighestWeight& hw) {
  WVec neg = to_lattice(alg, hw);
  for (auto& c : neg) c = -c;
  return from_lattice(alg, dominant_conjugate(alg, neg));
}

namespace {

void require_dominant(const AlgebraData& alg, const HighestWeight& hw) {
  for (long long c : hw.coeffs)
    if (c < 0) throw BadParameters("highest weight must be dominant");
  if (static_cast<int>(hw.coeffs.size()) != alg.rank)
    throw BadParameters("highest weight rank mismatch");
}

// Expresses v (in the root lattice) in simple-root coordinates.
std::vector<long long> root_coords(const AlgebraData& alg, const WVec& v) {
  // Solve S * n = v where the columns of S are the simple roots.
  const int r = alg.rank;
  if (r == 1) {
    long long a = alg.simple_roots[0][0];
    if (v[0] % a != 0) throw std::logic_error("vector not in root lattice");
    return {v[0] / a};
  }
  long long s00 = alg.simple_roots[0][0], s01 = alg.simple_roots[1][0];
  long long s10 = alg.simple_roots[0][1], s11 = alg.simple_roots[1][1];
  long long det = s00 * s11 - s01 * s10;
  long long n0 = v[0] * s11 - v[1] * s01;
  long long n1 = -v[0] * s10 + v[1] * s00;
  if (n0 % det != 0 || n1 % det != 0) throw std::logic_error("vector not in root lattice");
  return {n0 / det, n1 / det};
}

}  // namespace

long long weyl_dim(const AlgebraData& alg, const HighestWeight& hw) {
  require_dominant(alg, hw);
  WVec lam = to_lattice(alg, hw);
  WVec lam_rho(alg.rank);
  for (int j = 0; j < alg.rank; ++j) lam_rho[j] = lam[j] + alg.weyl_vector[j];
  long long num = 1, den = 1;
  for (const WVec& a : alg.positive_roots) {
    num *= bilinear(alg, lam_rho, a);
    den *= bilinear(alg, alg.weyl_vector, a);
  }
  assert(num % den == 0);
  return num / den;
}

WeightMultiset irr_weights(const AlgebraData& alg, const HighestWeight& hw, long long dim_cap) {
  require_dominant(alg, hw);
  long long d = weyl_dim(alg, hw);
  if (d > dim_cap)
    throw DimensionOverflow("module dimension " + std::to_string(d) + " exceeds cap " +
                            std::to_string(dim_cap));

  WVec lam = to_lattice(alg, hw);
  WVec low(alg.rank);
  {
    WVec neg = lam;
    for (auto& c : neg) c = -c;
    WVec dualw = dominant_conjugate(alg, neg);
    for (int j = 0; j < alg.rank; ++j) low[j] = -dualw[j];
  }
  WVec span(alg.rank);
  for (int j = 0; j < alg.rank; ++j) span[j] = lam[j] - low[j];
  std::vector<long long> box = root_coords(alg, span);
  for (long long b : box) assert(b >= 0);

  // Candidates mu = lam - n1*a1 - n2*a2 whose dominant conjugate lies under
  // lam; that set is exactly the weight support of the module.
  struct Cand {
    long long height;
    WVec mu;
  };
  std::vector<Cand> cands;
  std::vector<long long> n(alg.rank, 0);
  auto emit = [&](const std::vector<long long>& ns) {
    WVec mu = lam;
    long long h = 0;
    for (int i = 0; i < alg.rank; ++i) {
      h += ns[i];
      for (int j = 0; j < alg.rank; ++j) mu[j] -= ns[i] * alg.simple_roots[i][j];
    }
    WVec dc = dominant_conjugate(alg, mu);
    WVec diff(alg.rank);
    for (int j = 0; j < alg.rank; ++j) diff[j] = lam[j] - dc[j];
    std::vector<long long> rc;
    try {
      rc = root_coords(alg, diff);
    } catch (const std::logic_error&) {
      return;
    }
    for (long long c : rc)
      if (c < 0) return;
    cands.push_back({h, mu});
  };
  if (alg.rank == 1) {
    for (n[0] = 0; n[0] <= box[0]; ++n[0]) emit(n);
  } else {
    for (n[0] = 0; n[0] <= box[0]; ++n[0])
      for (n[1] = 0; n[1] <= box[1]; ++n[1]) emit(n);
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.height != b.height ? a.height < b.height : a.mu < b.mu;
  });

  std::map<WVec, long long> mult;
  std::set<WVec> support;
  for (const Cand& c : cands) support.insert(c.mu);

  WVec lam_rho(alg.rank);
  for (int j = 0; j < alg.rank; ++j) lam_rho[j] = lam[j] + alg.weyl_vector[j];
  long long lam_norm = bilinear(alg, lam_rho, lam_rho);

  for (const Cand& c : cands) {
    if (c.mu == lam) {
      mult[c.mu] = 1;
      continue;
    }
    if (!is_dominant(alg, c.mu)) {
      WVec dc = dominant_conjugate(alg, c.mu);
      auto it = mult.find(dc);
      assert(it != mult.end());
      mult[c.mu] = it->second;
      continue;
    }
    // Freudenthal recursion.
    long long num = 0;
    for (const WVec& a : alg.positive_roots) {
      for (long long t = 1;; ++t) {
        WVec nu(alg.rank);
        for (int j = 0; j < alg.rank; ++j) nu[j] = c.mu[j] + t * a[j];
        if (!support.count(nu)) break;
        auto it = mult.find(nu);
        assert(it != mult.end());
        num += it->second * bilinear(alg, nu, a);
      }
    }
    WVec mu_rho(alg.rank);
    for (int j = 0; j < alg.rank; ++j) mu_rho[j] = c.mu[j] + alg.weyl_vector[j];
    long long den = lam_norm - bilinear(alg, mu_rho, mu_rho);
    assert(den > 0 && (2 * num) % den == 0);
    mult[c.mu] = 2 * num / den;
  }

  WeightMultiset out(alg.rank);
  for (const auto& [mu, m] : mult) out.add(mu, m);
  return out;
}

std::vector<HighestWeight> tensor_decompose(const AlgebraData& alg, const HighestWeight& h1,
                                            const HighestWeight& h2, long long product_cap) {
  require_dominant(alg, h1);
  require_dominant(alg, h2);
  long long d1 = weyl_dim(alg, h1), d2 = weyl_dim(alg, h2);
  if (d1 * d2 > product_cap)
    throw DimensionOverflow("product dimension " + std::to_string(d1 * d2) + " exceeds cap " +
                            std::to_string(product_cap));
  WeightMultiset w =
      weights::pairwise_sum(irr_weights(alg, h1, product_cap), irr_weights(alg, h2, product_cap));
  std::vector<HighestWeight> out;
  while (!w.empty()) {
    const WVec& top = w.lex_max();
    if (!is_dominant(alg, top))
      throw std::logic_error("running lex-max is not dominant: extraction is inconsistent");
    long long c = w.multiplicity(top);
    HighestWeight hw = from_lattice(alg, top);
    for (long long i = 0; i < c; ++i) out.push_back(hw);
    WeightMultiset block(alg.rank);
    WeightMultiset irr = irr_weights(alg, hw, product_cap);
    for (const auto& [mu, m] : irr.entries()) block.add(mu, m * c);
    w = weights::subtract(w, block);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string multiset_key(const WeightMultiset& w) {
  std::ostringstream os;
  for (const auto& [v, m] : w.entries()) {
    os << m << ':';
    for (long long c : v) os << c << ',';
    os << ';';
  }
  return os.str();
}

std::vector<HighestWeight> dominant_box(const AlgebraData& alg, long long bound,
                                        bool include_trivial) {
  std::vector<HighestWeight> out;
  if (alg.rank == 1) {
    for (long long a = 0; a <= bound; ++a) out.push_back({{a}});
  } else {
    for (long long a = 0; a <= bound; ++a)
      for (long long b = 0; b <= bound; ++b) out.push_back({{a, b}});
  }
  if (!include_trivial)
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const HighestWeight& h) { return h.is_trivial(); }),
              out.end());
  return out;
}

FactorizationReport factorization_impl(const AlgebraData& alg, long long bound,
                                       long long max_factors, long long product_cap,
                                       bool parallel) {
  if (bound < 0 || max_factors < 1) throw BadParameters("bad factorization sweep bounds");
  std::vector<HighestWeight> factors = dominant_box(alg, bound, /*include_trivial=*/false);

  // Unordered tuples of 1..max_factors nontrivial factors.
  std::vector<FactorTuple> tuples;
  std::vector<HighestWeight> cur;
  auto rec = [&](auto&& self, size_t start, long long remaining) -> void {
    if (!cur.empty()) tuples.push_back({cur});
    if (remaining == 0) return;
    for (size_t i = start; i < factors.size(); ++i) {
      cur.push_back(factors[i]);
      self(self, i, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, max_factors);

  // Dimension cap applies to every tuple in range.
  for (const FactorTuple& t : tuples) {
    long long d = 1;
    for (const HighestWeight& h : t.factors) {
      d *= weyl_dim(alg, h);
      if (d > product_cap)
        throw DimensionOverflow("tuple dimension exceeds cap " + std::to_string(product_cap));
    }
  }

  const int nt = static_cast<int>(tuples.size());
  std::vector<std::string> keys(nt);

  // Embarrassingly parallel over tuples; the merge below is a sequential
  // grouping pass, so results do not depend on the schedule.
  std::map<std::string, WeightMultiset> factor_cache;
  for (const HighestWeight& h : factors) {
    std::ostringstream os;
    for (long long c : h.coeffs) os << c << ',';
    factor_cache.emplace(os.str(), irr_weights(alg, h, product_cap));
  }
  auto tuple_key = [&](int idx) {
    const FactorTuple& t = tuples[idx];
    std::ostringstream os;
    for (long long c : t.factors[0].coeffs) os << c << ',';
    WeightMultiset w = factor_cache.at(os.str());
    for (size_t i = 1; i < t.factors.size(); ++i) {
      std::ostringstream os2;
      for (long long c : t.factors[i].coeffs) os2 << c << ',';
      w = weights::pairwise_sum(w, factor_cache.at(os2.str()));
    }
    return multiset_key(w);
  };

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nt; ++i) keys[i] = tuple_key(i);
  } else {
    for (int i = 0; i < nt; ++i) keys[i] = tuple_key(i);
  }
#else
  (void)parallel;
  for (int i = 0; i < nt; ++i) keys[i] = tuple_key(i);
#endif

  std::map<std::string, std::vector<int>> groups;
  for (int i = 0; i < nt; ++i) groups[keys[i]].push_back(i);

  FactorizationReport report;
  report.algebra = alg.name;
  report.bound = bound;
  report.max_factors = max_factors;
  report.tuples_checked = nt;
  report.pairs_checked = static_cast<long long>(nt) * (nt - 1) / 2;
  for (const auto& [key, idxs] : groups) {
    for (size_t a = 0; a < idxs.size(); ++a)
      for (size_t b = a + 1; b < idxs.size(); ++b)
        report.counterexamples.emplace_back(tuples[idxs[a]], tuples[idxs[b]]);
  }
  return report;
}

}  // namespace

FactorizationReport check_unique_factorization(const AlgebraData& alg, long long bound,
                                               long long max_factors, long long product_cap,
                                               bool parallel) {
  return factorization_impl(alg, bound, max_factors, product_cap, parallel);
}

FactorizationReport check_unique_factorization_serial(const AlgebraData& alg, long long bound,
                                                      long long max_factors,
                                                      long long product_cap) {
  return factorization_impl(alg, bound, max_factors, product_cap, /*parallel=*/false);
}

std::vector<HighestWeight> adjoint_fibre(const AlgebraData& alg, const HighestWeight& hw,
                                         long long bound, long long product_cap) {
  require_dominant(alg, hw);
  WeightMultiset target = weights::adjoint(irr_weights(alg, hw, product_cap));
  std::vector<HighestWeight> out;
  for (const HighestWeight& cand : dominant_box(alg, bound, /*include_trivial=*/true)) {
    long long d = weyl_dim(alg, cand);
    if (d * d > product_cap)
      throw DimensionOverflow("adjoint fibre candidate exceeds cap");
    if (weights::multiset_equal(weights::adjoint(irr_weights(alg, cand, product_cap)), target))
      out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdjointCounterexampleReport product_group_adjoint_counterexample() {
  const AlgebraData& a2 = AlgebraData::get("A2");
  WeightMultiset std3 = irr_weights(a2, {{1, 0}});
  WeightMultiset std3_dual = weights::dual(std3);
  WeightMultiset v = weights::box_product(std3, std3);
  WeightMultiset w = weights::box_product(std3, std3_dual);
  AdjointCounterexampleReport r;
  r.adjoints_equal = weights::multiset_equal(weights::adjoint(v), weights::adjoint(w));
  r.v_isomorphic_w = weights::multiset_equal(v, w);
  r.v_isomorphic_w_dual = weights::multiset_equal(v, weights::dual(w));
  return r;
}

}  // namespace repkit::liealg
