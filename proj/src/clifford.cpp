#include "repkit/clifford.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "repkit/errors.hpp"

namespace repkit {

namespace {

// chi twisted by conjugation: x -> chi(t^-1 x t), as a class function on the
// normal subgroup (t from the parent).
ClassFunction conj_class_function(const ClassFunction& chi, const Subgroup& n, int t_parent) {
  const GroupPtr& parent = n.parent;
  int tinv = parent->inv(t_parent);
  std::vector<Cyclotomic> vals(n.group->num_classes());
  for (int c = 0; c < n.group->num_classes(); ++c) {
    int x = n.to_parent(n.group->class_rep(c));
    int y = parent->mul(parent->mul(tinv, x), t_parent);
    int ys = n.to_sub(y);
    assert(ys >= 0);
    vals[c] = chi.at_element(ys);
  }
  return ClassFunction(n.group, std::move(vals));
}

std::vector<int> coset_representatives(const Subgroup& n) {
  const GroupPtr& parent = n.parent;
  std::vector<int> coset_of(parent->order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < parent->order(); ++x) {
    if (coset_of[x] >= 0) continue;
    reps.push_back(x);
    for (int i = 0; i < n.order(); ++i) coset_of[parent->mul(x, n.to_parent(i))] = x;
  }
  return reps;
}

}  // namespace

std::vector<int> coset_reps_of(const Subgroup& sub) { return coset_representatives(sub); }

CliffordDecomposition clifford_decompose(const MatrixRep& rho, const Subgroup& normal) {
  if (normal.parent != rho.group()) throw GroupMismatch("subgroup of a different group");
  if (!normal.is_normal()) throw NotNormal("subgroup is not normal");

  ClassFunction chi_n = character(rho.restricted_to(normal));

  CliffordDecomposition dec{normal, {}, {}, {}};
  std::vector<ClassFunction> irr = character_table(normal.group);
  long long dim_sum = 0;
  for (const ClassFunction& eta : irr) {
    Rat m = inner_product(chi_n, eta);
    if (m == 0) continue;
    if (m.get_den() != 1 || m < 0)
      throw std::logic_error("non-integral multiplicity in a restriction");
    long long mult = static_cast<long long>(m.get_num().get_si());
    dec.components.push_back({eta, mult});
    dim_sum += mult * eta.dim();
  }
  if (dim_sum != rho.dim())
    throw std::logic_error("isotypic dimensions do not add up to the restriction");

  dec.coset_reps = coset_representatives(normal);
  const int q = static_cast<int>(dec.coset_reps.size());
  const int nc = static_cast<int>(dec.components.size());
  dec.action.assign(q, std::vector<int>(nc, -1));
  for (int c = 0; c < q; ++c) {
    int t = dec.coset_reps[c];
    // Left action tau(t)(i): the component whose twist by t^-1 is eta_i,
    // i.e. the index of eta_i(t^-1 . t).
    for (int i = 0; i < nc; ++i) {
      ClassFunction twisted = conj_class_function(dec.components[i].character, normal, t);
      int image = -1;
      for (int j = 0; j < nc; ++j)
        if (dec.components[j].character == twisted) {
          image = j;
          break;
        }
      if (image < 0)
        throw std::logic_error("conjugation left the component set");
      if (dec.components[image].multiplicity != dec.components[i].multiplicity)
        throw std::logic_error("conjugation changed a multiplicity");
      dec.action[c][i] = image;
    }
  }

  // The action must be a homomorphism of the coset group.
  const GroupPtr& parent = normal.parent;
  std::vector<int> coset_index(parent->order(), -1);
  for (int c = 0; c < q; ++c)
    for (int i = 0; i < normal.order(); ++i)
      coset_index[parent->mul(dec.coset_reps[c], normal.to_parent(i))] = c;
  for (int c1 = 0; c1 < q; ++c1)
    for (int c2 = 0; c2 < q; ++c2) {
      int c12 = coset_index[parent->mul(dec.coset_reps[c1], dec.coset_reps[c2])];
      for (int i = 0; i < nc; ++i)
        if (dec.action[c12][i] != dec.action[c1][dec.action[c2][i]])
          throw std::logic_error("component action is not a homomorphism");
    }
  return dec;
}

std::vector<std::vector<int>> fixed_sets(const CliffordDecomposition& dec) {
  std::vector<std::vector<int>> out(dec.action.size());
  for (size_t c = 0; c < dec.action.size(); ++c)
    for (size_t i = 0; i < dec.action[c].size(); ++i)
      if (dec.action[c][i] == static_cast<int>(i)) out[c].push_back(static_cast<int>(i));
  return out;
}

MatrixRep induce(const MatrixRep& sub_rep, const Subgroup& sub) {
  if (sub_rep.group() != sub.group) throw GroupMismatch("representation not on the subgroup");
  const GroupPtr& parent = sub.parent;
  std::vector<int> reps = coset_representatives(sub);
  const int k = static_cast<int>(reps.size());
  const int d = sub_rep.dim();
  std::vector<CycMat> images(parent->order());
  for (int g = 0; g < parent->order(); ++g) {
    CycMat m(k * d);
    for (int j = 0; j < k; ++j) {
      int gj = parent->mul(g, reps[j]);
      for (int i = 0; i < k; ++i) {
        int h = parent->mul(parent->inv(reps[i]), gj);
        if (!sub.contains(h)) continue;
        const CycMat& block = sub_rep.image(sub.to_sub(h));
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) m.at(i * d + a, j * d + b) = block.at(a, b);
      }
    }
    images[g] = std::move(m);
  }
  return MatrixRep::from_images(parent, std::move(images), /*verify=*/true);
}

ClassFunction induced_character(const ClassFunction& chi, const Subgroup& sub) {
  if (chi.group() != sub.group) throw GroupMismatch("character not on the subgroup");
  const GroupPtr& parent = sub.parent;
  std::vector<Cyclotomic> vals(parent->num_classes());
  Rat scale(1, static_cast<long>(sub.order()));
  for (int c = 0; c < parent->num_classes(); ++c) {
    Cyclotomic sum;
    int gc = parent->class_rep(c);
    for (int x = 0; x < parent->order(); ++x) {
      int y = parent->conj_elt(parent->inv(x), gc);
      if (sub.contains(y)) sum += chi.at_element(sub.to_sub(y));
    }
    vals[c] = sum * Cyclotomic(scale);
  }
  return ClassFunction(parent, std::move(vals));
}

MatrixRep pre_asai(const MatrixRep& rho, const std::vector<std::vector<int>>& automorphisms) {
  const GroupPtr& n = rho.group();
  if (automorphisms.empty()) throw BadParameters("need at least one automorphism");
  for (const auto& f : automorphisms) {
    if (static_cast<int>(f.size()) != n->order())
      throw NotAutomorphism("automorphism table has the wrong length");
    std::vector<bool> seen(n->order(), false);
    for (int v : f) {
      if (v < 0 || v >= n->order() || seen[v]) throw NotAutomorphism("table is not a bijection");
      seen[v] = true;
    }
    for (int x = 0; x < n->order(); ++x)
      for (int y = 0; y < n->order(); ++y)
        if (f[n->mul(x, y)] != n->mul(f[x], f[y]))
          throw NotAutomorphism("table does not respect products");
  }
  std::vector<CycMat> images(n->order());
  for (int s = 0; s < n->order(); ++s) {
    CycMat acc = rho.image(automorphisms[0][s]);
    for (size_t i = 1; i < automorphisms.size(); ++i)
      acc = CycMat::kron(acc, rho.image(automorphisms[i][s]));
    images[s] = std::move(acc);
  }
  return MatrixRep::from_images(n, std::move(images), /*verify=*/true);
}

std::vector<std::vector<int>> conjugation_automorphisms(const Subgroup& normal,
                                                        const std::vector<int>& lifts) {
  if (!normal.is_normal()) throw NotNormal("subgroup is not normal");
  const GroupPtr& parent = normal.parent;
  std::vector<std::vector<int>> out;
  for (int t : lifts) {
    std::vector<int> f(normal.order());
    for (int i = 0; i < normal.order(); ++i) {
      int y = parent->conj_elt(t, normal.to_parent(i));
      int ys = normal.to_sub(y);
      if (ys < 0) throw NotNormal("conjugation left the subgroup");
      f[i] = ys;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<CycMat> twist_cocycle(const MatrixRep& rho1, const MatrixRep& rho2,
                                  const Subgroup& equal_on) {
  if (rho1.group() != rho2.group()) throw GroupMismatch("cocycle across different groups");
  if (rho1.dim() != rho2.dim()) throw DimMismatch("cocycle across different dimensions");
  if (equal_on.parent != rho1.group()) throw GroupMismatch("subgroup of a different group");
  for (int i = 0; i < equal_on.order(); ++i) {
    int x = equal_on.to_parent(i);
    if (rho1.image(x) != rho2.image(x))
      throw NotEqualOnSubgroup("representations differ on the subgroup");
  }
  const GroupPtr& g = rho1.group();
  std::vector<CycMat> t(g->order());
  for (int s = 0; s < g->order(); ++s) t[s] = rho1.image(g->inv(s)) * rho2.image(s);

  // Cocycle identity, all pairs.
  for (int s = 0; s < g->order(); ++s)
    for (int u = 0; u < g->order(); ++u) {
      CycMat lhs = t[g->mul(s, u)];
      CycMat rhs = rho1.image(g->inv(u)) * t[s] * rho1.image(u) * t[u];
      if (lhs != rhs) throw std::logic_error("cocycle identity failed");
    }
  // Values commute with rho1 on the subgroup.
  for (int s = 0; s < g->order(); ++s)
    for (int i = 0; i < equal_on.order(); ++i)
      if (!t[s].commutes_with(rho1.image(equal_on.to_parent(i))))
        throw std::logic_error("cocycle value escapes the commutant");
  return t;
}

bool invariant_character_check(const ClassFunction& chi, const Subgroup& normal) {
  if (chi.group() != normal.group) throw GroupMismatch("character not on the subgroup");
  if (!normal.is_normal()) throw NotNormal("subgroup is not normal");
  for (int t : coset_representatives(normal))
    if (!(conj_class_function(chi, normal, t) == chi)) return false;
  return true;
}

std::optional<ClassFunction> extend_invariant_character(const ClassFunction& chi,
                                                        const Subgroup& normal) {
  if (!invariant_character_check(chi, normal)) return std::nullopt;
  if (chi.dim() != 1) throw BadParameters("extension construction needs a linear character");
  const GroupPtr& parent = normal.parent;
  Quotient q = quotient_by_normal(parent, normal.elements);
  const int c = q.group->order();
  // Need a cyclic quotient: find a generating coset.
  int tau_coset = -1;
  for (int x = 0; x < c; ++x)
    if (q.group->order_of(x) == c) {
      tau_coset = x;
      break;
    }
  if (tau_coset < 0) return std::nullopt;
  int tau = q.reps[tau_coset];

  // tau^c lands in the subgroup; pick z with z^c = chi(tau^c).
  int s = parent->power(tau, c);
  Cyclotomic vs = chi.at_element(normal.to_sub(s));
  long m = vs.conductor();
  long root_exp = -1;
  for (long j = 0; j < 2 * m; ++j)
    if (Cyclotomic::root_of_unity(2 * m, j) == vs) {
      root_exp = j;
      break;
    }
  if (root_exp < 0) throw std::logic_error("linear character value is not a root of unity");
  Cyclotomic z = Cyclotomic::root_of_unity(2 * m * c, root_exp);

  // Power of tau carrying each coset.
  std::vector<int> coset_power(c, -1);
  {
    int acc = q.group->identity();
    for (int a = 0; a < c; ++a) {
      coset_power[acc] = a;
      acc = q.group->mul(acc, tau_coset);
    }
  }
  std::vector<Cyclotomic> per_element(parent->order());
  for (int x = 0; x < parent->order(); ++x) {
    int a = coset_power[q.coset_of[x]];
    int h = parent->mul(parent->inv(parent->power(tau, a)), x);
    per_element[x] = z.pow(a) * chi.at_element(normal.to_sub(h));
  }
  for (int x = 0; x < parent->order(); ++x)
    for (int y = 0; y < parent->order(); ++y)
      if (per_element[parent->mul(x, y)] != per_element[x] * per_element[y])
        throw std::logic_error("extension is not multiplicative");
  std::vector<Cyclotomic> vals(parent->num_classes());
  for (int cc = 0; cc < parent->num_classes(); ++cc) vals[cc] = per_element[parent->class_rep(cc)];
  ClassFunction out(parent, std::move(vals));
  for (int i = 0; i < normal.order(); ++i)
    if (out.at_element(normal.to_parent(i)) != chi.at_element(i))
      throw std::logic_error("extension does not restrict back");
  return out;
}

}  // namespace repkit
