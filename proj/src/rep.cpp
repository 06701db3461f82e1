#include "repkit/rep.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <set>

#include "repkit/errors.hpp"
#include "repkit/lattice.hpp"

namespace repkit {

CycMat CycMat::identity(int n) {
  CycMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(Rat(1));
  return m;
}

CycMat CycMat::operator*(const CycMat& o) const {
  if (n_ != o.n_) throw DimMismatch("matrix dimension mismatch");
  CycMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Cyclotomic& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

CycMat CycMat::scaled(const Cyclotomic& c) const {
  CycMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!at(i, j).is_zero()) r.at(i, j) = at(i, j) * c;
  return r;
}

Cyclotomic CycMat::trace() const {
  Cyclotomic t;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool CycMat::operator==(const CycMat& o) const {
  if (n_ != o.n_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

CycMat CycMat::kron(const CycMat& a, const CycMat& b) {
  CycMat r(a.n_ * b.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.n_; ++k)
        for (int l = 0; l < b.n_; ++l) {
          if (b.at(k, l).is_zero()) continue;
          r.at(i * b.n_ + k, j * b.n_ + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return r;
}

CycMat CycMat::direct_sum(const CycMat& a, const CycMat& b) {
  CycMat r(a.n_ + b.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.n_; ++i)
    for (int j = 0; j < b.n_; ++j) r.at(a.n_ + i, a.n_ + j) = b.at(i, j);
  return r;
}

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->num_classes())
    throw BadParameters("class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::trivial(const GroupPtr& group) {
  return ClassFunction(group,
                       std::vector<Cyclotomic>(group->num_classes(), Cyclotomic(Rat(1))));
}

long long ClassFunction::dim() const {
  Rat d = at_element(group_->identity()).to_rational();
  if (d.get_den() != 1 || d < 0)
    throw BadParameters("identity value is not a nonnegative integer");
  return static_cast<long long>(d.get_num().get_si());
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (group_ != o.group_) throw GroupMismatch("class functions on different groups");
  std::vector<Cyclotomic> v(values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (group_ != o.group_) throw GroupMismatch("class functions on different groups");
  std::vector<Cyclotomic> v(values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v(values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i].conj();
  return ClassFunction(group_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (group_ != o.group_) return false;
  for (size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != o.values_[i]) return false;
  return true;
}

ClassFunction ClassFunction::restrict_to(const Subgroup& s) const {
  if (s.parent != group_) throw GroupMismatch("subgroup of a different group");
  std::vector<Cyclotomic> v(s.group->num_classes());
  for (int c = 0; c < s.group->num_classes(); ++c)
    v[c] = at_element(s.to_parent(s.group->class_rep(c)));
  return ClassFunction(s.group, std::move(v));
}

namespace {

void verify_generator_pairs(const GroupPtr& g, const std::vector<int>& gens,
                            const std::vector<CycMat>& images) {
  // Certifying rho(x * s) == rho(x) rho(s) for every element x and
  // generator s proves multiplicativity on all pairs by induction on word
  // length.
  for (int x = 0; x < g->order(); ++x)
    for (int s : gens)
      if (images[g->mul(x, s)] != images[x] * images[s])
        throw BadParameters("images do not define a homomorphism");
}

}  // namespace

MatrixRep MatrixRep::from_generator_images(GroupPtr group, const std::vector<int>& gens,
                                           const std::vector<CycMat>& gen_images) {
  if (gens.size() != gen_images.size())
    throw BadParameters("generator and image counts differ");
  int dim = gens.empty() ? 1 : gen_images[0].dim();
  for (const CycMat& m : gen_images)
    if (m.dim() != dim) throw BadParameters("generator images have mixed dimensions");

  const int n = group->order();
  std::vector<CycMat> images(n);
  std::vector<bool> known(n, false);
  images[group->identity()] = CycMat::identity(dim);
  known[group->identity()] = true;
  std::queue<int> bfs;
  bfs.push(group->identity());
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = group->mul(x, gens[i]);
      if (known[y]) continue;
      images[y] = images[x] * gen_images[i];
      known[y] = true;
      bfs.push(y);
    }
  }
  for (bool k : known)
    if (!k) throw BadParameters("generators do not generate the group");
  verify_generator_pairs(group, gens, images);
  return MatrixRep(std::move(group), dim, std::move(images));
}

MatrixRep MatrixRep::from_images(GroupPtr group, std::vector<CycMat> images, bool verify) {
  if (static_cast<int>(images.size()) != group->order())
    throw BadParameters("need one image per group element");
  int dim = images[0].dim();
  for (const CycMat& m : images)
    if (m.dim() != dim) throw BadParameters("images have mixed dimensions");
  if (images[group->identity()] != CycMat::identity(dim))
    throw BadParameters("identity image is not the identity matrix");
  if (verify) verify_generator_pairs(group, group->generators(), images);
  return MatrixRep(std::move(group), dim, std::move(images));
}

MatrixRep MatrixRep::trivial(const GroupPtr& group) {
  return MatrixRep(group, 1, std::vector<CycMat>(group->order(), CycMat::identity(1)));
}

MatrixRep MatrixRep::regular(const GroupPtr& group) {
  const int n = group->order();
  if (n > 64) throw BadParameters("regular representation capped at order 64");
  std::vector<CycMat> images(n, CycMat(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) images[g].at(group->mul(g, x), x) = Cyclotomic(Rat(1));
  return MatrixRep(group, n, std::move(images));
}

MatrixRep MatrixRep::from_linear(const ClassFunction& chi) {
  const GroupPtr& g = chi.group();
  std::vector<CycMat> images(g->order(), CycMat(1));
  for (int x = 0; x < g->order(); ++x) images[x].at(0, 0) = chi.at_element(x);
  return from_images(g, std::move(images), /*verify=*/true);
}

MatrixRep MatrixRep::tensor_with_linear(const ClassFunction& chi) const {
  if (chi.group() != group_) throw GroupMismatch("twisting character on a different group");
  std::vector<CycMat> images(group_->order());
  for (int g = 0; g < group_->order(); ++g) images[g] = images_[g].scaled(chi.at_element(g));
  return MatrixRep(group_, dim_, std::move(images));
}

MatrixRep MatrixRep::conjugated_by(int h) const {
  std::vector<CycMat> images(group_->order());
  for (int g = 0; g < group_->order(); ++g) images[g] = images_[group_->conj_elt(h, g)];
  return MatrixRep(group_, dim_, std::move(images));
}

MatrixRep MatrixRep::restricted_to(const Subgroup& s) const {
  if (s.parent != group_) throw GroupMismatch("subgroup of a different group");
  std::vector<CycMat> images(s.order());
  for (int i = 0; i < s.order(); ++i) images[i] = images_[s.to_parent(i)];
  return MatrixRep(s.group, dim_, std::move(images));
}

MatrixRep MatrixRep::direct_sum(const MatrixRep& a, const MatrixRep& b) {
  if (a.group_ != b.group_) throw GroupMismatch("direct sum across different groups");
  std::vector<CycMat> images(a.group_->order());
  for (int g = 0; g < a.group_->order(); ++g)
    images[g] = CycMat::direct_sum(a.images_[g], b.images_[g]);
  return MatrixRep(a.group_, a.dim_ + b.dim_, std::move(images));
}

MatrixRep MatrixRep::kron(const MatrixRep& a, const MatrixRep& b) {
  if (a.group_ != b.group_) throw GroupMismatch("tensor product across different groups");
  std::vector<CycMat> images(a.group_->order());
  for (int g = 0; g < a.group_->order(); ++g)
    images[g] = CycMat::kron(a.images_[g], b.images_[g]);
  return MatrixRep(a.group_, a.dim_ * b.dim_, std::move(images));
}

ClassFunction character(const MatrixRep& rep) {
  const GroupPtr& g = rep.group();
  std::vector<Cyclotomic> v(g->num_classes());
  for (int c = 0; c < g->num_classes(); ++c) v[c] = rep.image(g->class_rep(c)).trace();
  ClassFunction chi(g, std::move(v));
  assert(chi.dim() == rep.dim());
  return chi;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& h) {
  if (f.group() != h.group()) throw GroupMismatch("inner product across different groups");
  const GroupPtr& g = f.group();
  Cyclotomic sum;
  for (int c = 0; c < g->num_classes(); ++c) {
    Cyclotomic term = f.at_class(c) * h.at_class(c).conj();
    sum += term * Cyclotomic(Rat(static_cast<long>(g->classes()[c].size())));
  }
  Rat result = sum.to_rational();  // NonRationalResult on non-character data
  return result / Rat(static_cast<long>(g->order()));
}

bool kth_power_equal(const ClassFunction& chi1, const ClassFunction& chi2, long long k) {
  if (chi1.group() != chi2.group()) throw GroupMismatch("characters on different groups");
  if (k < 1) throw BadParameters("k must be positive");
  for (int c = 0; c < chi1.group()->num_classes(); ++c)
    if (chi1.at_class(c).pow(k) != chi2.at_class(c).pow(k)) return false;
  return true;
}

std::optional<long> kth_root_ratio_witness(const Cyclotomic& v1, const Cyclotomic& v2,
                                           long long k) {
  if (v1.is_zero() || v2.is_zero()) return std::nullopt;
  for (long j = 0; j < k; ++j)
    if (v1 * Cyclotomic::root_of_unity(static_cast<long>(k), j) == v2) return j;
  return std::nullopt;
}

std::vector<ClassFunction> linear_characters(const GroupPtr& group) {
  Quotient q = quotient_by_normal(group, group->derived_elements());
  const GroupPtr& a = q.group;  // abelianization
  const int m = a->order();

  // Greedy generating set of the abelian quotient.
  std::vector<int> gens;
  std::vector<int> cl = a->closure({});
  std::set<int> have(cl.begin(), cl.end());
  for (int x = 0; x < m; ++x) {
    if (have.count(x)) continue;
    gens.push_back(x);
    cl = a->closure(gens);
    have = std::set<int>(cl.begin(), cl.end());
    if (static_cast<int>(have.size()) == m) break;
  }
  const int t = static_cast<int>(gens.size());

  if (t == 0) {
    // Perfect group: only the trivial character.
    return {ClassFunction::trivial(group)};
  }

  // Expression of every quotient element as a word in the generators.
  std::vector<std::vector<long long>> expr(m);
  std::vector<bool> known(m, false);
  expr[a->identity()].assign(t, 0);
  known[a->identity()] = true;
  std::queue<int> bfs;
  bfs.push(a->identity());
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (int i = 0; i < t; ++i) {
      int y = a->mul(x, gens[i]);
      if (known[y]) continue;
      expr[y] = expr[x];
      expr[y][i] += 1;
      known[y] = true;
      bfs.push(y);
    }
  }

  // Relation lattice of the presentation ZZ^t -> quotient.
  std::vector<std::vector<Int>> rel_rows;
  for (int i = 0; i < t; ++i) {
    std::vector<Int> row(t, 0);
    row[i] = a->order_of(gens[i]);
    rel_rows.push_back(std::move(row));
  }
  {
    // All residues of the box prod [0, ord_i) that map to the identity.
    std::vector<long long> idxv(t, 0);
    for (;;) {
      int x = a->identity();
      for (int i = 0; i < t; ++i) x = a->mul(x, a->power(gens[i], idxv[i]));
      if (x == a->identity()) {
        std::vector<Int> row(t);
        bool nonzero = false;
        for (int i = 0; i < t; ++i) {
          row[i] = static_cast<long>(idxv[i]);
          nonzero = nonzero || idxv[i] != 0;
        }
        if (nonzero) rel_rows.push_back(std::move(row));
      }
      int i = 0;
      for (; i < t; ++i) {
        if (++idxv[i] < a->order_of(gens[i])) break;
        idxv[i] = 0;
      }
      if (i == t) break;
    }
  }
  // The relation lattice is spanned by the rows collected above; transpose
  // so its vectors sit in the columns, then ZZ^t / relations decomposes as
  // the sum of ZZ/d_i via n -> (left * n) mod d.
  SnfDecomposition s = snf_full(hnf_rows(IntMat::from_rows(rel_rows)).transpose());
  std::vector<long long> d(t);
  Int check = 1;
  for (int i = 0; i < t; ++i) {
    d[i] = s.diag[i].get_si();
    check *= s.diag[i];
  }
  if (check != m) throw std::logic_error("abelian invriant factors do not multiply to the order");

  long cond = 1;
  for (int i = 0; i < t; ++i) cond = std::lcm(cond, std::max(1LL, d[i]));

  // Coordinates of each quotient element in the invariant-factor basis.
  std::vector<std::vector<long long>> coord(m, std::vector<long long>(t));
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < t; ++i) {
      long long acc = 0;
      for (int j = 0; j < t; ++j) acc += s.left.at(i, j).get_si() * expr[x][j];
      coord[x][i] = ((acc % d[i]) + d[i]) % d[i];
    }

  std::vector<ClassFunction> out;
  std::vector<long long> kv(t, 0);
  for (;;) {
    std::vector<Cyclotomic> vals(group->num_classes());
    for (int c = 0; c < group->num_classes(); ++c) {
      int xq = q.coset_of[group->class_rep(c)];
      long e = 0;
      for (int i = 0; i < t; ++i)
        if (d[i] > 1) e = (e + (cond / d[i]) * kv[i] % cond * (coord[xq][i] % d[i])) % cond;
      vals[c] = Cyclotomic::root_of_unity(cond, e);
    }
    out.emplace_back(group, std::move(vals));
    int i = 0;
    for (; i < t; ++i) {
      if (++kv[i] < d[i]) break;
      kv[i] = 0;
    }
    if (i == t) break;
  }
  return out;
}

std::optional<ClassFunction> twist_search(const MatrixRep& rho1, const MatrixRep& rho2) {
  if (rho1.group() != rho2.group()) throw GroupMismatch("twist search across different groups");
  if (rho1.dim() != rho2.dim()) throw DimMismatch("twist search across different dimensions");
  ClassFunction chi1 = character(rho1), chi2 = character(rho2);
  for (const ClassFunction& eta : linear_characters(rho1.group()))
    if (chi1 * eta == chi2) return eta;
  return std::nullopt;
}

long long commutant_dimension(const MatrixRep& rep) {
  const int d = rep.dim();
  const std::vector<int>& gens = rep.group()->generators();
  // Unknown X with rho(g) X - X rho(g) = 0; row-reduce the stacked system.
  std::vector<std::vector<Cyclotomic>> rows;
  for (int s : gens) {
    const CycMat& a = rep.image(s);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<Cyclotomic> row(static_cast<size_t>(d) * d);
        for (int k = 0; k < d; ++k) {
          row[static_cast<size_t>(k) * d + j] += a.at(i, k);
          row[static_cast<size_t>(i) * d + k] = row[static_cast<size_t>(i) * d + k] - a.at(k, j);
        }
        rows.push_back(std::move(row));
      }
  }
  // Gaussian elimination over the cyclotomic field.
  const size_t ncols = static_cast<size_t>(d) * d;
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t pivot = rows.size();
    for (size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Cyclotomic inv = rows[rank][col].inverse();
    for (size_t c = col; c < ncols; ++c) rows[rank][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Cyclotomic f = rows[r][col];
      for (size_t c = col; c < ncols; ++c)
        rows[r][c] = rows[r][c] - f * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<long long>(ncols - rank);
}

MatrixRep heisenberg_rep(const GroupPtr& g, int a) {
  if (g->name().rfind("heisenberg:", 0) != 0)
    throw BadParameters("needs a heisenberg preset group");
  int n = std::stoi(g->name().substr(11));
  a = ((a % n) + n) % n;
  if (std::gcd(n, a) != 1) throw BadParameters("heisenberg parameter a must be coprime to n");
  // Closed-form image of A^x B^y C^z: basis vector e_i maps to
  // zeta^{a(z + x * ((i + y) mod n))} e_{i+y}, indices mod n.
  std::vector<CycMat> images(g->order(), CycMat(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        CycMat& m = images[x + n * y + n * n * z];
        for (int i = 0; i < n; ++i) {
          int row = (i + y) % n;
          long e = static_cast<long>(a) * (z + x * row) % n;
          m.at(row, i) = Cyclotomic::root_of_unity(n, e);
        }
      }
  return MatrixRep::from_images(g, std::move(images), /*verify=*/true);
}

MatrixRep heisenberg_rep(int n, int a) {
  return heisenberg_rep(FiniteGroup::heisenberg(n), a);
}

MatrixRep symmetric_standard_rep(const GroupPtr& sym) {
  const auto& perms = sym->perms();
  if (perms.empty()) throw BadParameters("standard representation needs a symmetric preset");
  const int n = static_cast<int>(perms[0].size());
  if (n < 2) throw BadParameters("standard representation needs n >= 2");
  // Basis f_i = e_i - e_{i+1}; sigma(f_i) = e_{sigma(i)} - e_{sigma(i+1)}
  // expands as a telescoping sum of f_j.
  std::vector<CycMat> images(sym->order(), CycMat(n - 1));
  for (int g = 0; g < sym->order(); ++g) {
    for (int i = 0; i + 1 < n; ++i) {
      int a = perms[g][i], b = perms[g][i + 1];
      int sign = 1;
      if (a > b) {
        std::swap(a, b);
        sign = -1;
      }
      for (int j = a; j < b; ++j)
        images[g].at(j, i) = Cyclotomic(Rat(sign));
    }
  }
  return MatrixRep::from_images(sym, std::move(images), /*verify=*/true);
}

MatrixRep symmetric_permutation_rep(const GroupPtr& sym) {
  const auto& perms = sym->perms();
  if (perms.empty()) throw BadParameters("permutation representation needs a symmetric preset");
  const int n = static_cast<int>(perms[0].size());
  std::vector<CycMat> images(sym->order(), CycMat(n));
  for (int g = 0; g < sym->order(); ++g)
    for (int i = 0; i < n; ++i) images[g].at(perms[g][i], i) = Cyclotomic(Rat(1));
  return MatrixRep::from_images(sym, std::move(images), /*verify=*/true);
}

ClassFunction symmetric_sign_character(const GroupPtr& sym) {
  const auto& perms = sym->perms();
  if (perms.empty()) throw BadParameters("sign character needs a symmetric preset");
  std::vector<Cyclotomic> vals(sym->num_classes());
  for (int c = 0; c < sym->num_classes(); ++c) {
    const auto& p = perms[sym->class_rep(c)];
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    vals[c] = Cyclotomic(Rat(inversions % 2 == 0 ? 1 : -1));
  }
  return ClassFunction(sym, std::move(vals));
}

MatrixRep dihedral_plane_rep(const GroupPtr& dih) {
  const int n = dih->order() / 2;
  if (dih->name().rfind("dihedral:", 0) != 0)
    throw BadParameters("plane representation needs a dihedral preset");
  std::vector<CycMat> images(dih->order(), CycMat(2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j) {
      CycMat& m = images[i + n * j];
      if (j == 0) {
        m.at(0, 0) = Cyclotomic::root_of_unity(n, i);
        m.at(1, 1) = Cyclotomic::root_of_unity(n, n - i);
      } else {
        m.at(0, 1) = Cyclotomic::root_of_unity(n, i);
        m.at(1, 0) = Cyclotomic::root_of_unity(n, n - i);
      }
    }
  return MatrixRep::from_images(dih, std::move(images), /*verify=*/true);
}

MatrixRep quaternion_plane_rep(const GroupPtr& q8) {
  if (q8->name() != "quaternion:8") throw BadParameters("needs the quaternion preset");
  Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic one(Rat(1));
  CycMat mi(2), mj(2);
  mi.at(0, 0) = i4;
  mi.at(1, 1) = -i4;
  mj.at(0, 1) = one;
  mj.at(1, 0) = -one;
  return MatrixRep::from_generator_images(q8, q8->generators(), {mi, mj});
}

}  // namespace repkit
