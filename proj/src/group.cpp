#include "repkit/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "repkit/errors.hpp"

namespace repkit {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

void FiniteGroup::finalize() {
  n_ = static_cast<int>(table_.size());
  if (n_ == 0 || n_ > kMaxOrder)
    throw BadParameters("group order must lie in [1, " + std::to_string(kMaxOrder) + "]");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_) throw BadParameters("multiplication table is ragged");
    for (int x : row)
      if (x < 0 || x >= n_) throw BadParameters("table entry out of range");
  }
  // Latin square property.
  for (int i = 0; i < n_; ++i) {
    std::vector<bool> seen_row(n_, false), seen_col(n_, false);
    for (int j = 0; j < n_; ++j) {
      if (seen_row[table_[i][j]]) throw BadParameters("table row is not a permutation");
      seen_row[table_[i][j]] = true;
      if (seen_col[table_[j][i]]) throw BadParameters("table column is not a permutation");
      seen_col[table_[j][i]] = true;
    }
  }
  // Identity.
  e_ = -1;
  for (int i = 0; i < n_ && e_ < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n_ && ok; ++j) ok = table_[i][j] == j && table_[j][i] == j;
    if (ok) e_ = i;
  }
  if (e_ < 0) throw BadParameters("table has no identity element");
  // Associativity: exhaustive for small orders, seeded random spot checks
  // above that.
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw BadParameters("table is not associative");
  } else {
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int t = 0; t < 20000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
        throw BadParameters("table is not associative");
    }
  }
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] == e_) inv_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0) throw BadParameters("element without inverse");

  elt_order_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != e_) {
      x = table_[x][a];
      ++k;
    }
    elt_order_[a] = k;
  }

  class_of_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    if (class_of_[a] >= 0) continue;
    int c = static_cast<int>(classes_.size());
    std::set<int> orbit;
    for (int g = 0; g < n_; ++g) orbit.insert(conj_elt(g, a));
    classes_.emplace_back(orbit.begin(), orbit.end());
    for (int x : classes_.back()) class_of_[x] = c;
  }
  // Classes sorted by smallest element; identity class first.
  std::sort(classes_.begin(), classes_.end());
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    for (int x : classes_[c]) class_of_[x] = c;

  for (int z = 0; z < n_; ++z) {
    bool central = true;
    for (int g = 0; g < n_ && central; ++g) central = table_[z][g] == table_[g][z];
    if (central) center_.push_back(z);
  }

  std::vector<int> comms;
  std::set<int> seen;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int c = mul(mul(inv_[a], inv_[b]), mul(a, b));
      if (seen.insert(c).second) comms.push_back(c);
    }
  derived_ = closure(comms);

  if (gens_.empty()) {
    std::vector<int> have{e_};
    std::set<int> have_set{e_};
    for (int a = 0; a < n_; ++a) {
      if (have_set.count(a)) continue;
      gens_.push_back(a);
      have.push_back(a);
      have_set.insert(a);
      std::vector<int> cl = closure(gens_);
      have_set = std::set<int>(cl.begin(), cl.end());
      if (static_cast<int>(have_set.size()) == n_) break;
    }
  }
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int i = 0; i < n_; ++i) labels_[i] = "g" + std::to_string(i);
  }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                                           std::string name,
                                                           std::vector<std::string> labels) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_ = std::move(table);
  g->name_ = name.empty() ? "table" : std::move(name);
  g->labels_ = std::move(labels);
  g->finalize();
  return g;
}

int FiniteGroup::power(int g, long long k) const {
  long long o = elt_order_[g];
  long long kk = ((k % o) + o) % o;
  int acc = e_;
  int base = g;
  while (kk > 0) {
    if (kk & 1) acc = mul(acc, base);
    base = mul(base, base);
    kk >>= 1;
  }
  return acc;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm<long>(e, elt_order_[a]);
  return e;
}

std::vector<int> FiniteGroup::closure(std::vector<int> gens) const {
  std::set<int> have{e_};
  std::vector<int> queue{e_};
  for (int g : gens)
    if (have.insert(g).second) queue.push_back(g);
  for (size_t i = 0; i < queue.size(); ++i)
    for (int g : gens) {
      int x = mul(queue[i], g);
      if (have.insert(x).second) queue.push_back(x);
      x = mul(g, queue[i]);
      if (have.insert(x).second) queue.push_back(x);
    }
  return std::vector<int>(have.begin(), have.end());
}

bool FiniteGroup::is_subset_normal(const std::vector<int>& sorted_elements) const {
  for (int g = 0; g < n_; ++g)
    for (int x : sorted_elements)
      if (!std::binary_search(sorted_elements.begin(), sorted_elements.end(), conj_elt(g, x)))
        return false;
  return true;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
  if (n < 1 || n > kMaxOrder) throw BadParameters("cyclic order out of range");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(n, std::vector<int>(n));
  g->labels_.resize(n);
  for (int i = 0; i < n; ++i) {
    g->labels_[i] = i == 0 ? "e" : "g^" + std::to_string(i);
    for (int j = 0; j < n; ++j) g->table_[i][j] = (i + j) % n;
  }
  g->name_ = "cyclic:" + std::to_string(n);
  g->gens_ = n > 1 ? std::vector<int>{1} : std::vector<int>{0};
  g->finalize();
  return g;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string cycle_label(const std::vector<int>& p) {
  std::vector<bool> used(p.size(), false);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (used[i] || p[i] == static_cast<int>(i)) continue;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!used[j]) {
      used[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    os << ")";
    any = true;
  }
  if (!any) os << "e";
  return os.str();
}

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw BadParameters("symmetric preset supports n in [1, 6]");
  auto perms = all_permutations(n);
  const int N = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[perms[i]] = i;
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(N, std::vector<int>(N));
  g->labels_.resize(N);
  for (int i = 0; i < N; ++i) {
    g->labels_[i] = cycle_label(perms[i]);
    for (int j = 0; j < N; ++j) {
      std::vector<int> prod(n);
      for (int t = 0; t < n; ++t) prod[t] = perms[i][perms[j][t]];  // i after j
      g->table_[i][j] = index.at(prod);
    }
  }
  g->name_ = "sym:" + std::to_string(n);
  g->perms_ = perms;
  if (n >= 2) {
    std::vector<int> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (int t = 0; t < n; ++t) cycle[t] = (t + 1) % n;
    g->gens_ = {index.at(transposition), index.at(cycle)};
  }
  g->finalize();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::dihedral(int n) {
  if (n < 1 || 2 * n > kMaxOrder) throw BadParameters("dihedral order out of range");
  const int N = 2 * n;
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(N, std::vector<int>(N));
  g->labels_.resize(N);
  auto idx = [n](int i, int j) { return i + n * j; };
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1) {
      g->labels_[idx(i1, j1)] =
          (j1 ? "r^" + std::to_string(i1) + " s" : (i1 ? "r^" + std::to_string(i1) : "e"));
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          g->table_[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2);
        }
    }
  g->name_ = "dihedral:" + std::to_string(n);
  g->gens_ = n > 1 ? std::vector<int>{idx(1, 0), idx(0, 1)} : std::vector<int>{idx(0, 1)};
  g->finalize();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::quaternion8() {
  // Elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign).
  auto idx = [](int axis, int sign) { return 2 * axis + sign; };  // sign 0 -> +, 1 -> -
  // Axis products: table over {1, i, j, k} with result sign.
  static const int prod_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int prod_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // prod_sign[a][b] is the sign of axis_a * axis_b: i*i = -1, i*j = k,
  // j*i = -k, etc.
  static const char* axis_name[4] = {"1", "i", "j", "k"};
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(8, std::vector<int>(8));
  g->labels_.resize(8);
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa) {
      g->labels_[idx(a, sa)] = std::string(sa ? "-" : "") + axis_name[a];
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb)
          g->table_[idx(a, sa)][idx(b, sb)] = idx(prod_axis[a][b], sa ^ sb ^ prod_sign[a][b]);
    }
  g->name_ = "quaternion:8";
  g->gens_ = {idx(1, 0), idx(2, 0)};
  g->finalize();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::heisenberg(int n) {
  if (!is_prime(n) || n % 2 == 0) throw BadParameters("heisenberg parameter must be an odd prime");
  long long order = static_cast<long long>(n) * n * n;
  if (order > kMaxOrder) throw BadParameters("heisenberg order exceeds the table cap");
  const int N = static_cast<int>(order);
  // Element A^a B^b C^c encoded as a + n*b + n^2*c; the normal form
  // multiplies as (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2-a2*b1).
  auto idx = [n](int a, int b, int c) { return a + n * b + n * n * c; };
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(N, std::vector<int>(N));
  g->labels_.resize(N);
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < n; ++b1)
      for (int c1 = 0; c1 < n; ++c1) {
        std::ostringstream os;
        if (a1) os << "A^" << a1;
        if (b1) os << (os.tellp() > 0 ? " " : "") << "B^" << b1;
        if (c1) os << (os.tellp() > 0 ? " " : "") << "C^" << c1;
        if (os.tellp() == 0) os << "e";
        g->labels_[idx(a1, b1, c1)] = os.str();
        for (int a2 = 0; a2 < n; ++a2)
          for (int b2 = 0; b2 < n; ++b2)
            for (int c2 = 0; c2 < n; ++c2) {
              int a = (a1 + a2) % n;
              int b = (b1 + b2) % n;
              int c = ((c1 + c2 - a2 * b1) % n + n) % n;
              g->table_[idx(a1, b1, c1)][idx(a2, b2, c2)] = idx(a, b, c);
            }
      }
  g->name_ = "heisenberg:" + std::to_string(n);
  g->gens_ = {idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)};
  g->finalize();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::direct_product(
    const std::shared_ptr<const FiniteGroup>& a, const std::shared_ptr<const FiniteGroup>& b) {
  long long order = static_cast<long long>(a->order()) * b->order();
  if (order > kMaxOrder) throw BadParameters("product order exceeds the table cap");
  const int N = static_cast<int>(order);
  const int nb = b->order();
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(N, std::vector<int>(N));
  g->labels_.resize(N);
  for (int x1 = 0; x1 < a->order(); ++x1)
    for (int y1 = 0; y1 < nb; ++y1) {
      g->labels_[x1 * nb + y1] =
          "(" + a->element_label(x1) + "," + b->element_label(y1) + ")";
      for (int x2 = 0; x2 < a->order(); ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          g->table_[x1 * nb + y1][x2 * nb + y2] = a->mul(x1, x2) * nb + b->mul(y1, y2);
    }
  g->name_ = a->name() + "x" + b->name();
  g->finalize();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::swap_wreath(
    const std::shared_ptr<const FiniteGroup>& a) {
  const int na = a->order();
  long long order = 2LL * na * na;
  if (order > kMaxOrder) throw BadParameters("wreath order exceeds the table cap");
  const int N = static_cast<int>(order);
  auto idx = [na](int x, int y, int s) { return (x * na + y) * 2 + s; };
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_.assign(N, std::vector<int>(N));
  g->labels_.resize(N);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < na; ++y1)
      for (int s1 = 0; s1 < 2; ++s1) {
        g->labels_[idx(x1, y1, s1)] = "((" + a->element_label(x1) + "," + a->element_label(y1) +
                                      ")," + (s1 ? "t" : "e") + ")";
        for (int x2 = 0; x2 < na; ++x2)
          for (int y2 = 0; y2 < na; ++y2)
            for (int s2 = 0; s2 < 2; ++s2) {
              int cx = s1 ? y2 : x2;
              int cy = s1 ? x2 : y2;
              g->table_[idx(x1, y1, s1)][idx(x2, y2, s2)] =
                  idx(a->mul(x1, cx), a->mul(y1, cy), s1 ^ s2);
            }
      }
  g->name_ = "wreath2:" + a->name();
  g->finalize();
  return g;
}

Subgroup Subgroup::from_elements(const GroupPtr& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int x : elements)
    if (x < 0 || x >= parent->order()) throw BadParameters("subgroup element out of range");
  const int m = static_cast<int>(elements.size());
  std::vector<int> from_parent(parent->order(), -1);
  for (int i = 0; i < m; ++i) from_parent[elements[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = parent->element_label(elements[i]);
    for (int j = 0; j < m; ++j) {
      int p = parent->mul(elements[i], elements[j]);
      if (from_parent[p] < 0) throw BadParameters("subset is not closed under products");
      table[i][j] = from_parent[p];
    }
  }
  Subgroup s;
  s.parent = parent;
  s.elements = std::move(elements);
  s.group = FiniteGroup::from_table(std::move(table), parent->name() + "-sub", std::move(labels));
  s.from_parent_ = std::move(from_parent);
  return s;
}

Subgroup Subgroup::from_generators(const GroupPtr& parent, const std::vector<int>& gens) {
  return from_elements(parent, parent->closure(gens));
}

Subgroup Subgroup::whole(const GroupPtr& parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return from_elements(parent, all);
}

Quotient quotient_by_normal(const GroupPtr& parent, const std::vector<int>& normal_elements) {
  std::vector<int> sorted = normal_elements;
  std::sort(sorted.begin(), sorted.end());
  if (!parent->is_subset_normal(sorted)) throw NotNormal("subgroup is not normal");
  const int n = parent->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : sorted) coset_of[parent->mul(x, h)] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = parent->element_label(reps[i]) + "N";
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[parent->mul(reps[i], reps[j])];
  }
  Quotient out;
  out.group = FiniteGroup::from_table(std::move(table), parent->name() + "/N", std::move(labels));
  out.coset_of = std::move(coset_of);
  out.reps = std::move(reps);
  return out;
}

}  // namespace repkit
