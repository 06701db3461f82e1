#include "repkit/weights.hpp"

#include "repkit/errors.hpp"
#include "repkit/intmat.hpp"

namespace repkit::weights {

WeightMultiset::WeightMultiset(int rank) : rank_(rank) {
  if (rank < 1) throw BadParameters("weight rank must be positive");
}

WeightMultiset WeightMultiset::from_list(int rank, const std::vector<WVec>& vecs) {
  WeightMultiset w(rank);
  for (const WVec& v : vecs) w.add(v);
  return w;
}

long long WeightMultiset::total_size() const {
  long long n = 0;
  for (const auto& [v, m] : entries_) n += m;
  return n;
}

long long WeightMultiset::multiplicity(const WVec& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second;
}

void WeightMultiset::add(const WVec& v, long long mult) {
  if (static_cast<int>(v.size()) != rank_)
    throw RankMismatch("weight length differs from multiset rank");
  if (mult == 0) return;
  if (mult < 0) throw BadParameters("negative multiplicity");
  entries_[v] += mult;
}

const WVec& WeightMultiset::lex_max() const {
  if (entries_.empty()) throw BadParameters("lex_max of an empty multiset");
  return entries_.rbegin()->first;
}

std::vector<WVec> WeightMultiset::expanded() const {
  std::vector<WVec> out;
  out.reserve(static_cast<size_t>(total_size()));
  for (const auto& [v, m] : entries_)
    for (long long i = 0; i < m; ++i) out.push_back(v);
  return out;
}

namespace {

WVec vec_add(const WVec& a, const WVec& b) {
  WVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

WVec vec_sub(const WVec& a, const WVec& b) {
  WVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

WVec vec_scale(const WVec& a, long long c) {
  WVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Sums over index multisets i_0 <= i_1 <= ... (sym) or i_0 < i_1 < ...
// (ext) of the expanded weight list.
void subset_sums(const std::vector<WVec>& xs, long long k, bool strict, size_t start,
                 WVec& acc, WeightMultiset& out) {
  if (k == 0) {
    out.add(acc);
    return;
  }
  for (size_t i = start; i < xs.size(); ++i) {
    WVec next = vec_add(acc, xs[i]);
    subset_sums(xs, k - 1, strict, strict ? i + 1 : i, next, out);
  }
}

}  // namespace

WeightMultiset pairwise_sum(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.rank() != b.rank()) throw RankMismatch("pairwise_sum rank mismatch");
  WeightMultiset out(a.rank());
  for (const auto& [u, mu] : a.entries())
    for (const auto& [v, mv] : b.entries()) out.add(vec_add(u, v), mu * mv);
  return out;
}

WeightMultiset box_product(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out(a.rank() + b.rank());
  for (const auto& [u, mu] : a.entries())
    for (const auto& [v, mv] : b.entries()) {
      WVec w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, mu * mv);
    }
  return out;
}

WeightMultiset tensor_power(const WeightMultiset& w, long long k) {
  if (k < 1) throw BadParameters("tensor power requires k >= 1");
  if (w.empty()) throw BadParameters("tensor power of an empty multiset");
  WeightMultiset out = w;
  for (long long i = 1; i < k; ++i) out = pairwise_sum(out, w);
  return out;
}

WeightMultiset sym_power(const WeightMultiset& w, long long k) {
  if (k < 1) throw BadParameters("symmetric power requires k >= 1");
  if (w.empty()) throw BadParameters("symmetric power of an empty multiset");
  std::vector<WVec> xs = w.expanded();
  WeightMultiset out(w.rank());
  WVec acc(w.rank(), 0);
  subset_sums(xs, k, /*strict=*/false, 0, acc, out);
  return out;
}

WeightMultiset ext_power(const WeightMultiset& w, long long k) {
  if (k < 1) throw BadParameters("exterior power requires k >= 1");
  if (k > w.total_size())
    throw KTooLarge("exterior power degree exceeds multiset size");
  std::vector<WVec> xs = w.expanded();
  WeightMultiset out(w.rank());
  WVec acc(w.rank(), 0);
  subset_sums(xs, k, /*strict=*/true, 0, acc, out);
  return out;
}

WeightMultiset adjoint(const WeightMultiset& w) {
  if (w.empty()) throw BadParameters("adjoint of an empty multiset");
  WeightMultiset out(w.rank());
  for (const auto& [u, mu] : w.entries())
    for (const auto& [v, mv] : w.entries()) out.add(vec_sub(u, v), mu * mv);
  return out;
}

WeightMultiset dual(const WeightMultiset& w) {
  WeightMultiset out(w.rank());
  for (const auto& [v, m] : w.entries()) out.add(vec_scale(v, -1), m);
  return out;
}

WeightMultiset subtract(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.rank() != b.rank()) throw RankMismatch("subtract rank mismatch");
  WeightMultiset out(a.rank());
  auto rem = a.entries();
  for (const auto& [v, m] : b.entries()) {
    auto it = rem.find(v);
    if (it == rem.end() || it->second < m)
      throw BadParameters("multiset difference is not contained");
    it->second -= m;
  }
  for (const auto& [v, m] : rem)
    if (m > 0) out.add(v, m);
  return out;
}

namespace {

// Shared induction: peel off one weight per round from the lex-top of the
// remainder, recomputing the forward image of the partial answer from
// scratch each round so repeated weights are handled correctly.
WeightMultiset recover_greedy(const WeightMultiset& s, long long k, long long n,
                              WeightMultiset (*forward)(const WeightMultiset&, long long),
                              const char* kind) {
  auto fail = [&](const std::string& msg) -> void {
    if (std::string(kind) == "sym") throw NotASymPower(msg);
    throw NotATensorPower(msg);
  };
  if (k < 1 || n < 1) throw BadParameters("recovery requires k >= 1 and n >= 1");

  const WVec& top = s.lex_max();
  for (long long c : top)
    if (c % k != 0)
      throw NotDivisible("lex-max weight is not divisible by k");
  WVec lam1(top.size());
  for (size_t i = 0; i < top.size(); ++i) lam1[i] = top[i] / k;

  WeightMultiset recovered(s.rank());
  recovered.add(lam1);
  WVec offset = vec_scale(lam1, k - 1);
  for (long long j = 2; j <= n; ++j) {
    WeightMultiset used = forward(recovered, k);
    WeightMultiset remainder(s.rank());
    try {
      remainder = subtract(s, used);
    } catch (const BadParameters&) {
      fail("partial forward image is not contained in the input");
    }
    if (remainder.empty()) fail("remainder exhausted before recovering n weights");
    recovered.add(vec_sub(remainder.lex_max(), offset));
  }
  if (!(forward(recovered, k) == s)) fail("forward recomputation does not match the input");
  return recovered;
}

}  // namespace

WeightMultiset recover_from_sym(const WeightMultiset& s, long long k, long long n) {
  if (k < 1 || n < 1) throw BadParameters("recovery requires k >= 1 and n >= 1");
  if (Int(static_cast<long>(s.total_size())) != binomial(n + k - 1, k))
    throw NotASymPower("input size is not binomial(n+k-1, k)");
  return recover_greedy(s, k, n, &sym_power, "sym");
}

WeightMultiset recover_from_tensor(const WeightMultiset& t, long long k, long long n) {
  if (k < 1 || n < 1) throw BadParameters("recovery requires k >= 1 and n >= 1");
  Int expected = 1;
  for (long long i = 0; i < k; ++i) expected *= static_cast<long>(n);
  if (Int(static_cast<long>(t.total_size())) != expected)
    throw NotATensorPower("input size is not n^k");
  return recover_greedy(t, k, n, &tensor_power, "tensor");
}

bool multiset_equal(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.rank() != b.rank()) throw RankMismatch("multiset_equal rank mismatch");
  return a.entries() == b.entries();
}

}  // namespace repkit::weights
