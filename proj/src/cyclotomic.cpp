#include "repkit/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "repkit/errors.hpp"

namespace repkit {

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials (monic divisor).
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  assert(!den.empty() && den.back() == 1);
  std::vector<Int> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
    Int q = num[i];
    if (q == 0) continue;
    quot[i - den.size() + 1] = q;
    for (size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= q * den[j];
  }
  for (const Int& r : num) assert(r == 0);
  return quot;
}

std::map<long, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
  // without the lock being re-entered (manual stack of needed divisors).
  std::vector<long> need{n};
  while (!need.empty()) {
    long m = need.back();
    if (g_phi_cache.count(m)) {
      need.pop_back();
      continue;
    }
    bool ready = true;
    for (long d = 1; d < m; ++d)
      if (m % d == 0 && !g_phi_cache.count(d)) {
        need.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    std::vector<Int> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) num = poly_div_exact(std::move(num), g_phi_cache.at(d));
    g_phi_cache.emplace(m, std::move(num));
    need.pop_back();
  }
  return g_phi_cache.at(n);
}

void Cyclotomic::reduce_inplace(std::vector<Rat>& raw) const {
  const std::vector<Int>& phi = cyclotomic_polynomial(n_);
  const size_t deg = phi.size() - 1;
  for (long i = static_cast<long>(raw.size()) - 1; i >= static_cast<long>(deg); --i) {
    if (raw[i] == 0) continue;
    Rat q = raw[i];
    for (size_t j = 0; j < phi.size(); ++j) {
      Rat t = q * Rat(phi[j]);
      raw[i - deg + j] -= t;
    }
    assert(raw[i] == 0);
  }
  raw.resize(deg);
  for (auto& x : raw) x.canonicalize();
}

Cyclotomic::Cyclotomic(const Rat& r) : n_(1), c_{r} {
  // Phi_1 = x - 1, so degree-0 coefficients represent the rationals.
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw BadParameters("conductor must be positive");
  Cyclotomic z;
  z.n_ = n;
  k %= n;
  if (k < 0) k += n;
  std::vector<Rat> raw(n);
  raw[k] = 1;
  z.reduce_inplace(raw);
  z.c_ = std::move(raw);
  return z;
}

Cyclotomic Cyclotomic::from_coeffs(long n, std::vector<Rat> power_coeffs) {
  if (n < 1) throw BadParameters("conductor must be positive");
  Cyclotomic z;
  z.n_ = n;
  std::vector<Rat> raw = std::move(power_coeffs);
  raw.resize(std::max<size_t>(raw.size(), 1));
  z.reduce_inplace(raw);
  z.c_ = std::move(raw);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::to_rational() const {
  if (!is_rational()) throw NonRationalResult("value " + str() + " is not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

Cyclotomic Cyclotomic::promoted(long m) const {
  if (m % n_ != 0) throw BadParameters("conductor promotion requires divisibility");
  if (m == n_) return *this;
  Cyclotomic z;
  z.n_ = m;
  std::vector<Rat> raw(m);
  const long stride = m / n_;
  for (size_t i = 0; i < c_.size(); ++i) raw[(i * stride) % m] += c_[i];
  z.reduce_inplace(raw);
  z.c_ = std::move(raw);
  return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  std::vector<Rat> raw(a.c_.size() + b.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic z;
  z.n_ = m;
  z.reduce_inplace(raw);
  z.c_ = std::move(raw);
  return z;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  return promoted(m).c_ == o.promoted(m).c_;
}

Cyclotomic Cyclotomic::galois(long k) const {
  long kk = k % n_;
  if (kk < 0) kk += n_;
  if (std::gcd(kk, n_) != 1)
    throw BadParameters("galois exponent not coprime to conductor");
  Cyclotomic z;
  z.n_ = n_;
  std::vector<Rat> raw(n_);
  for (size_t i = 0; i < c_.size(); ++i) raw[(i * kk) % n_] += c_[i];
  z.reduce_inplace(raw);
  z.c_ = std::move(raw);
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  if (n_ == 1) return *this;
  return galois(n_ - 1);
}

Cyclotomic Cyclotomic::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic acc(Rat(1)), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

namespace {

using RatPoly = std::vector<Rat>;

void poly_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw BadParameters("inverse of zero");
  // Extended Euclid in QQ[x] against Phi_n: the gcd is 1 since Phi_n is
  // irreducible and our representative has smaller degree.
  RatPoly r0;
  for (const Int& x : cyclotomic_polynomial(n_)) r0.push_back(Rat(x));
  RatPoly r1(c_.begin(), c_.end());
  poly_trim(r1);
  RatPoly s0{}, s1{Rat(1)};  // coefficients of the input polynomial
  while (true) {
    poly_trim(r1);
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: unexpected zero remainder");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2
    RatPoly q(r0.size() - r1.size() + 1);
    RatPoly rem = r0;
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(r1.size()) - 1; --i) {
      if (rem[i] == 0) continue;
      Rat f = rem[i] / r1.back();
      q[i - r1.size() + 1] = f;
      for (size_t j = 0; j < r1.size(); ++j) rem[i - r1.size() + 1 + j] -= f * r1[j];
    }
    poly_trim(rem);
    // s2 = s0 - q*s1
    RatPoly s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rat unit = r1[0];
  RatPoly inv = s1;
  for (auto& x : inv) x /= unit;
  Cyclotomic out = from_coeffs(n_, inv);
  assert((out * *this) == Cyclotomic(Rat(1)));
  return out;
}

Rat Cyclotomic::abs_squared() const { return (*this * conj()).to_rational(); }

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace repkit
