#include "repkit/chartab.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "repkit/errors.hpp"

namespace repkit {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return (__uint128_t)a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

// det(M) over F_p by Gaussian elimination; destroys its argument.
u64 det_mod(std::vector<std::vector<u64>> m, u64 p) {
  const int n = static_cast<int>(m.size());
  u64 det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = p - det;
    }
    det = mulmod(det, m[c][c], p);
    u64 inv = invmod(m[c][c], p);
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      u64 f = mulmod(m[r][c], inv, p);
      for (int j = c; j < n; ++j) m[r][j] = (m[r][j] + p - mulmod(f, m[c][j], p)) % p;
    }
  }
  return det % p;
}

// Nullspace of M over F_p; returns basis vectors.
std::vector<std::vector<u64>> nullspace_mod(std::vector<std::vector<u64>> m, u64 p) {
  const int n = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    u64 inv = invmod(m[rank][c], p);
    for (int j = 0; j < n; ++j) m[rank][j] = mulmod(m[rank][j], inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      u64 f = m[r][c];
      for (int j = 0; j < n; ++j) m[r][j] = (m[r][j] + p - mulmod(f, m[rank][j], p)) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<u64> v(n, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = (p - m[r][c]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

u64 lcg_next(u64& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return state >> 16;
}

std::string value_key(const std::vector<Cyclotomic>& vals) {
  std::ostringstream os;
  for (const Cyclotomic& v : vals) os << v.conductor() << '|' << v.str() << ';';
  return os.str();
}

std::vector<ClassFunction> dixon_table(const GroupPtr& g) {
  const int r = g->num_classes();
  const long long n = g->order();
  if (r > 40)
    throw BadParameters("modular character table capped at 40 conjugacy classes");
  const long e = g->exponent();

  u64 p = 0;
  for (u64 k = 1;; ++k) {
    u64 cand = k * static_cast<u64>(e) + 1;
    if (cand <= std::max<u64>({static_cast<u64>(n), 4ULL * r * r, 50ULL})) continue;
    if (prime_u64(cand)) {
      p = cand;
      break;
    }
  }
  // Primitive e-th root of unity in F_p.
  u64 w = 0;
  {
    std::vector<u64> qs = prime_factors(p - 1);
    for (u64 h = 2; h < p; ++h) {
      bool gen = true;
      for (u64 q : qs)
        if (powmod(h, (p - 1) / q, p) == 1) {
          gen = false;
          break;
        }
      if (gen) {
        w = powmod(h, (p - 1) / static_cast<u64>(e), p);
        break;
      }
    }
  }

  // Class data.
  std::vector<long long> csize(r);
  std::vector<int> crep(r), cinv(r);
  for (int c = 0; c < r; ++c) {
    csize[c] = static_cast<long long>(g->classes()[c].size());
    crep[c] = g->class_rep(c);
    cinv[c] = g->class_of(g->inv(crep[c]));
  }
  const int id_class = g->class_of(g->identity());

  // Class algebra structure constants: M[i][j][k] counts pairs in
  // C_i x C_j multiplying to a fixed representative of C_k.
  std::vector<std::vector<std::vector<u64>>> cm(
      r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int z = crep[k];
      for (int x : g->classes()[i]) {
        int j = g->class_of(g->mul(g->inv(x), z));
        cm[i][j][k] += 1;
      }
    }

  for (u64 attempt = 0; attempt < 64; ++attempt) {
    u64 state = 0x9e3779b97f4a7c15ULL ^ (attempt * 0xbf58476d1ce4e5b9ULL + 1);
    std::vector<u64> mix(r);
    for (int i = 0; i < r; ++i) mix[i] = lcg_next(state) % p;
    std::vector<std::vector<u64>> m(r, std::vector<u64>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          m[j][k] = (m[j][k] + mulmod(mix[i], cm[i][j][k], p)) % p;

    // All eigenvalues, by scanning the field for roots of det(M - t I).
    std::vector<u64> roots;
    for (u64 t = 0; t < p; ++t) {
      std::vector<std::vector<u64>> shifted = m;
      for (int i = 0; i < r; ++i) shifted[i][i] = (shifted[i][i] + p - t) % p;
      if (det_mod(std::move(shifted), p) == 0) roots.push_back(t);
      if (static_cast<int>(roots.size()) == r) break;
    }
    if (static_cast<int>(roots.size()) != r) continue;

    std::vector<std::vector<u64>> omegas;
    bool ok = true;
    for (u64 t : roots) {
      std::vector<std::vector<u64>> shifted = m;
      for (int i = 0; i < r; ++i) shifted[i][i] = (shifted[i][i] + p - t) % p;
      auto ns = nullspace_mod(std::move(shifted), p);
      if (ns.size() != 1 || ns[0][id_class] == 0) {
        ok = false;
        break;
      }
      u64 scale = invmod(ns[0][id_class], p);
      std::vector<u64> omega(r);
      for (int j = 0; j < r; ++j) omega[j] = mulmod(ns[0][j], scale, p);
      omegas.push_back(std::move(omega));
    }
    if (!ok) continue;

    // Degrees and exact character values.
    std::vector<std::vector<Cyclotomic>> table;
    long long degree_sq_sum = 0;
    for (const auto& omega : omegas) {
      u64 s = 0;
      for (int j = 0; j < r; ++j)
        s = (s + mulmod(mulmod(omega[j], omega[cinv[j]], p), invmod(csize[j] % p, p), p)) % p;
      if (s == 0) {
        ok = false;
        break;
      }
      u64 dsq = mulmod(static_cast<u64>(n) % p, invmod(s, p), p);
      long long d = -1;
      for (long long cand = 1; cand * cand <= n; ++cand)
        if (mulmod(cand % p, cand % p, p) == dsq) {
          d = cand;
          break;
        }
      if (d < 0) {
        ok = false;
        break;
      }
      degree_sq_sum += d * d;

      std::vector<u64> chi_mod(r);
      for (int j = 0; j < r; ++j)
        chi_mod[j] = mulmod(mulmod(static_cast<u64>(d) % p, omega[j], p),
                            invmod(csize[j] % p, p), p);

      std::vector<Cyclotomic> vals(r);
      for (int j = 0; j < r; ++j) {
        int x = crep[j];
        long o = g->order_of(x);
        u64 zo = powmod(w, static_cast<u64>(e) / o, p);
        u64 zo_inv = invmod(zo, p);
        std::vector<Rat> coeffs(o);
        long long total = 0;
        for (long t = 0; t < o && ok; ++t) {
          u64 acc = 0;
          for (long sexp = 0; sexp < o; ++sexp) {
            u64 zpow = powmod(zo_inv, static_cast<u64>((sexp * t) % o), p);
            acc = (acc + mulmod(chi_mod[g->class_of(g->power(x, sexp))], zpow, p)) % p;
          }
          u64 ct = mulmod(acc, invmod(static_cast<u64>(o) % p, p), p);
          if (ct > static_cast<u64>(d)) {
            ok = false;
            break;
          }
          coeffs[t] = Rat(static_cast<long>(ct));
          total += static_cast<long long>(ct);
        }
        if (!ok || total != d) {
          ok = false;
          break;
        }
        vals[j] = Cyclotomic::from_coeffs(o, std::move(coeffs));
      }
      if (!ok) break;
      table.push_back(std::move(vals));
    }
    if (!ok || degree_sq_sum != n) continue;

    std::vector<ClassFunction> chars;
    for (auto& vals : table) chars.emplace_back(g, std::move(vals));
    // Certificate: the rows must be orthonormal.
    bool certified = true;
    for (size_t i = 0; i < chars.size() && certified; ++i)
      for (size_t j = i; j < chars.size() && certified; ++j) {
        Rat ip;
        try {
          ip = inner_product(chars[i], chars[j]);
        } catch (const NonRationalResult&) {
          certified = false;
          break;
        }
        if (ip != (i == j ? 1 : 0)) certified = false;
      }
    if (!certified) continue;

    std::sort(chars.begin(), chars.end(), [](const ClassFunction& a, const ClassFunction& b) {
      if (a.dim() != b.dim()) return a.dim() < b.dim();
      return value_key(a.values()) < value_key(b.values());
    });
    return chars;
  }
  throw std::logic_error("modular character table did not stabilize");
}

}  // namespace

std::vector<ClassFunction> character_table_modular(const GroupPtr& group) {
  return dixon_table(group);
}

std::vector<ClassFunction> character_table(const GroupPtr& group) {
  if (group->is_abelian()) {
    std::vector<ClassFunction> chars = linear_characters(group);
    std::sort(chars.begin(), chars.end(), [](const ClassFunction& a, const ClassFunction& b) {
      return value_key(a.values()) < value_key(b.values());
    });
    return chars;
  }
  return dixon_table(group);
}

}  // namespace repkit
