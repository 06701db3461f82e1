#pragma once

#include <string>
#include <vector>

#include "repkit/intmat.hpp"

namespace repkit {

/*
 * Exact elements of cyclotomic fields QQ(zeta_n).  A value is stored at a
 * conductor n as a rational polynomial in zeta_n reduced modulo the n-th
 * cyclotomic polynomial, which makes the representation canonical at a fixed
 * conductor; mixed-conductor arithmetic promotes both sides into the lcm.
 * These are the scalars for all character work: twist searches and k-th
 * power comparisons are exact claims, so there is no floating point here.
 */
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rat(0)} {}
  explicit Cyclotomic(const Rat& r);
  explicit Cyclotomic(long v) : Cyclotomic(Rat(v)) {}

  static Cyclotomic root_of_unity(long n, long k);  // zeta_n^k
  static Cyclotomic from_coeffs(long n, std::vector<Rat> power_coeffs);

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat to_rational() const;  // throws NonRationalResult

  Cyclotomic conj() const;          // complex conjugation
  Cyclotomic galois(long k) const;  // zeta -> zeta^k, gcd(k, n) = 1
  Cyclotomic inverse() const;       // throws BadParameters on zero
  Cyclotomic pow(long long k) const;
  Rat abs_squared() const;  // z * conj(z); rational for all cyclotomic z? no:
                            // rational exactly when it reduces to degree 0;
                            // throws NonRationalResult otherwise.

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Literal of the form "q0 + q1*z^1 + q2*z^2" understood by the parser.
  std::string str() const;

  Cyclotomic promoted(long m) const;  // embed into QQ(zeta_m), n | m

 private:
  long n_;
  std::vector<Rat> c_;  // size deg(Phi_n) once nonzero terms exist
  void reduce_inplace(std::vector<Rat>& raw) const;
};

const std::vector<Int>& cyclotomic_polynomial(long n);  // monic, cached
long euler_phi(long n);

}  // namespace repkit
