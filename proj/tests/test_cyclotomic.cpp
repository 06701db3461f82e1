#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repkit/cyclotomic.hpp"
#include "repkit/errors.hpp"
#include "repkit/io.hpp"

using namespace repkit;

namespace {

Cyclotomic zeta(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

Cyclotomic random_value(std::mt19937_64& rng, long conductor) {
  std::vector<Rat> coeffs(conductor);
  for (auto& c : coeffs)
    c = Rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
  return Cyclotomic::from_coeffs(conductor, coeffs);
}

}  // namespace

TEST_CASE("reduction identities") {
  CHECK((Cyclotomic(Rat(1)) + zeta(3, 1) + zeta(3, 2)).is_zero());
  CHECK(zeta(4, 1) * zeta(4, 1) == Cyclotomic(Rat(-1)));
  CHECK(zeta(5, 0) == Cyclotomic(Rat(1)));
  Cyclotomic sum5;
  for (long i = 0; i < 5; ++i) sum5 += zeta(5, i);
  CHECK(sum5.is_zero());
}

TEST_CASE("cross-conductor equality") {
  CHECK(zeta(6, 2) == zeta(3, 1));
  CHECK(zeta(6, 3) == Cyclotomic(Rat(-1)));
  CHECK(zeta(12, 4) == zeta(3, 1));
  CHECK(zeta(8, 1) != zeta(8, 3));
}

TEST_CASE("ring identities on random values") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 25; ++t) {
    long n = std::vector<long>{3, 4, 5, 6, 8, 12}[rng() % 6];
    Cyclotomic a = random_value(rng, n), b = random_value(rng, n), c = random_value(rng, 4);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("roots of unity have unit modulus") {
  for (long n : {3L, 4L, 7L, 12L})
    for (long k = 0; k < n; ++k) CHECK(zeta(n, k).abs_squared() == 1);
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 15; ++t) {
    Cyclotomic a = random_value(rng, 5);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == Cyclotomic(Rat(1)));
  }
  CHECK(Cyclotomic(Rat(2, 3)).inverse() == Cyclotomic(Rat(3, 2)));
  CHECK_THROWS_AS(Cyclotomic().inverse(), BadParameters);
}

TEST_CASE("galois action is a ring morphism") {
  std::mt19937_64 rng(57);
  for (long k : {1L, 2L, 3L, 4L}) {
    if (std::gcd(k, 5L) != 1) continue;
    Cyclotomic a = random_value(rng, 5), b = random_value(rng, 5);
    CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
    CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
  }
  CHECK(zeta(5, 1).galois(2) == zeta(5, 2));
  CHECK_THROWS_AS(zeta(6, 1).galois(2), BadParameters);
}

TEST_CASE("conjugation inverts roots of unity") {
  for (long n : {3L, 5L, 8L})
    for (long k = 0; k < n; ++k) CHECK(zeta(n, k).conj() == zeta(n, n - k));
}

TEST_CASE("powers") {
  CHECK(zeta(7, 1).pow(7) == Cyclotomic(Rat(1)));
  CHECK(zeta(7, 3).pow(2) == zeta(7, 6));
  CHECK(zeta(5, 2).pow(-1) == zeta(5, 3));
  CHECK(Cyclotomic(Rat(2)).pow(10) == Cyclotomic(Rat(1024)));
}

TEST_CASE("rationality detection") {
  CHECK(Cyclotomic(Rat(7, 3)).is_rational());
  CHECK(Cyclotomic(Rat(7, 3)).to_rational() == Rat(7, 3));
  CHECK_FALSE(zeta(3, 1).is_rational());
  CHECK_THROWS_AS(zeta(3, 1).to_rational(), NonRationalResult);
  // zeta_6 + conj(zeta_6) = 1 lands back in the rationals.
  CHECK((zeta(6, 1) + zeta(6, 1).conj()).to_rational() == 1);
  // |1 + zeta_5|^2 = 2 + zeta_5 + zeta_5^4 is irrational.
  Cyclotomic z = Cyclotomic(Rat(1)) + zeta(5, 1);
  CHECK_THROWS_AS(z.abs_squared(), NonRationalResult);
}

TEST_CASE("cyclotomic polynomial degrees") {
  CHECK(cyclotomic_polynomial(1).size() == 2);
  CHECK(cyclotomic_polynomial(12).size() == static_cast<size_t>(euler_phi(12)) + 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(27) == 18);
}

TEST_CASE("literal parser round trips the printer") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    Cyclotomic a = random_value(rng, 12);
    CHECK(io::parse_cyclotomic(a.str(), a.conductor()) == a);
  }
  CHECK(io::parse_cyclotomic("1/2 + 3*z^2 - z", 6) ==
        Cyclotomic(Rat(1, 2)) + Cyclotomic(Rat(3)) * zeta(6, 2) - zeta(6, 1));
  CHECK(io::parse_cyclotomic("-2", 4) == Cyclotomic(Rat(-2)));
  CHECK_THROWS_AS(io::parse_cyclotomic("z^^2", 4), BadParameters);
  CHECK_THROWS_AS(io::parse_cyclotomic("", 4), BadParameters);
}
