#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gelfand/rational.hpp"

namespace gelfand {

/// Element of Q(zeta_L), stored as the canonical residue modulo the L-th
/// cyclotomic polynomial: coeffs has length phi(L), coeffs[i] multiplies
/// zeta_L^i.  Values at different conductors compare equal after embedding
/// into the lcm conductor.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& q) : conductor_(1), coeffs_(1, q) {}
  Cyclotomic(long long v) : conductor_(1), coeffs_(1, Rational(v)) {}
  /// From raw coefficients of 1, zeta_L, ..., of any length (reduced).
  Cyclotomic(int conductor, std::vector<Rational> raw_coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  std::optional<long long> as_rational_integer() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);
  Cyclotomic& operator/=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Re-express at a conductor that is a multiple of the current one.
  Cyclotomic embedded(int new_conductor) const;

  /// Recognizable forms when all coefficients are integers: "1", "-1",
  /// "z4", "z3+z3^2", "2*z8^3-1"; otherwise the raw coefficient list.
  std::string to_string() const;

 private:
  int conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

/// zeta_L^k in canonical form (k may be negative or >= L).
Cyclotomic root_of_unity(int conductor, long long k);

/// Ring automorphism zeta_L -> zeta_L^{-1} (complex conjugation).
Cyclotomic conjugate(const Cyclotomic& x);

int euler_phi(int n);

/// Coefficients of the L-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int L);

}  // namespace gelfand
