#include "gelfand/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace gelfand {

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials (constant term first).
std::vector<Integer> poly_divide(std::vector<Integer> num,
                                 const std::vector<Integer>& den) {
  std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Integer c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Integer& c : num)
    if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int L) {
  static std::map<int, std::vector<Integer>> cache;
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  // x^L - 1 divided by all Phi_d with d | L, d < L
  std::vector<Integer> poly(L + 1, Integer(0));
  poly[0] = -1;
  poly[L] = 1;
  for (int d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    poly = poly_divide(poly, cyclotomic_polynomial(d));
  }
  return cache.emplace(L, std::move(poly)).first->second;
}

namespace {

// Reduce raw coefficients (any length) modulo Phi_L; result length phi(L).
std::vector<Rational> reduce_mod_phi(int L, std::vector<Rational> c) {
  const std::vector<Integer>& phi = cyclotomic_polynomial(L);
  int deg = static_cast<int>(phi.size()) - 1;  // = euler_phi(L)
  for (int i = static_cast<int>(c.size()) - 1; i >= deg; --i) {
    Rational lead = c[i];
    if (lead == 0) continue;
    c[i] = 0;
    for (int j = 0; j < deg; ++j)
      c[i - deg + j] -= lead * Rational(phi[j]);
  }
  c.resize(deg, Rational(0));
  return c;
}

}  // namespace

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> raw_coeffs)
    : conductor_(conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  coeffs_ = reduce_mod_phi(conductor, std::move(raw_coeffs));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

std::optional<long long> Cyclotomic::as_rational_integer() const {
  auto q = as_rational();
  if (!q || !is_integer(*q)) return std::nullopt;
  return numerator(*q).convert_to<long long>();
}

Cyclotomic Cyclotomic::embedded(int new_conductor) const {
  if (new_conductor == conductor_) return *this;
  if (new_conductor % conductor_ != 0)
    throw std::invalid_argument("embedding target must be a multiple conductor");
  int step = new_conductor / conductor_;
  std::vector<Rational> raw(static_cast<size_t>(new_conductor), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    raw[(i * step) % new_conductor] += coeffs_[i];
  return Cyclotomic(new_conductor, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  int L = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = embedded(L);
  Cyclotomic b = o.embedded(L);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  *this = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  *this += -o;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  int L = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = embedded(L);
  Cyclotomic b = o.embedded(L);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = Cyclotomic(L, std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (Rational& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& q) {
  if (q == 0) throw std::invalid_argument("division by zero");
  for (Rational& c : coeffs_) c /= q;
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  int L = std::lcm(conductor_, o.conductor_);
  return embedded(L).coeffs_ == o.embedded(L).coeffs_;
}

std::string Cyclotomic::to_string() const {
  auto q = as_rational();
  if (q && is_integer(*q)) return numerator(*q).str();
  bool integral = true;
  for (const Rational& c : coeffs_)
    if (!is_integer(c)) integral = false;
  if (integral) {
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      Integer c = numerator(coeffs_[i]);
      bool neg = c < 0;
      Integer abs = neg ? -c : c;
      if (!s.empty())
        s += neg ? "-" : "+";
      else if (neg)
        s += "-";
      if (i == 0) {
        s += abs.str();
      } else {
        if (abs != 1) s += abs.str() + "*";
        s += "z" + std::to_string(conductor_);
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }
  std::string s = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += rational_to_string(coeffs_[i]);
  }
  return s + "]";
}

Cyclotomic root_of_unity(int conductor, long long k) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  long long e = k % conductor;
  if (e < 0) e += conductor;
  std::vector<Rational> raw(static_cast<size_t>(e) + 1, Rational(0));
  raw[static_cast<size_t>(e)] = 1;
  return Cyclotomic(conductor, std::move(raw));
}

Cyclotomic conjugate(const Cyclotomic& x) {
  int L = x.conductor();
  std::vector<Rational> raw(static_cast<size_t>(L), Rational(0));
  for (size_t i = 0; i < x.coeffs().size(); ++i)
    raw[(L - i) % L] += x.coeffs()[i];
  return Cyclotomic(L, std::move(raw));
}

}  // namespace gelfand
