#include "gelfand/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gelfand {

namespace {

bool is_prime_power(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;  // prime
}

}  // namespace

AbelianGroupSpec::AbelianGroupSpec(std::vector<int> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("empty factor list");
  for (int r : factors_) {
    if (r < 1) throw std::invalid_argument("factor orders must be >= 1");
    order_ *= r;
    exponent_ = std::lcm(exponent_, r);
    if (!is_prime_power(r) && r != 1) all_prime_power_ = false;
  }
  if (factors_.size() > 1 && !all_prime_power_)
    throw std::invalid_argument(
        "multi-factor abelian specs require prime-power factors");
}

std::string AbelianGroupSpec::to_string() const {
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(factors_[i]);
  }
  return s;
}

AbelianElement abelian_zero(const AbelianGroupSpec& spec) {
  return AbelianElement(spec.num_factors(), 0);
}

AbelianElement abelian_add(const AbelianGroupSpec& spec, const AbelianElement& a,
                           const AbelianElement& b) {
  AbelianElement c(spec.num_factors());
  for (int i = 0; i < spec.num_factors(); ++i)
    c[i] = (a[i] + b[i]) % spec.factors()[i];
  return c;
}

AbelianElement abelian_negate(const AbelianGroupSpec& spec,
                              const AbelianElement& a) {
  AbelianElement c(spec.num_factors());
  for (int i = 0; i < spec.num_factors(); ++i)
    c[i] = (spec.factors()[i] - a[i]) % spec.factors()[i];
  return c;
}

AbelianElement abelian_tau(const AbelianGroupSpec& spec, Tau tau,
                           const AbelianElement& a) {
  return tau == Tau::inversion ? abelian_negate(spec, a) : a;
}

bool abelian_is_involution(const AbelianGroupSpec& spec, const AbelianElement& a) {
  for (int i = 0; i < spec.num_factors(); ++i)
    if ((2 * a[i]) % spec.factors()[i] != 0) return false;
  return true;
}

std::vector<AbelianElement> abelian_elements(const AbelianGroupSpec& spec) {
  std::vector<AbelianElement> out;
  out.reserve(spec.order());
  AbelianElement a = abelian_zero(spec);
  int k = spec.num_factors();
  while (true) {
    out.push_back(a);
    int pos = k - 1;
    while (pos >= 0 && a[pos] == spec.factors()[pos] - 1) a[pos--] = 0;
    if (pos < 0) break;
    a[pos]++;
  }
  return out;
}

int abelian_index(const AbelianGroupSpec& spec, const AbelianElement& a) {
  int idx = 0;
  for (int i = 0; i < spec.num_factors(); ++i) idx = idx * spec.factors()[i] + a[i];
  return idx;
}

std::vector<AbelianElement> abelian_involutions(const AbelianGroupSpec& spec) {
  std::vector<AbelianElement> out;
  for (const AbelianElement& a : abelian_elements(spec))
    if (abelian_is_involution(spec, a)) out.push_back(a);
  return out;
}

std::vector<AbelianElement> abelian_squares(const AbelianGroupSpec& spec) {
  std::set<AbelianElement> seen;
  for (const AbelianElement& a : abelian_elements(spec))
    seen.insert(abelian_add(spec, a, a));
  return std::vector<AbelianElement>(seen.begin(), seen.end());
}

std::vector<AbelianElement> abelian_square_coset_reps(
    const AbelianGroupSpec& spec) {
  std::vector<AbelianElement> squares = abelian_squares(spec);
  std::set<AbelianElement> assigned;
  std::vector<AbelianElement> reps;
  for (const AbelianElement& a : abelian_elements(spec)) {
    if (assigned.count(a)) continue;
    reps.push_back(a);  // least element of its coset, by enumeration order
    for (const AbelianElement& b : squares)
      assigned.insert(abelian_add(spec, a, b));
  }
  return reps;
}

Cyclotomic abelian_character(const AbelianGroupSpec& spec,
                             const std::vector<int>& dual_index,
                             const AbelianElement& a) {
  int L = spec.exponent();
  long long e = 0;
  for (int i = 0; i < spec.num_factors(); ++i)
    e += static_cast<long long>(dual_index[i]) * a[i] * (L / spec.factors()[i]);
  return root_of_unity(L, e);
}

std::vector<int> dual_index_tuple(const AbelianGroupSpec& spec, int t) {
  if (t < 0 || t >= spec.order())
    throw std::invalid_argument("character index out of range");
  std::vector<int> tuple(spec.num_factors());
  for (int i = spec.num_factors() - 1; i >= 0; --i) {
    tuple[i] = t % spec.factors()[i];
    t /= spec.factors()[i];
  }
  return tuple;
}

int dual_partner_index(const AbelianGroupSpec& spec, Tau tau, int t) {
  if (tau == Tau::inversion) return t;  // conj(psi o inv) = psi
  std::vector<int> tuple = dual_index_tuple(spec, t);
  for (int i = 0; i < spec.num_factors(); ++i)
    tuple[i] = (spec.factors()[i] - tuple[i]) % spec.factors()[i];
  int idx = 0;
  for (int i = 0; i < spec.num_factors(); ++i)
    idx = idx * spec.factors()[i] + tuple[i];
  return idx;
}

int abelian_epsilon_tau(const AbelianGroupSpec& spec, Tau tau, int t) {
  std::vector<int> tuple = dual_index_tuple(spec, t);
  Cyclotomic sum;
  for (const AbelianElement& a : abelian_elements(spec))
    sum += abelian_character(spec, tuple,
                             abelian_add(spec, a, abelian_tau(spec, tau, a)));
  sum /= Rational(spec.order());
  auto v = sum.as_rational_integer();
  if (!v || (*v != 0 && *v != 1 && *v != -1))
    throw std::logic_error("twisted indicator outside {-1,0,1}");
  return static_cast<int>(*v);
}

std::string abelian_element_to_string(const AbelianElement& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += "|";
    s += std::to_string(a[i]);
  }
  return s;
}

AbelianElement abelian_element_from_string(const AbelianGroupSpec& spec,
                                           const std::string& s) {
  AbelianElement a;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '|')) a.push_back(std::stoi(tok));
  if (static_cast<int>(a.size()) != spec.num_factors())
    throw std::invalid_argument("wrong number of color coordinates: " + s);
  for (int i = 0; i < spec.num_factors(); ++i)
    if (a[i] < 0 || a[i] >= spec.factors()[i])
      throw std::invalid_argument("color residue out of range: " + s);
  return a;
}

}  // namespace gelfand
