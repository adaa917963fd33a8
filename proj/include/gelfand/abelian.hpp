#pragma once

#include <string>
#include <vector>

#include "gelfand/cyclotomic.hpp"

namespace gelfand {

/// Finite abelian group presented as a product of cyclic factors.
/// Multi-factor specs require prime-power factors (a single factor may be
/// any cyclic order).
class AbelianGroupSpec {
 public:
  AbelianGroupSpec() : factors_{1} {}
  explicit AbelianGroupSpec(std::vector<int> factors);
  static AbelianGroupSpec cyclic(int r) { return AbelianGroupSpec({r}); }
  static AbelianGroupSpec trivial() { return AbelianGroupSpec({1}); }

  const std::vector<int>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }
  /// lcm of the factor orders: conductor of the character values.
  int exponent() const { return exponent_; }
  bool all_prime_power() const { return all_prime_power_; }

  bool operator==(const AbelianGroupSpec& o) const { return factors_ == o.factors_; }
  bool operator!=(const AbelianGroupSpec& o) const { return factors_ != o.factors_; }

  std::string to_string() const;  // "3" or "2x2"

 private:
  std::vector<int> factors_;
  int order_ = 1;
  int exponent_ = 1;
  bool all_prime_power_ = true;
};

/// Element of an abelian group: one residue per cyclic factor.
using AbelianElement = std::vector<int>;

/// Order-2 automorphisms of interest.
enum class Tau { inversion, identity };

AbelianElement abelian_zero(const AbelianGroupSpec& spec);
AbelianElement abelian_add(const AbelianGroupSpec& spec, const AbelianElement& a,
                           const AbelianElement& b);
AbelianElement abelian_negate(const AbelianGroupSpec& spec, const AbelianElement& a);
AbelianElement abelian_tau(const AbelianGroupSpec& spec, Tau tau,
                           const AbelianElement& a);
/// a + a == 0, i.e. a lies in the involution subgroup I_A.
bool abelian_is_involution(const AbelianGroupSpec& spec, const AbelianElement& a);

/// All elements in lexicographic order (first coordinate most significant).
std::vector<AbelianElement> abelian_elements(const AbelianGroupSpec& spec);
/// Rank of an element in the lexicographic enumeration.
int abelian_index(const AbelianGroupSpec& spec, const AbelianElement& a);

/// The involution subgroup I_A = {a : 2a = 0}, in enumeration order.
std::vector<AbelianElement> abelian_involutions(const AbelianGroupSpec& spec);
/// The subgroup B = {2a : a in A} of squares, in enumeration order.
std::vector<AbelianElement> abelian_squares(const AbelianGroupSpec& spec);
/// Canonical (lexicographically least) representatives of the B-cosets,
/// in enumeration order of the representative.
std::vector<AbelianElement> abelian_square_coset_reps(const AbelianGroupSpec& spec);

/// Value of the irreducible character with the given dual index tuple
/// (one exponent per factor) at a.
Cyclotomic abelian_character(const AbelianGroupSpec& spec,
                             const std::vector<int>& dual_index,
                             const AbelianElement& a);

/// Dual index tuple of the t-th irreducible character in the canonical
/// enumeration (lexicographic tuples; for Z_r this is ascending exponent).
std::vector<int> dual_index_tuple(const AbelianGroupSpec& spec, int t);

/// Index of the character conj(psi o tau) in the canonical enumeration.
int dual_partner_index(const AbelianGroupSpec& spec, Tau tau, int t);

/// Twisted Frobenius-Schur indicator of the t-th irreducible character of A
/// with respect to tau; always 0 or 1 for abelian A.
int abelian_epsilon_tau(const AbelianGroupSpec& spec, Tau tau, int t);

std::string abelian_element_to_string(const AbelianElement& a);  // "1|0"
AbelianElement abelian_element_from_string(const AbelianGroupSpec& spec,
                                           const std::string& s);

}  // namespace gelfand
