#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gelfand/characters.hpp"

namespace gelfand {

/// sign_r(a, x) for the cyclic group Z_r: -1 iff r is even and there is
/// k in [0, r/2-1] with x = 2k+1 and (a+k) mod r in [r/2, r-1].
int sign_cyclic(int r, int a, int x);

/// Product of sign_{r_i} over the factors (prime powers when there are
/// several).
int sign_abelian_concrete(const AbelianGroupSpec& spec, const AbelianElement& a,
                          const AbelianElement& x);

/// Coset sections and the orbit <-> Irr(I_A) assignment behind the abstract
/// sign function: s_orb picks B-coset representatives, s_inv picks
/// I_A-coset representatives, lambda[x] tabulates the character of I_A
/// assigned to the coset xB (values over abelian_involutions(spec)).
struct SectionData {
  AbelianGroupSpec spec;
  std::vector<AbelianElement> involutions;
  std::vector<int> orb_rep_index;            // per element index: s_orb(a)
  std::vector<int> inv_rep_index;            // per element index: s(a)
  std::vector<std::vector<int>> lambda;      // per element index, per involution

  /// Factorwise canonical choices: parity representatives for B-cosets,
  /// low-residue representatives for I_A-cosets, odd cosets assigned the
  /// nontrivial character (per even factor).
  static SectionData canonical(const AbelianGroupSpec& spec);
  /// Hard-errors when the sections or the character assignment are invalid.
  void validate() const;
};

/// sign_A(a, x) = lambda_x(a q(x) s(a q(x))^{-1}); always +-1 because I_A is
/// an elementary abelian 2-group (asserted).
int sign_abelian_abstract(const SectionData& sections, const AbelianElement& a,
                          const AbelianElement& x);

using AbelianSignFn =
    std::function<int(const AbelianElement&, const AbelianElement&)>;
AbelianSignFn concrete_sign(const AbelianGroupSpec& spec);
AbelianSignFn abstract_sign(std::shared_ptr<const SectionData> sections);

/// sign_{G_n}(g, w) = sign_{S_n}(|g|, |w|) * prod over fixed points i of
/// |w| of sign_A(z_g(i), z_w(i)); w must be symmetric.
int sign_wreath(const WreathElement& g, const WreathElement& w);
int sign_wreath(const WreathElement& g, const WreathElement& w,
                const AbelianSignFn& sign_a);

/// The same cocycle through the B(g, w) fixed-point set (cyclic A only):
/// (-1)^{|B(g,w)|} (-1)^{|Inv(|g|) cap Pair(|w|)|}.
int sign_rn(const WreathElement& g, const WreathElement& w);

/// Basis of the model space: all generalized involutions, canonical order.
struct ModelSpace {
  std::shared_ptr<const GroupTable> group;
  std::vector<WreathElement> basis;
  std::unordered_map<std::uint64_t, int> index;

  int dimension() const { return static_cast<int>(basis.size()); }
  int index_of(const WreathElement& w) const;
};

ModelSpace make_model_space(std::shared_ptr<const GroupTable> group);

/// Monomial transformation: basis vector i -> sign[i] * basis vector
/// target[i].
struct MonomialMap {
  std::vector<int> target;
  std::vector<int> sign;

  bool operator==(const MonomialMap& o) const {
    return target == o.target && sign == o.sign;
  }
  long long trace() const;
};

MonomialMap model_action(const ModelSpace& space, const WreathElement& g);
MonomialMap model_action(const ModelSpace& space, const WreathElement& g,
                         const AbelianSignFn& sign_a);
/// compose(a, b) applies b first: the map of g.h is compose(action g, action h).
MonomialMap compose(const MonomialMap& a, const MonomialMap& b);

/// Character of the model action (trace per class).
ClassFunction model_character(std::shared_ptr<const GroupTable> group);

/// Constituents of the cyclic subrepresentation generated by C_w, per the
/// odd-column statistics of w (cyclic A only).
std::vector<CharacterLabel> orbit_subrep_constituents(
    std::shared_ptr<const GroupTable> group, const WreathElement& w);

/// Characters of the subactions on the spans of the symmetric elements
/// with color determinant in / not in 2 Z_r (r even).
std::pair<ClassFunction, ClassFunction> chi_plus_minus(
    std::shared_ptr<const GroupTable> group);

/// Labels with Omega(theta) even / odd: the predicted constituents of
/// chi+ and chi-.
std::pair<std::vector<CharacterLabel>, std::vector<CharacterLabel>>
chi_plus_minus_predicted(const AbelianGroupSpec& spec, int n);

/// gamma(g) = (det(g)/det(|g|))^{r/p} as a class function value.
Cyclotomic gamma_value(const AbelianGroupSpec& spec, int p,
                       const WreathElement& g);
/// Pointwise product gamma . f;  p must divide r.
ClassFunction gamma_twist(int p, const ClassFunction& f);
/// On irreducibles the twist rotates the label: theta'_i = theta_{i - r/p}.
CharacterLabel gamma_twist_label(const AbelianGroupSpec& spec, int p,
                                 const CharacterLabel& label);

struct GelfandReport {
  bool pass = false;
  long long model_dimension = 0;
  long long degree_sum = 0;
  std::vector<std::pair<CharacterLabel, long long>> multiplicities;
  std::string first_violation;
};

/// Checks <model character, chi_theta> = 1 for every theta and the
/// dimension identity.
GelfandReport verify_gelfand(const AbelianGroupSpec& spec, int n,
                             bool allow_large = false);

struct CountsReport {
  long long involution_count = 0;
  long long degree_sum = 0;
  bool pass = false;
};

/// #generalized involutions vs sum of irreducible degrees.
CountsReport counts_report(const AbelianGroupSpec& spec, int n,
                           bool allow_large = false);

}  // namespace gelfand
