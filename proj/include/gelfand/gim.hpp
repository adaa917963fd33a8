#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gelfand/characters.hpp"
#include "gelfand/model.hpp"

namespace gelfand {

/// The standard fixed-point-free involution omega_k = (1 2)(3 4)...(2k-1 2k)
/// inside S_n (0-based pairs (2t, 2t+1)), as a colorless wreath element.
WreathElement standard_involution(const AbelianGroupSpec& spec, int n, int k);

/// V_k^tau <= G_{2k}: permutation centralizes omega_k, colors satisfy
/// z(2t+1) = tau(z(2t)).  Order |A|^k 2^k k!.
SubgroupDescriptor build_Vk(std::shared_ptr<const GroupTable> group_2k,
                            Tau tau = Tau::inversion);

/// sigma_k^tau(g) = sgn(|g|) on V_k^tau; errors on non-members.
int sigma_k(const SubgroupDescriptor& vk, const WreathElement& g);

/// Nonnegative x = (x_0, x_1, ..., x_m) with 2 x_0 + sum_{i>=1} x_i = n.
struct ModelVector {
  std::vector<int> entries;

  int x0() const { return entries[0]; }
  int m() const { return static_cast<int>(entries.size()) - 1; }
  std::string to_string() const;
};

/// All of U_m(n): x_0 ascending, then the remaining composition in
/// decreasing lexicographic order.
std::vector<ModelVector> enumerate_model_vectors(int m, int n);

/// epsilon_x = ((1...1, eps_1...,eps_m...), omega_{x_0}); reps are the
/// twisted-orbit representatives of I_{A,tau} = A (canonical: least element
/// of each B-coset).
WreathElement epsilon_x(const AbelianGroupSpec& spec, int n,
                        const ModelVector& x,
                        const std::vector<AbelianElement>& reps);

/// One generalized-involution-model component: the representative
/// epsilon_x, its twisted centralizer G_x^tau and the linear character
/// phi_x^tau on it.
struct GimComponent {
  ModelVector x;
  WreathElement representative;
  std::shared_ptr<const SubgroupDescriptor> subgroup;
  ClassFunction character;
};

/// The full model of Theorem-style components for A wr S_n with respect to
/// the inverse-transpose automorphism (tau = inversion on colors).
std::vector<GimComponent> build_gim(std::shared_ptr<const GroupTable> group);

/// R(x): labels theta such that for each i >= 1 the components theta(psi)
/// with Res_{I_A} psi = lambda_i have x_i odd columns in total.
std::vector<CharacterLabel> predict_component_constituents(const AbelianGroupSpec& spec, int n,
                                         const ModelVector& x);

/// Constituents of Ind_{V_k^tau}^{G_{2k}}(1): theta with
/// theta(psi) = theta(conj(tau psi)), all even columns when
/// eps_tau(psi) = -1, all even rows when eps_tau(psi) = +1.
std::vector<CharacterLabel> predict_vk_induction(const AbelianGroupSpec& spec,
                                              Tau tau, int k);
/// Same filter with explicit partner/indicator data (lets tests exercise
/// the eps = -1 branch, which abelian groups never produce).
std::vector<CharacterLabel> predict_vk_induction_core(
    const AbelianGroupSpec& spec, int k, const std::vector<int>& partner,
    const std::vector<int>& epsilon);

struct VkInductionReport {
  bool pass = false;
  long long index = 0;        // |G_{2k}| : |V_k^tau|
  long long degree_total = 0; // sum of predicted degrees
  std::vector<CharacterLabel> predicted;
  std::vector<std::pair<CharacterLabel, long long>> computed;  // nonzero mults
  std::string first_violation;
};

/// Brute-force Ind_{V_k^tau}(1) against the predicted constituents.
VkInductionReport verify_vk_induction(const AbelianGroupSpec& spec, Tau tau, int k,
                                bool allow_large = false);

struct GimReport {
  bool pass = false;
  int component_count = 0;
  long long expected_component_count = 0;
  std::vector<std::string> component_lines;
  std::string first_violation;
};

/// Checks the generalized-involution-model axioms and the per-component
/// decompositions for A wr S_n, tau = inversion.
GimReport verify_gim(std::shared_ptr<const GroupTable> group);

struct RestrictionReport {
  bool pass = false;
  int checks = 0;
  std::string first_violation;
};

/// The 0/1 restriction inner products over V_k and I_k plus the subgroup
/// identity I_k^tau = (G_k x G_k) cap varpi_k^{-1} V_k^tau varpi_k.
RestrictionReport verify_restriction_identities(const AbelianGroupSpec& spec, Tau tau, int k,
                            bool allow_large = false);

/// varpi_k in S_{2k}: 1-based varpi(2i-1) = i, varpi(2i) = k+i.
Permutation varpi_permutation(int k);

}  // namespace gelfand
