#include "gelfand/gim.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gelfand {

WreathElement standard_involution(const AbelianGroupSpec& spec, int n, int k) {
  if (2 * k > n) throw std::invalid_argument("need 2k <= n");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (int t = 0; t < k; ++t) std::swap(im[2 * t], im[2 * t + 1]);
  return WreathElement(spec, Permutation(std::move(im)),
                       std::vector<AbelianElement>(n, abelian_zero(spec)));
}

namespace {

// All k-tuples of A-elements in lexicographic order.
std::vector<std::vector<AbelianElement>> all_color_tuples(
    const AbelianGroupSpec& spec, int k) {
  std::vector<std::vector<AbelianElement>> out;
  std::vector<AbelianElement> elems = abelian_elements(spec);
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<AbelianElement> tuple(k);
    for (int i = 0; i < k; ++i) tuple[i] = elems[idx[i]];
    out.push_back(std::move(tuple));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == spec.order() - 1) idx[pos--] = 0;
    if (pos < 0) break;
    idx[pos]++;
  }
  return out;
}

bool in_Vk(const WreathElement& g, int k, Tau t) {
  // |g| maps omega_k-pairs to omega_k-pairs
  for (int i = 0; i < k; ++i) {
    int a = g.perm()(2 * i), b = g.perm()(2 * i + 1);
    if (a / 2 != b / 2) return false;
  }
  for (int i = 0; i < k; ++i)
    if (g.color(2 * i + 1) != abelian_tau(g.spec(), t, g.color(2 * i)))
      return false;
  return true;
}

}  // namespace

SubgroupDescriptor build_Vk(std::shared_ptr<const GroupTable> group_2k, Tau t) {
  if (group_2k->n() % 2 != 0)
    throw std::invalid_argument("build_Vk needs a group on 2k letters");
  int k = group_2k->n() / 2;
  SubgroupDescriptor sub = make_subgroup(
      group_2k, [k, t](const WreathElement& g) { return in_Vk(g, k, t); });
  long long expected = 1;
  for (int i = 1; i <= k; ++i) expected *= 2LL * i * group_2k->spec().order();
  if (sub.order() != expected)
    throw std::logic_error("V_k has unexpected order");
  return sub;
}

int sigma_k(const SubgroupDescriptor& vk, const WreathElement& g) {
  if (!vk.contains(vk.group().index_of(g)))
    throw std::invalid_argument("sigma_k: element is not in V_k");
  return g.perm().sgn();
}

std::string ModelVector::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

namespace {

void compositions_rec(int n, int parts, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    acc.push_back(n);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int v = n; v >= 0; --v) {
    acc.push_back(v);
    compositions_rec(n - v, parts - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<ModelVector> enumerate_model_vectors(int m, int n) {
  std::vector<ModelVector> out;
  for (int x0 = 0; 2 * x0 <= n; ++x0) {
    std::vector<std::vector<int>> comps;
    std::vector<int> acc;
    compositions_rec(n - 2 * x0, m, acc, comps);
    for (auto& c : comps) {
      ModelVector x;
      x.entries.push_back(x0);
      x.entries.insert(x.entries.end(), c.begin(), c.end());
      out.push_back(std::move(x));
    }
  }
  return out;
}

WreathElement epsilon_x(const AbelianGroupSpec& spec, int n,
                        const ModelVector& x,
                        const std::vector<AbelianElement>& reps) {
  if (static_cast<int>(reps.size()) != x.m())
    throw std::invalid_argument("epsilon_x: representative count mismatch");
  int total = 2 * x.x0();
  for (int i = 1; i < static_cast<int>(x.entries.size()); ++i)
    total += x.entries[i];
  if (total != n) throw std::invalid_argument("epsilon_x: invalid model vector");
  std::vector<AbelianElement> colors(n, abelian_zero(spec));
  int pos = 2 * x.x0();
  for (int i = 1; i < static_cast<int>(x.entries.size()); ++i)
    for (int j = 0; j < x.entries[i]; ++j) colors[pos++] = reps[i - 1];
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (int t = 0; t < x.x0(); ++t) std::swap(im[2 * t], im[2 * t + 1]);
  return WreathElement(spec, Permutation(std::move(im)), std::move(colors));
}

namespace {

// lambda table (values on I_A) assigned to the B-coset of rep, per the
// canonical section data.
std::vector<int> lambda_table_for(const SectionData& sd,
                                  const AbelianElement& rep) {
  return sd.lambda[abelian_index(sd.spec, rep)];
}

// Characters psi of A whose restriction to I_A equals the given table.
std::vector<int> psi_indices_restricting_to(const AbelianGroupSpec& spec,
                                            const std::vector<int>& table) {
  std::vector<AbelianElement> invs = abelian_involutions(spec);
  std::vector<int> out;
  for (int t = 0; t < spec.order(); ++t) {
    std::vector<int> tuple = dual_index_tuple(spec, t);
    bool match = true;
    for (size_t j = 0; j < invs.size() && match; ++j) {
      auto v = abelian_character(spec, tuple, invs[j]).as_rational_integer();
      if (!v || *v != table[j]) match = false;
    }
    if (match) out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<GimComponent> build_gim(std::shared_ptr<const GroupTable> group) {
  const AbelianGroupSpec& spec = group->spec();
  int n = group->n();
  SectionData sd = SectionData::canonical(spec);
  std::vector<AbelianElement> reps = abelian_square_coset_reps(spec);
  int m = static_cast<int>(reps.size());
  std::vector<AbelianElement> invs = abelian_involutions(spec);

  std::vector<GimComponent> out;
  for (const ModelVector& x : enumerate_model_vectors(m, n)) {
    WreathElement eps = epsilon_x(spec, n, x, reps);
    // block layout: [0, 2x0) then one block of x_i letters per i
    std::vector<int> block_of(n, 0);
    int pos = 2 * x.x0();
    for (int i = 1; i <= m; ++i)
      for (int j = 0; j < x.entries[i]; ++j) block_of[pos++] = i;
    std::vector<std::vector<int>> lambdas;
    for (int i = 0; i < m; ++i) lambdas.push_back(lambda_table_for(sd, reps[i]));

    auto member = [&, x](const WreathElement& g) {
      for (int i = 0; i < n; ++i)
        if (block_of[g.perm()(i)] != block_of[i]) return false;
      for (int t = 0; t < x.x0(); ++t) {
        int a = g.perm()(2 * t), b = g.perm()(2 * t + 1);
        if (a / 2 != b / 2) return false;
        if (g.color(2 * t + 1) != abelian_negate(spec, g.color(2 * t)))
          return false;
      }
      for (int i = 2 * x.x0(); i < n; ++i)
        if (!abelian_is_involution(spec, g.color(i))) return false;
      return true;
    };
    auto sub = std::make_shared<const SubgroupDescriptor>(
        make_subgroup(group, member));

    auto phi = [&, x](const WreathElement& g) -> Cyclotomic {
      // sgn of the block-0 part of |g|
      std::vector<int> first(2 * x.x0());
      for (int i = 0; i < 2 * x.x0(); ++i) first[i] = g.perm()(i);
      int value = Permutation(std::move(first)).sgn();
      for (int i = 2 * x.x0(); i < n; ++i) {
        const std::vector<int>& table = lambdas[block_of[i] - 1];
        AbelianElement c = g.color(i);
        size_t j = std::find(invs.begin(), invs.end(), c) - invs.begin();
        value *= table[j];
      }
      return Cyclotomic(value);
    };
    ClassFunction character = class_function_from(sub, phi);
    out.push_back(GimComponent{x, std::move(eps), std::move(sub),
                               std::move(character)});
  }
  return out;
}

std::vector<CharacterLabel> predict_component_constituents(const AbelianGroupSpec& spec, int n,
                                         const ModelVector& x) {
  SectionData sd = SectionData::canonical(spec);
  std::vector<AbelianElement> reps = abelian_square_coset_reps(spec);
  if (static_cast<int>(reps.size()) != x.m())
    throw std::invalid_argument("predict_component_constituents: model vector length mismatch");
  // psi-indices belonging to each lambda_i
  std::vector<std::vector<int>> fibers;
  for (const AbelianElement& rep : reps)
    fibers.push_back(
        psi_indices_restricting_to(spec, lambda_table_for(sd, rep)));
  std::vector<CharacterLabel> out;
  for (const CharacterLabel& label : all_labels(spec, n)) {
    bool ok = true;
    for (int i = 0; i < x.m() && ok; ++i) {
      int total = 0;
      for (int t : fibers[i]) total += odd_columns(label.theta.component(t));
      if (total != x.entries[i + 1]) ok = false;
    }
    if (ok) out.push_back(label);
  }
  return out;
}

std::vector<CharacterLabel> predict_vk_induction_core(
    const AbelianGroupSpec& spec, int k, const std::vector<int>& partner,
    const std::vector<int>& epsilon) {
  std::vector<CharacterLabel> out;
  for (const CharacterLabel& label : all_labels(spec, 2 * k)) {
    bool ok = true;
    for (int t = 0; t < spec.order() && ok; ++t) {
      const Partition& p = label.theta.component(t);
      if (label.theta.component(partner[t]) != p) ok = false;
      if (epsilon[t] == -1 && !all_even_columns(p)) ok = false;
      if (epsilon[t] == 1 && !all_even_rows(p)) ok = false;
    }
    if (ok) out.push_back(label);
  }
  return out;
}

std::vector<CharacterLabel> predict_vk_induction(const AbelianGroupSpec& spec,
                                              Tau tau, int k) {
  std::vector<int> partner(spec.order()), epsilon(spec.order());
  for (int t = 0; t < spec.order(); ++t) {
    partner[t] = dual_partner_index(spec, tau, t);
    epsilon[t] = abelian_epsilon_tau(spec, tau, t);
  }
  return predict_vk_induction_core(spec, k, partner, epsilon);
}

VkInductionReport verify_vk_induction(const AbelianGroupSpec& spec, Tau tau, int k,
                                bool allow_large) {
  VkInductionReport report;
  auto group = make_group_table(spec, 2 * k, allow_large);
  auto vk = std::make_shared<const SubgroupDescriptor>(build_Vk(group, tau));
  report.index = group->order() / vk->order();
  report.predicted = predict_vk_induction(spec, tau, k);
  for (const CharacterLabel& label : report.predicted)
    report.degree_total += degree(label);

  ClassFunction induced = induce(*vk, trivial_character(vk));
  report.pass = true;
  for (auto& [label, mult] : decompose(induced)) {
    if (mult != 0) report.computed.emplace_back(label, mult);
    bool should = std::find(report.predicted.begin(), report.predicted.end(),
                            label) != report.predicted.end();
    long long expected = should ? 1 : 0;
    if (mult != expected && report.pass) {
      report.pass = false;
      report.first_violation = "<Ind 1, chi_" + label.to_string() +
                               "> = " + std::to_string(mult) + ", expected " +
                               std::to_string(expected);
    }
  }
  if (report.pass && report.degree_total != report.index) {
    report.pass = false;
    report.first_violation =
        "predicted degree total " + std::to_string(report.degree_total) +
        " != index " + std::to_string(report.index);
  }
  return report;
}

GimReport verify_gim(std::shared_ptr<const GroupTable> group) {
  GimReport report;
  const AbelianGroupSpec& spec = group->spec();
  int n = group->n();
  std::vector<GimComponent> components = build_gim(group);
  report.component_count = static_cast<int>(components.size());
  if (spec.num_factors() == 1) {
    long long r = spec.factors()[0];
    report.expected_component_count =
        (r % 2 == 1) ? 1 + n / 2
                     : static_cast<long long>((n + 2) / 2) * ((n + 3) / 2);
  } else {
    report.expected_component_count =
        static_cast<long long>(enumerate_model_vectors(
                                   static_cast<int>(
                                       abelian_square_coset_reps(spec).size()),
                                   n)
                                   .size());
  }
  auto fail = [&](const std::string& msg) {
    if (report.first_violation.empty()) report.first_violation = msg;
  };
  if (report.component_count != report.expected_component_count)
    fail("component count mismatch");

  TwistedClassTable twisted = make_twisted_class_table(group);
  std::set<int> orbits_hit;
  ClassFunction total(group,
                      std::vector<Cyclotomic>(group->num_classes()));
  for (const GimComponent& comp : components) {
    // representative is a generalized involution in a fresh orbit
    if (!is_symmetric(comp.representative)) {
      fail("epsilon_x is not symmetric at x = " + comp.x.to_string());
      continue;
    }
    int orbit = twisted.orbit_of_involution(comp.representative);
    if (!orbits_hit.insert(orbit).second)
      fail("epsilon_x representatives collide in a twisted class at x = " +
           comp.x.to_string());
    // subgroup is the twisted centralizer
    SubgroupDescriptor cent = twisted_centralizer(group, comp.representative);
    if (cent.members() != comp.subgroup->members())
      fail("G_x is not the twisted centralizer at x = " + comp.x.to_string());
    // phi is a linear character: degree-1 values, multiplicative
    for (int a : comp.subgroup->members())
      for (int b : comp.subgroup->members()) {
        Cyclotomic lhs = comp.character.value_at_index(
            group->multiply_idx(a, b));
        Cyclotomic rhs = comp.character.value_at_index(a) *
                         comp.character.value_at_index(b);
        if (lhs != rhs) {
          fail("phi_x is not multiplicative at x = " + comp.x.to_string());
          break;
        }
      }
    // induced decomposition equals the prediction, multiplicity-free
    ClassFunction induced = induce(*comp.subgroup, comp.character);
    total += induced;
    std::vector<CharacterLabel> predicted = predict_component_constituents(spec, n, comp.x);
    std::vector<CharacterLabel> got;
    for (auto& [label, mult] : decompose(induced)) {
      if (mult == 0) continue;
      if (mult != 1)
        fail("Ind(phi_x) not multiplicity-free at x = " + comp.x.to_string());
      got.push_back(label);
    }
    std::ostringstream line;
    line << "x=" << comp.x.to_string()
         << " |C|=" << comp.subgroup->order() << " constituents " << got.size()
         << (got == predicted ? " == predicted" : " != predicted");
    report.component_lines.push_back(line.str());
    if (got != predicted)
      fail("per-x constituents differ from R(x) at x = " + comp.x.to_string());
  }
  if (static_cast<int>(orbits_hit.size()) !=
      static_cast<int>(twisted.orbits.size()))
    fail("some twisted class has no representative");
  // the model property: sum of inductions = multiplicity-free sum of Irr
  for (auto& [label, mult] : decompose(total))
    if (mult != 1)
      fail("sum of induced characters is not the multiplicity-free sum (chi_" +
           label.to_string() + " has multiplicity " + std::to_string(mult) +
           ")");
  report.pass = report.first_violation.empty();
  return report;
}

Permutation varpi_permutation(int k) {
  std::vector<int> im(2 * k);
  for (int i = 0; i < k; ++i) {
    im[2 * i] = i;
    im[2 * i + 1] = k + i;
  }
  return Permutation(std::move(im));
}

RestrictionReport verify_restriction_identities(const AbelianGroupSpec& spec, Tau tau, int k,
                            bool allow_large) {
  RestrictionReport report;
  auto fail = [&](const std::string& msg) {
    if (report.first_violation.empty()) report.first_violation = msg;
  };
  auto group = make_group_table(spec, 2 * k, allow_large);
  auto vk = std::make_shared<const SubgroupDescriptor>(build_Vk(group, tau));

  // Lemma 1: <1, Res_{V_k}(psi wr lambda)> for eps_tau(psi) != 0
  for (int t = 0; t < spec.order(); ++t) {
    int eps = abelian_epsilon_tau(spec, tau, t);
    if (eps == 0) continue;
    for (const Partition& lam : enumerate_partitions(2 * k)) {
      Cyclotomic sum;
      for (int idx : vk->members())
        sum += psi_wr_lambda(spec, t, lam, group->element(idx));
      sum /= Rational(vk->order());
      auto v = sum.as_rational_integer();
      if (!v) {
        fail("V_k restriction inner product is not an integer");
        continue;
      }
      long long expected =
          ((eps == 1 && all_even_rows(lam)) || (eps == -1 && all_even_columns(lam)))
              ? 1
              : 0;
      report.checks++;
      if (*v != expected)
        fail("V_k restriction value " + std::to_string(*v) + " at psi_" +
             std::to_string(t) + ", lambda = " + lam.to_string());
    }
  }

  // Lemma 2 needs a character with eps_tau = 0
  Permutation varpi = varpi_permutation(k);
  WreathElement varpi_el(spec, varpi,
                         std::vector<AbelianElement>(2 * k, abelian_zero(spec)));
  // I_k^tau built from its definition
  std::vector<int> ik;
  for (const Permutation& pi : enumerate_permutations(k)) {
    std::vector<int> im(2 * k);
    for (int i = 0; i < k; ++i) {
      im[i] = pi(i);
      im[k + i] = k + pi(i);
    }
    Permutation two_pi(im);
    for (const auto& h : all_color_tuples(spec, k)) {
      std::vector<AbelianElement> colors(2 * k);
      for (int i = 0; i < k; ++i) {
        colors[i] = h[i];
        colors[k + i] = abelian_tau(spec, tau, h[i]);
      }
      ik.push_back(group->index_of(WreathElement(spec, two_pi, colors)));
    }
  }
  std::sort(ik.begin(), ik.end());

  // subgroup identity: I_k = (G_k x G_k) cap varpi^{-1} V_k varpi
  std::vector<int> conj_vk;
  WreathElement varpi_inv = inverse(varpi_el);
  for (int idx : vk->members())
    conj_vk.push_back(group->index_of(
        conjugate_by(varpi_inv, group->element(idx))));
  std::sort(conj_vk.begin(), conj_vk.end());
  SubgroupDescriptor gkgk = s_theta_subgroup(group, {k, k});
  std::vector<int> intersection;
  for (int idx : gkgk.members())
    if (std::binary_search(conj_vk.begin(), conj_vk.end(), idx))
      intersection.push_back(idx);
  report.checks++;
  if (intersection != ik) fail("I_k identity fails as element sets");

  for (int t = 0; t < spec.order(); ++t) {
    if (abelian_epsilon_tau(spec, tau, t) != 0) continue;
    int tp = dual_partner_index(spec, tau, t);
    for (const Partition& lam : enumerate_partitions(k)) {
      for (const Partition& mu : enumerate_partitions(k)) {
        Cyclotomic sum;
        for (int idx : ik) {
          const WreathElement& g = group->element(idx);
          // split into the two G_k halves
          std::vector<int> im1(k), im2(k);
          std::vector<AbelianElement> c1(k), c2(k);
          for (int i = 0; i < k; ++i) {
            im1[i] = g.perm()(i);
            im2[i] = g.perm()(k + i) - k;
            c1[i] = g.color(i);
            c2[i] = g.color(k + i);
          }
          WreathElement g1(spec, Permutation(im1), c1);
          WreathElement g2(spec, Permutation(im2), c2);
          sum += psi_wr_lambda(spec, t, lam, g1) *
                 psi_wr_lambda(spec, tp, mu, g2);
        }
        sum /= Rational(static_cast<long long>(ik.size()));
        auto v = sum.as_rational_integer();
        report.checks++;
        long long expected = (lam == mu) ? 1 : 0;
        if (!v || *v != expected)
          fail("I_k pairing value at psi_" + std::to_string(t) + ", lambda = " +
               lam.to_string() + ", mu = " + mu.to_string());
      }
    }
  }
  report.pass = report.first_violation.empty();
  return report;
}

}  // namespace gelfand
