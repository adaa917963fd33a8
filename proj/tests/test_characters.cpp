#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gelfand/characters.hpp"

using namespace gelfand;

namespace {

WreathElement make(const AbelianGroupSpec& spec, std::vector<int> images1,
                   std::vector<std::vector<int>> colors) {
  std::vector<AbelianElement> cols;
  for (auto& c : colors) cols.push_back(c);
  return WreathElement(spec, Permutation::from_one_line(images1),
                       std::move(cols));
}

CharacterLabel label_of(const AbelianGroupSpec& spec,
                        std::vector<Partition> comps) {
  REQUIRE(static_cast<int>(comps.size()) == spec.order());
  return CharacterLabel{RPartitePartition(std::move(comps))};
}

}  // namespace

TEST_CASE("psi_wr_lambda examples") {
  AbelianGroupSpec z2 = AbelianGroupSpec::cyclic(2);
  // trivial psi, lambda = (n): constant 1
  for (const WreathElement& g : enumerate_wreath_group(z2, 2))
    CHECK(psi_wr_lambda(z2, 0, Partition{2}, g) == Cyclotomic(1));
  // psi_1, lambda = (2), single 2-cycle with color product 1: value -1
  WreathElement g = make(z2, {2, 1}, {{1}, {0}});
  CHECK(psi_wr_lambda(z2, 1, Partition{2}, g) == Cyclotomic(-1));
  // lambda = (n): value is psi(color sum) times 1
  AbelianGroupSpec z4 = AbelianGroupSpec::cyclic(4);
  for (const WreathElement& h : enumerate_wreath_group(z4, 2)) {
    Cyclotomic expected = root_of_unity(4, h.color_sum()[0]);
    CHECK(psi_wr_lambda(z4, 1, Partition{2}, h) == expected);
  }
  CHECK_THROWS(psi_wr_lambda(z2, 0, Partition{3}, g));
}

TEST_CASE("chi_theta basic characters at Z_2 wr S_2") {
  AbelianGroupSpec z2 = AbelianGroupSpec::cyclic(2);
  auto group = make_group_table(z2, 2);
  // theta concentrated on trivial psi with one row: trivial character
  ClassFunction triv = chi_theta(group, label_of(z2, {Partition{2}, {}}));
  CHECK(triv == trivial_character(group));
  // theta(trivial) = (1,1): extended sign character
  ClassFunction sgn_ext = chi_theta(group, label_of(z2, {Partition{1, 1}, {}}));
  for (int c = 0; c < group->num_classes(); ++c) {
    const WreathElement& rep = group->element(group->class_representative(c));
    CHECK(sgn_ext.value_at_class(c) == Cyclotomic(rep.perm().sgn()));
  }
  // the five degrees are 1,1,1,1,2
  std::multiset<long long> degs;
  for (const CharacterLabel& label : all_labels(z2, 2)) {
    ClassFunction chi = chi_theta(group, label);
    CHECK(chi.degree_int() == degree(label));
    degs.insert(chi.degree_int());
  }
  CHECK(degs == std::multiset<long long>{1, 1, 1, 1, 2});
}

TEST_CASE("degree formula") {
  AbelianGroupSpec z2 = AbelianGroupSpec::cyclic(2);
  CHECK(degree(label_of(z2, {Partition{3}, {}})) == 1);
  CHECK(degree(label_of(z2, {Partition{1}, Partition{1}})) == 2);
  // Burnside: sum of squared degrees = |G| over P_3(3)
  long long sum = 0;
  for (const CharacterLabel& label : all_labels(AbelianGroupSpec::cyclic(3), 3))
    sum += degree(label) * degree(label);
  CHECK(sum == 162);
  // degree equals the r-partite tableau count
  for (const CharacterLabel& label : all_labels(AbelianGroupSpec::cyclic(3), 4))
    CHECK(degree(label) == count_rpartite_syt(label.theta));
  // synthetic non-abelian degrees: S_2 wr S_2 style bookkeeping
  CHECK(degree_general(2, {1, 2}, {Partition{}, Partition{2}}) == 4);
  CHECK(degree_general(3, {2, 1}, {Partition{2, 1}, Partition{}}) == 16);
}

TEST_CASE("orthonormality, completeness, class separation") {
  std::vector<std::pair<AbelianGroupSpec, int>> cases = {
      {AbelianGroupSpec::trivial(), 4},
      {AbelianGroupSpec::cyclic(2), 3},
      {AbelianGroupSpec::cyclic(3), 2},
      {AbelianGroupSpec::cyclic(4), 2},
      {AbelianGroupSpec({2, 2}), 2},
  };
  for (auto& [spec, n] : cases) {
    auto group = make_group_table(spec, n);
    CharacterTable table = character_table(group);
    long long deg2 = 0;
    for (size_t i = 0; i < table.irreducibles.size(); ++i) {
      deg2 += table.irreducibles[i].degree_int() *
              table.irreducibles[i].degree_int();
      for (size_t j = 0; j < table.irreducibles.size(); ++j) {
        Cyclotomic ip = inner_product(table.irreducibles[i],
                                      table.irreducibles[j]);
        CHECK(ip == Cyclotomic(i == j ? 1 : 0));
      }
    }
    CHECK(deg2 == group->order());
    // columns pairwise distinct: characters separate classes
    for (int c1 = 0; c1 < group->num_classes(); ++c1)
      for (int c2 = c1 + 1; c2 < group->num_classes(); ++c2) {
        bool distinct = false;
        for (const ClassFunction& chi : table.irreducibles)
          if (chi.value_at_class(c1) != chi.value_at_class(c2)) distinct = true;
        CHECK(distinct);
      }
  }
}

TEST_CASE("chi_theta agrees with generic subgroup induction, both modes") {
  std::vector<std::pair<AbelianGroupSpec, int>> cases = {
      {AbelianGroupSpec::cyclic(2), 2},
      {AbelianGroupSpec::cyclic(3), 2},
      {AbelianGroupSpec::trivial(), 3},
  };
  for (auto& [spec, n] : cases) {
    auto group = make_group_table(spec, n);
    for (const CharacterLabel& label : all_labels(spec, n)) {
      ClassFunction direct = chi_theta(group, label);
      CHECK(direct ==
            chi_theta_by_induction(group, label, InduceMode::elementwise));
      CHECK(direct ==
            chi_theta_by_induction(group, label, InduceMode::class_fusion));
    }
  }
}

TEST_CASE("induce examples") {
  AbelianGroupSpec z2 = AbelianGroupSpec::cyclic(2);
  auto group = make_group_table(z2, 2);
  // from the whole group: identity on characters
  auto whole = std::make_shared<const SubgroupDescriptor>(
      make_subgroup(group, [](const WreathElement&) { return true; }));
  ClassFunction t = trivial_character(whole);
  CHECK(induce(*whole, t) == trivial_character(group));
  // from the trivial subgroup: the regular character
  WreathElement id = WreathElement::identity(z2, 2);
  auto trivial_sub = std::make_shared<const SubgroupDescriptor>(
      SubgroupDescriptor(group, {group->index_of(id)}));
  ClassFunction reg = induce(*trivial_sub, trivial_character(trivial_sub));
  for (int c = 0; c < group->num_classes(); ++c) {
    const WreathElement& rep = group->element(group->class_representative(c));
    CHECK(reg.value_at_class(c) ==
          Cyclotomic(rep == id ? group->order() : 0));
  }
  // Ind_{I_A}^{Z_4}(1) = psi_0 + psi_2
  AbelianGroupSpec z4 = AbelianGroupSpec::cyclic(4);
  auto a_group = make_group_table(z4, 1);
  auto ia = std::make_shared<const SubgroupDescriptor>(
      make_subgroup(a_group, [&](const WreathElement& g) {
        return abelian_is_involution(z4, g.color(0));
      }));
  ClassFunction ind = induce(*ia, trivial_character(ia));
  auto mults = decompose(ind);
  REQUIRE(mults.size() == 4);
  for (auto& [label, mult] : mults) {
    // labels in P_4(1): exactly one component holds (1)
    int which = -1;
    for (int i = 0; i < 4; ++i)
      if (label.theta.component(i).size() == 1) which = i;
    CHECK(mult == (which % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("restrict branching") {
  // chi^{(2,1)} of S_3 restricted to S_2 x S_1 = chi^{(2)} + chi^{(1,1)}
  AbelianGroupSpec triv = AbelianGroupSpec::trivial();
  auto group = make_group_table(triv, 3);
  auto sub = std::make_shared<const SubgroupDescriptor>(
      make_subgroup(group, [](const WreathElement& g) {
        return g.perm()(2) == 2;
      }));
  ClassFunction chi21 =
      chi_theta(group, CharacterLabel{RPartitePartition({Partition{2, 1}})});
  ClassFunction res = restrict_to(chi21, sub);
  // the subgroup is S_2 on letters {1,2}: its classes are id and the swap
  REQUIRE(sub->num_classes() == 2);
  for (int c = 0; c < 2; ++c) {
    const WreathElement& rep = group->element(sub->class_representative(c));
    int swap_sign = rep.perm().sgn();
    // chi^{(2)} + chi^{(1,1)} at the swap: 1 + (-1) = 0; at id: 2
    CHECK(res.value_at_class(c) == Cyclotomic(swap_sign == 1 ? 2 : 0));
  }
}

TEST_CASE("Frobenius reciprocity on random subgroup-character pairs") {
  std::mt19937 rng(2024);
  std::vector<std::pair<AbelianGroupSpec, int>> cases = {
      {AbelianGroupSpec::cyclic(2), 3},
      {AbelianGroupSpec::cyclic(3), 2},
      {AbelianGroupSpec::cyclic(4), 2},
  };
  for (auto& [spec, n] : cases) {
    auto group = make_group_table(spec, n);
    auto labels = all_labels(spec, n);
    for (int trial = 0; trial < 34; ++trial) {
      // random subgroup from one or two generators
      std::uniform_int_distribution<int> pick(0, static_cast<int>(group->order()) - 1);
      std::vector<int> gens{pick(rng)};
      if (rng() % 2) gens.push_back(pick(rng));
      auto sub = std::make_shared<const SubgroupDescriptor>(
          subgroup_closure(group, gens));
      // random class function on the subgroup with small integer values
      std::uniform_int_distribution<int> small(-2, 2);
      std::vector<Cyclotomic> values;
      for (int c = 0; c < sub->num_classes(); ++c)
        values.push_back(Cyclotomic(small(rng)));
      ClassFunction a(sub, std::move(values));
      const CharacterLabel& label = labels[rng() % labels.size()];
      ClassFunction b = chi_theta(group, label);
      Cyclotomic lhs = inner_product(induce(*sub, a), b);
      Cyclotomic rhs = inner_product(a, restrict_to(b, sub));
      CHECK(lhs == rhs);
      // both induction routes agree
      CHECK(induce(*sub, a) == induce(*sub, a, InduceMode::elementwise));
    }
  }
}

TEST_CASE("epsilon_tau on wreath groups") {
  // trivial character has indicator 1 for any tau
  for (int r : {2, 3}) {
    auto group = make_group_table(AbelianGroupSpec::cyclic(r), 2);
    CHECK(epsilon_tau(trivial_character(group), Tau::inversion) == 1);
    CHECK(epsilon_tau(trivial_character(group), Tau::identity) == 1);
  }
  // with tau = inversion every irreducible of A wr S_n has indicator 1
  for (int r : {2, 3, 4}) {
    AbelianGroupSpec spec = AbelianGroupSpec::cyclic(r);
    auto group = make_group_table(spec, 2);
    for (const CharacterLabel& label : all_labels(spec, 2))
      CHECK(epsilon_tau(chi_theta(group, label), Tau::inversion) == 1);
  }
  // abelian level: tau = identity on Z_3 has indicator 0 off the trivial
  AbelianGroupSpec z3 = AbelianGroupSpec::cyclic(3);
  CHECK(abelian_epsilon_tau(z3, Tau::identity, 0) == 1);
  CHECK(abelian_epsilon_tau(z3, Tau::identity, 1) == 0);
  CHECK(abelian_epsilon_tau(z3, Tau::inversion, 1) == 1);
  AbelianGroupSpec z4 = AbelianGroupSpec::cyclic(4);
  for (int t = 0; t < 4; ++t)
    CHECK(abelian_epsilon_tau(z4, Tau::inversion, t) == 1);
  CHECK(abelian_epsilon_tau(z4, Tau::identity, 1) == 0);
  CHECK(abelian_epsilon_tau(z4, Tau::identity, 2) == 1);
}

TEST_CASE("count function u tau(u) = g is the multiplicity-free sum") {
  // Theorem-level equivalence at r <= 3, n <= 3
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      AbelianGroupSpec spec = AbelianGroupSpec::cyclic(r);
      auto group = make_group_table(spec, n);
      std::vector<long long> counts(group->order(), 0);
      for (const WreathElement& u : group->elements())
        counts[group->index_of(multiply(u, tau(u)))]++;
      ClassFunction count_fn = class_function_from(
          group, [&](const WreathElement& g) {
            return Cyclotomic(counts[group->index_of(g)]);
          });
      ClassFunction sum(group,
                        std::vector<Cyclotomic>(group->num_classes()));
      for (const CharacterLabel& label : all_labels(spec, n))
        sum += chi_theta(group, label);
      CHECK(count_fn == sum);
    }
  }
}

TEST_CASE("character table serialization") {
  auto group = make_group_table(AbelianGroupSpec::cyclic(2), 2);
  CharacterTable t = character_table(group);
  std::string json = character_table_json(t);
  CHECK(json.find("\"classes\"") != std::string::npos);
  CHECK(json.find("\"irreducibles\"") != std::string::npos);
  CHECK(json.find("\"conductor\"") != std::string::npos);
  // byte-identical on recomputation
  CHECK(json == character_table_json(character_table(
                    make_group_table(AbelianGroupSpec::cyclic(2), 2))));
  std::string tsv = character_table_tsv(t);
  CHECK(tsv.find("theta\t") != std::string::npos);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 6);  // header + 5 rows
}
