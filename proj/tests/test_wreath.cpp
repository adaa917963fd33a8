#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gelfand/group_table.hpp"
#include "gelfand/partition.hpp"

using namespace gelfand;

namespace {

WreathElement make(const AbelianGroupSpec& spec, std::vector<int> images1,
                   std::vector<std::vector<int>> colors) {
  std::vector<AbelianElement> cols;
  for (auto& c : colors) cols.push_back(c);
  return WreathElement(spec, Permutation::from_one_line(images1),
                       std::move(cols));
}

}  // namespace

TEST_CASE("multiplication examples") {
  AbelianGroupSpec z2 = AbelianGroupSpec::cyclic(2);
  WreathElement id = WreathElement::identity(z2, 2);
  WreathElement g = make(z2, {2, 1}, {{1}, {0}});
  CHECK(multiply(g, id) == g);
  CHECK(multiply(id, g) == g);
  // diagonal subgroup is A^n
  WreathElement a = make(z2, {1, 2}, {{1}, {0}});
  WreathElement b = make(z2, {1, 2}, {{1}, {1}});
  CHECK(multiply(a, b) == make(z2, {1, 2}, {{0}, {1}}));
  // (colors (1,0), perm (1 2)) squared = (colors (1,1), perm id)
  CHECK(multiply(g, g) == make(z2, {1, 2}, {{1}, {1}}));
  CHECK(multiply(g, inverse(g)) == id);
  CHECK(multiply(inverse(g), g) == id);
}

TEST_CASE("transpose examples") {
  AbelianGroupSpec z3 = AbelianGroupSpec::cyclic(3);
  // diagonal: transpose fixes colors and perm
  WreathElement d = make(z3, {1, 2}, {{1}, {2}});
  CHECK(transpose(d) == d);
  // permutation-only: transpose inverts the permutation
  WreathElement p = make(z3, {2, 3, 1}, {{0}, {0}, {0}});
  CHECK(transpose(p).perm() == p.perm().inverse());
  // colors (1,0), perm (1 2): transpose moves the color across the pair
  WreathElement g = make(z3, {2, 1}, {{1}, {0}});
  CHECK(transpose(g) == make(z3, {2, 1}, {{0}, {1}}));
}

TEST_CASE("tau examples") {
  AbelianGroupSpec z3 = AbelianGroupSpec::cyclic(3);
  WreathElement zero = make(z3, {2, 1}, {{0}, {0}});
  CHECK(tau(zero) == zero);
  WreathElement g = make(z3, {1, 2}, {{1}, {2}});
  CHECK(tau(g) == make(z3, {1, 2}, {{2}, {1}}));
  AbelianGroupSpec z2 = AbelianGroupSpec::cyclic(2);
  for (const WreathElement& h : enumerate_wreath_group(z2, 2))
    CHECK(tau(h) == h);  // a = -a in Z_2
}

TEST_CASE("transpose and tau algebra, exhaustive at Z_3 wr S_3") {
  AbelianGroupSpec z3 = AbelianGroupSpec::cyclic(3);
  auto elements = enumerate_wreath_group(z3, 3);
  REQUIRE(elements.size() == 162);
  for (const WreathElement& g : elements) {
    CHECK(transpose(transpose(g)) == g);
    CHECK(transpose(g) == tau(inverse(g)));
    CHECK(tau(tau(g)) == g);
  }
  for (size_t i = 0; i < elements.size(); i += 7)
    for (size_t j = 0; j < elements.size(); j += 5) {
      const WreathElement& g = elements[i];
      const WreathElement& h = elements[j];
      CHECK(transpose(multiply(g, h)) ==
            multiply(transpose(h), transpose(g)));
      CHECK(tau(multiply(g, h)) == multiply(tau(g), tau(h)));
    }
}

TEST_CASE("generalized involutions") {
  // trivial colors: the involutions of S_3
  CHECK(generalized_involutions(AbelianGroupSpec::trivial(), 3).size() == 4);
  // A = Z_3, n = 1: all of A
  CHECK(generalized_involutions(AbelianGroupSpec::cyclic(3), 1).size() == 3);
  // A = Z_2, n = 2: 6 of the 8 elements
  auto v = generalized_involutions(AbelianGroupSpec::cyclic(2), 2);
  CHECK(v.size() == 6);
  for (const WreathElement& w : v) {
    CHECK(is_symmetric(w));
    CHECK(multiply(w, tau(w)) == WreathElement::identity(w.spec(), w.n()));
  }
}

TEST_CASE("twisted conjugation preserves symmetry") {
  AbelianGroupSpec z4 = AbelianGroupSpec::cyclic(4);
  auto group = enumerate_wreath_group(z4, 2);
  auto invs = generalized_involutions(z4, 2);
  for (const WreathElement& w : invs) {
    for (const WreathElement& g : group) {
      WreathElement c = twisted_conjugate(g, w);
      CHECK(is_symmetric(c));
    }
  }
  WreathElement id = WreathElement::identity(z4, 2);
  for (const WreathElement& w : invs) CHECK(twisted_conjugate(id, w) == w);
}

TEST_CASE("twisted orbit-stabilizer and centralizer examples") {
  for (int r : {2, 3}) {
    AbelianGroupSpec spec = AbelianGroupSpec::cyclic(r);
    auto group = make_group_table(spec, 2);
    TwistedClassTable twisted = make_twisted_class_table(group);
    for (size_t orb = 0; orb < twisted.orbits.size(); ++orb) {
      SubgroupDescriptor cent =
          twisted_centralizer(group, twisted.representative(orb));
      CHECK(static_cast<long long>(twisted.orbits[orb].size()) * cent.order() ==
            group->order());
    }
  }
  // w = identity over A = Z_r, n = 1: twisted centralizer is I_A
  for (int r : {2, 3, 4, 6}) {
    AbelianGroupSpec spec = AbelianGroupSpec::cyclic(r);
    auto group = make_group_table(spec, 1);
    SubgroupDescriptor cent =
        twisted_centralizer(group, WreathElement::identity(spec, 1));
    CHECK(cent.order() == (r % 2 == 0 ? 2 : 1));
  }
}

TEST_CASE("conjugacy class counts match r-partite counts") {
  CHECK(make_group_table(AbelianGroupSpec::trivial(), 3)->num_classes() == 3);
  CHECK(make_group_table(AbelianGroupSpec::cyclic(2), 2)->num_classes() == 5);
  CHECK(make_group_table(AbelianGroupSpec::cyclic(3), 2)->num_classes() == 9);
  CHECK(make_group_table(AbelianGroupSpec::cyclic(3), 3)->num_classes() ==
        static_cast<int>(enumerate_rpartite(3, 3).size()));
  CHECK(make_group_table(AbelianGroupSpec({2, 2}), 2)->num_classes() ==
        static_cast<int>(enumerate_rpartite(4, 2).size()));
}

TEST_CASE("colored cycle type is a class invariant") {
  auto group = make_group_table(AbelianGroupSpec::cyclic(3), 3);
  for (int c = 0; c < group->num_classes(); ++c) {
    ColoredCycleType type =
        colored_cycle_type(group->element(group->class_representative(c)));
    for (int idx : group->classes()[c])
      CHECK(colored_cycle_type(group->element(idx)) == type);
  }
}

TEST_CASE("class representatives are lexicographically least") {
  auto group = make_group_table(AbelianGroupSpec::cyclic(2), 3);
  for (int c = 0; c < group->num_classes(); ++c) {
    int rep = group->class_representative(c);
    for (int idx : group->classes()[c]) CHECK(rep <= idx);
  }
  for (int c = 0; c + 1 < group->num_classes(); ++c)
    CHECK(group->class_representative(c) < group->class_representative(c + 1));
}

TEST_CASE("element text forms") {
  AbelianGroupSpec z2 = AbelianGroupSpec::cyclic(2);
  WreathElement g = make(z2, {2, 1}, {{1}, {0}});
  CHECK(g.to_string() == "perm=2 1; colors=1,0");
  CHECK(WreathElement::parse(z2, 2, "perm=2 1; colors=1,0") == g);
  CHECK(WreathElement::parse(z2, 2, "perm=(1 2); colors=1,0") == g);
  AbelianGroupSpec z22({2, 2});
  WreathElement h = make(z22, {1, 2}, {{1, 0}, {0, 1}});
  CHECK(h.to_string() == "perm=1 2; colors=1|0,0|1");
  CHECK(WreathElement::parse(z22, 2, "perm=1 2; colors=1|0,0|1") == h);
  CHECK_THROWS(WreathElement::parse(z2, 2, "perm=2 1; colors=1"));
  CHECK_THROWS(WreathElement::parse(z2, 2, "perm=2 1; colors=2,0"));
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS(enumerate_wreath_group(AbelianGroupSpec::cyclic(10), 8));
  CHECK_THROWS(make_group_table(AbelianGroupSpec::cyclic(10), 8));
}

TEST_CASE("subgroup closure verification") {
  auto group = make_group_table(AbelianGroupSpec::cyclic(2), 2);
  WreathElement id = WreathElement::identity(group->spec(), 2);
  WreathElement g = make(group->spec(), {2, 1}, {{1}, {0}});
  CHECK_THROWS(
      SubgroupDescriptor(group, {group->index_of(id), group->index_of(g)}));
  SubgroupDescriptor closed = subgroup_closure(group, {group->index_of(g)});
  CHECK(closed.order() == 4);
}

TEST_CASE("abelian spec validation") {
  CHECK_THROWS(AbelianGroupSpec({6, 2}));  // 6 is not a prime power
  CHECK(AbelianGroupSpec({6}).order() == 6);
  CHECK(AbelianGroupSpec({2, 4}).order() == 8);
  CHECK(AbelianGroupSpec({2, 4}).exponent() == 4);
}
