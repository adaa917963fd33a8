#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "gelfand/characters.hpp"
#include "gelfand/symmetric.hpp"

using namespace gelfand;

namespace {

std::vector<Permutation> involutions_of(int n) {
  std::vector<Permutation> out;
  for (const Permutation& p : enumerate_permutations(n))
    if (p.is_involution()) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("inv_set and pair_set") {
  CHECK(inv_set(Permutation::identity(4)).empty());
  CHECK(inv_set(Permutation::from_one_line({2, 1})).size() == 1);
  CHECK(inv_set(Permutation::from_one_line({4, 3, 2, 1})).size() == 6);
  CHECK(pair_set(Permutation::identity(3)).empty());
  auto pairs = pair_set(Permutation::from_one_line({2, 1, 4, 3}));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::make_pair(0, 1));
  CHECK(pairs[1] == std::make_pair(2, 3));
  CHECK(pair_set(Permutation::from_one_line({1, 5, 3, 4, 2})).size() == 1);
  CHECK_THROWS(pair_set(Permutation::from_one_line({2, 3, 1})));
}

TEST_CASE("sign_sym examples") {
  // simple reflection s_i against an involution pairing (i, i+1)
  Permutation s1 = Permutation::from_one_line({2, 1, 3});
  Permutation w = Permutation::from_one_line({2, 1, 3});
  CHECK(sign_sym(s1, w) == -1);
  CHECK(sign_sym(Permutation::identity(3), w) == 1);
  CHECK_THROWS(sign_sym(s1, Permutation::from_one_line({2, 3, 1})));
}

TEST_CASE("sign_sym restricted to a centralizer is the support signature") {
  // C_{S_4}((1 2)(3 4)): sign_sym(p, w) = signature of p (support = all)
  Permutation w = Permutation::from_one_line({2, 1, 4, 3});
  int count = 0;
  for (const Permutation& p : enumerate_permutations(4)) {
    if (compose(compose(p, w), p.inverse()) != w) continue;
    count++;
    CHECK(sign_sym(p, w) == p.sgn());
  }
  CHECK(count == 8);
}

TEST_CASE("cocycle identity for sign_sym, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto perms = enumerate_permutations(n);
    auto invs = involutions_of(n);
    for (const Permutation& w : invs)
      for (const Permutation& p2 : perms) {
        Permutation w2 = compose(compose(p2, w), p2.inverse());
        for (const Permutation& p1 : perms) {
          CHECK(sign_sym(compose(p1, p2), w) ==
                sign_sym(p1, w2) * sign_sym(p2, w));
        }
      }
  }
}

TEST_CASE("restriction to the centralizer is multiplicative, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : involutions_of(n)) {
      std::vector<Permutation> cent;
      for (const Permutation& p : enumerate_permutations(n))
        if (compose(compose(p, w), p.inverse()) == w) cent.push_back(p);
      for (const Permutation& a : cent)
        for (const Permutation& b : cent)
          CHECK(sign_sym(compose(a, b), w) ==
                sign_sym(a, w) * sign_sym(b, w));
    }
  }
}

TEST_CASE("mn_character examples") {
  for (const Partition& c : enumerate_partitions(5))
    CHECK(mn_character(Partition{5}, c) == 1);
  CHECK(mn_character(Partition{1, 1, 1}, Partition{1, 1, 1}) == 1);
  CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK_THROWS(mn_character(Partition{2, 1}, Partition{2}));
  // dimension = count_syt at the identity class
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> ones(n, 1);
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(mn_character(lam, Partition(ones)) == count_syt(lam));
  }
}

TEST_CASE("mn_character column orthogonality, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    auto classes = enumerate_partitions(n);
    for (const Partition& c1 : classes)
      for (const Partition& c2 : classes) {
        long long sum = 0;
        for (const Partition& lam : enumerate_partitions(n))
          sum += mn_character(lam, c1) * mn_character(lam, c2);
        CHECK(sum == (c1 == c2 ? centralizer_order(c1) : 0));
      }
  }
}

TEST_CASE("irs_constituents examples") {
  auto v = irs_constituents(2, 0);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Partition{1, 1});
  v = irs_constituents(2, 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Partition{2});
  v = irs_constituents(4, 0);
  REQUIRE(v.size() == 2);
  CHECK(std::find(v.begin(), v.end(), Partition{2, 2}) != v.end());
  CHECK(std::find(v.begin(), v.end(), Partition{1, 1, 1, 1}) != v.end());
  CHECK_THROWS(irs_constituents(4, 1));
  CHECK_THROWS(irs_constituents(2, 4));
}

TEST_CASE("irs_constituents agrees with brute-force induction, n <= 6") {
  // Induce sign_{S_n}(., w) from C_{S_n}(w) using the wreath machinery with
  // trivial colors.
  AbelianGroupSpec trivial = AbelianGroupSpec::trivial();
  for (int n = 2; n <= 6; ++n) {
    auto group = make_group_table(trivial, n);
    for (int f = n % 2; f <= n; f += 2) {
      int k = (n - f) / 2;
      // standard involution with k 2-cycles
      std::vector<int> im(n);
      for (int i = 0; i < n; ++i) im[i] = i;
      for (int t = 0; t < k; ++t) std::swap(im[2 * t], im[2 * t + 1]);
      Permutation w(im);
      auto cent = std::make_shared<const SubgroupDescriptor>(
          make_subgroup(group, [&](const WreathElement& g) {
            return compose(compose(g.perm(), w), g.perm().inverse()) == w;
          }));
      ClassFunction sign_char = class_function_from(
          cent, [&](const WreathElement& g) {
            return Cyclotomic(sign_sym(g.perm(), w));
          });
      ClassFunction induced = induce(*cent, sign_char);
      auto expected = irs_constituents(n, f);
      for (auto& [label, mult] : decompose(induced)) {
        const Partition& lam = label.theta.component(0);
        bool in = std::find(expected.begin(), expected.end(), lam) !=
                  expected.end();
        CHECK(mult == (in ? 1 : 0));
      }
    }
  }
}

TEST_CASE("centralizer linear characters") {
  auto desc = CentralizerDescriptor::standard(2);
  Permutation w = desc.omega(4);
  CHECK(w == Permutation::from_one_line({2, 1, 4, 3}));
  for (const Permutation& p : enumerate_permutations(4)) {
    if (compose(compose(p, w), p.inverse()) != w) continue;
    CHECK(centralizer_linear_character(desc, 1, p) == 1);
    CHECK(centralizer_linear_character(desc, 2, p) == p.sgn());
    CHECK(centralizer_linear_character(desc, 4, p) ==
          p.sgn() * centralizer_linear_character(desc, 3, p));
  }
  // block swap (1 3)(2 4) acts as one transposition on the two blocks
  Permutation swap_blocks = Permutation::from_one_line({3, 4, 1, 2});
  CHECK(centralizer_linear_character(desc, 3, swap_blocks) == -1);
  // (1 2) fixes both blocks
  Permutation t12 = Permutation::from_one_line({2, 1, 3, 4});
  CHECK(centralizer_linear_character(desc, 3, t12) == 1);
  CHECK(centralizer_linear_character(desc, 2, t12) == -1);
  CHECK_THROWS(centralizer_linear_character(
      desc, 1, Permutation::from_one_line({2, 3, 1, 4})));
}

TEST_CASE("induce_centralizer_linear matches Lemma IRS for i = 1, 2") {
  for (int k = 1; k <= 4; ++k) {
    // lambda_2 = sgn on the support: constituents have all even columns
    auto dec2 = induce_centralizer_linear(k, 2);
    std::vector<Partition> got2;
    for (auto& [p, m] : dec2) {
      CHECK(m == 1);
      got2.push_back(p);
    }
    auto expected2 = irs_constituents(2 * k, 0);
    std::sort(got2.begin(), got2.end());
    std::sort(expected2.begin(), expected2.end());
    CHECK(got2 == expected2);
    // lambda_1 = trivial: all even rows (the transposed family)
    auto dec1 = induce_centralizer_linear(k, 1);
    long long total = 0;
    for (auto& [p, m] : dec1) {
      CHECK(m == 1);
      CHECK(all_even_rows(p));
      total += 1;
    }
    long long even_rows = 0;
    for (const Partition& p : enumerate_partitions(2 * k))
      if (all_even_rows(p)) even_rows++;
    CHECK(total == even_rows);
  }
}

TEST_CASE("table1 rows n = 8 and n = 10") {
  Table1Row row = table1_row(8, 3);
  CHECK(row.verified);
  CHECK(row.multiplicity_two);
  CHECK(row.final_shapes[0] == Partition{4, 3, 1});
  CHECK(row.witness1 == Partition{3, 3});
  CHECK(row.witness2 == Partition{4, 1, 1});
  CHECK(row.mult1 == 1);
  CHECK(row.mult2 == 1);

  row = table1_row(8, 1);
  CHECK(row.verified);
  CHECK_FALSE(row.multiplicity_two);
  CHECK(row.final_shapes[0] == Partition{4, 4});
  CHECK(row.final_shapes[1] == Partition{2, 2, 2, 2});
  CHECK(row.transpose_pair);

  row = table1_row(10, 4);
  CHECK(row.verified);
  CHECK(row.final_shapes[0] == Partition{5, 2, 2, 1});
  CHECK(row.final_shapes[1] == Partition{4, 3, 1, 1, 1});

  for (int i = 1; i <= 4; ++i) {
    CHECK(table1_row(8, i).verified);
    CHECK(table1_row(10, i).verified);
  }
  // merged rows "1,2" share witnesses at n = 10
  CHECK(table1_row(10, 1).witness1 == table1_row(10, 2).witness1);

  CHECK_THROWS(table1_row(9, 1));
  CHECK_THROWS(table1_row(8, 5));
  CHECK_THROWS(table1_row(12, 1));  // needs allow_large
}

TEST_CASE("permutation parsing") {
  CHECK(Permutation::parse("3 1 2", 3) == Permutation::from_one_line({3, 1, 2}));
  CHECK(Permutation::parse("(1 3 2)", 3) ==
        Permutation::from_one_line({3, 1, 2}));
  CHECK(Permutation::parse("(1 2)(3 4)", 4) ==
        Permutation::from_one_line({2, 1, 4, 3}));
  CHECK(Permutation::parse("(1,3,2)", 3) ==
        Permutation::from_one_line({3, 1, 2}));
  CHECK(Permutation::from_one_line({3, 1, 2}).to_string() == "3 1 2");
  CHECK_THROWS(Permutation::parse("1 2", 3));
  CHECK_THROWS(Permutation::parse("(1 5)", 3));
}
