#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gelfand/cyclotomic.hpp"

using namespace gelfand;

namespace {

Cyclotomic random_cyclotomic(int conductor, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> raw(conductor);
  for (Rational& c : raw) c = Rational(coeff(rng), den(rng));
  return Cyclotomic(conductor, std::move(raw));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  for (int L = 1; L <= 24; ++L)
    CHECK(static_cast<int>(cyclotomic_polynomial(L).size()) == euler_phi(L) + 1);
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(1, 0) == Cyclotomic(1));
  CHECK(root_of_unity(2, 1) == Cyclotomic(-1));
  CHECK(root_of_unity(4, 1) + root_of_unity(4, 3) == Cyclotomic(0));
  CHECK(root_of_unity(6, 2) == root_of_unity(3, 1));
  CHECK(root_of_unity(5, 7) == root_of_unity(5, 2));
  CHECK(root_of_unity(5, -1) == root_of_unity(5, 4));
  // geometric sums vanish
  for (int L : {2, 3, 4, 5, 6, 8, 12}) {
    Cyclotomic sum;
    for (int k = 0; k < L; ++k) sum += root_of_unity(L, k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("as_rational_integer") {
  CHECK(Cyclotomic(1).as_rational_integer() == 1);
  CHECK_FALSE(root_of_unity(3, 1).as_rational_integer().has_value());
  Cyclotomic z3 = root_of_unity(3, 1);
  CHECK((z3 + z3 * z3).as_rational_integer() == -1);
  Cyclotomic half(Rational(1, 2));
  CHECK_FALSE(half.as_rational_integer().has_value());
  CHECK(half.as_rational() == Rational(1, 2));
}

TEST_CASE("conjugation") {
  CHECK(conjugate(root_of_unity(3, 1)) == root_of_unity(3, 2));
  CHECK(root_of_unity(6, 1) * root_of_unity(6, 5) == Cyclotomic(1));
  std::mt19937 rng(7);
  for (int L : {1, 2, 3, 4, 6, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic x = random_cyclotomic(L, rng);
      Cyclotomic y = random_cyclotomic(L, rng);
      CHECK(conjugate(conjugate(x)) == x);
      CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
      CHECK(conjugate(x + y) == conjugate(x) + conjugate(y));
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int L : {1, 2, 3, 4, 6, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a = random_cyclotomic(L, rng);
      Cyclotomic b = random_cyclotomic(L, rng);
      Cyclotomic c = random_cyclotomic(L, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Cyclotomic(0) == a);
      CHECK(a * Cyclotomic(1) == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("mixed conductors and embedding compatibility") {
  // computing at L then embedding to 2L commutes with computing at 2L
  std::mt19937 rng(13);
  for (int L : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 10; ++trial) {
      Cyclotomic a = random_cyclotomic(L, rng);
      Cyclotomic b = random_cyclotomic(L, rng);
      CHECK((a * b).embedded(2 * L) == a.embedded(2 * L) * b.embedded(2 * L));
      CHECK((a + b).embedded(2 * L) == a.embedded(2 * L) + b.embedded(2 * L));
    }
  }
  // mixed-conductor operands promote to the lcm
  Cyclotomic z4 = root_of_unity(4, 1);
  Cyclotomic z6 = root_of_unity(6, 1);
  Cyclotomic prod = z4 * z6;
  CHECK(prod.conductor() == 12);
  CHECK(prod == root_of_unity(12, 3 + 2));
  CHECK(root_of_unity(4, 2) == root_of_unity(2, 1));  // equality across conductors
}

TEST_CASE("human-readable forms") {
  CHECK(Cyclotomic(1).to_string() == "1");
  CHECK(Cyclotomic(-1).to_string() == "-1");
  CHECK(root_of_unity(4, 1).to_string() == "z4");
  Cyclotomic z3 = root_of_unity(3, 1);
  CHECK((z3 + z3 * z3).to_string() == "-1");
  Cyclotomic x = root_of_unity(8, 1) * Cyclotomic(2) + Cyclotomic(1);
  CHECK(x.to_string() == "1+2*z8");
}
