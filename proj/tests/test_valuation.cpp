#include <random>

#include "doctest.h"
#include "parityforge/errors.hpp"
#include "parityforge/valuation.hpp"

using namespace parityforge;

namespace {

// Independent oracle: halve until odd, counting.
ParityDecomposition halving_oracle(Natural n) {
  REQUIRE(n != 0);
  ParityDecomposition d;
  d.n = n;
  while (is_even(n)) {
    n /= 2;
    ++d.degree;
  }
  d.odd_part = n;
  return d;
}

}  // namespace

TEST_CASE("decompose matches the halving oracle on small ranges") {
  for (Natural n = 1; n <= 4096; ++n) {
    CHECK(decompose(n) == halving_oracle(n));
  }
}

TEST_CASE("decompose of 0 is a domain error") {
  CHECK_THROWS_AS(decompose(0), DomainError);
}

TEST_CASE("worked decompositions: 28, 30, 32, 40") {
  CHECK(decompose(28) == ParityDecomposition{28, 2, 7});
  CHECK(decompose(30) == ParityDecomposition{30, 1, 15});
  CHECK(decompose(32) == ParityDecomposition{32, 5, 1});
  CHECK(decompose(40) == ParityDecomposition{40, 3, 5});
}

TEST_CASE("recompose inverts decompose") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Natural n = rng() % 1000000 + 1;
    CHECK(recompose(decompose(n)) == n);
  }
}

TEST_CASE("product of decompositions: 12 * 6 = 2^3 * 9") {
  ParityDecomposition p = multiply_decomposed(decompose(12), decompose(6));
  CHECK(p.degree == 3);
  CHECK(p.odd_part == 9);
  CHECK(p.n == 72);
}

TEST_CASE("square of a decomposition: 6^2 = 2^2 * 9") {
  ParityDecomposition p = multiply_decomposed(decompose(6), decompose(6));
  CHECK(p.degree == 2);
  CHECK(p.odd_part == 9);
  CHECK(square_degree(6) == 2);
}

TEST_CASE("valuation laws on random pairs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    Natural a = rng() % 1000000 + 1;
    Natural b = rng() % 1000000 + 1;
    ParityDecomposition da = decompose(a), db = decompose(b);
    ParityDecomposition prod = decompose(a * b);
    CHECK(prod.degree == da.degree + db.degree);
    CHECK(prod.odd_part == da.odd_part * db.odd_part);
    CHECK(square_degree(a) % 2 == 0);
    CHECK(cube_degree(a) % 3 == 0);
    CHECK(square_degree(a) == 2 * da.degree);
    CHECK(cube_degree(a) == 3 * da.degree);
  }
}

TEST_CASE("base decomposition") {
  BaseDecomposition d = base_decompose(3, 45);
  CHECK(d.exponent == 2);
  CHECK(d.cofactor == 5);
  CHECK(base_decompose(5, 50).exponent == 2);
  CHECK(base_decompose(7, 10).exponent == 0);
  CHECK(base_decompose(7, 10).cofactor == 10);
}

TEST_CASE("big integers survive the round trip") {
  Natural big = pow2(300) * 1234567891;
  ParityDecomposition d = decompose(big);
  CHECK(d.degree == 300);
  CHECK(d.odd_part == 1234567891);
  CHECK(recompose(d) == big);
}
