#include <doctest.h>

#include "mpflow/errors.hpp"
#include "mpflow/matrix.hpp"

using namespace mpf;

TEST_CASE("rational parsing") {
  CHECK(parse_rat("77/120") == Rat(77, 120));
  CHECK(parse_rat("-1/8") == Rat(-1, 8));
  CHECK(parse_rat("10") == Rat(10));
  CHECK(rat_string(parse_rat("6/4")) == "3/2");
  CHECK(rat_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("a/b"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK_THROWS_AS(parse_rat("1/2/3"), Error);
}

TEST_CASE("determinants") {
  CHECK(bareiss_det(IntMatrix::identity(3)) == 1);
  CHECK(bareiss_det(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(bareiss_det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(bareiss_det(IntMatrix{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}) == -90);
}

TEST_CASE("rank") {
  CHECK(int_rank(IntMatrix::identity(4)) == 4);
  CHECK(int_rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(int_rank(IntMatrix{{1, 0, 2}, {0, 1, 3}}) == 2);
  CHECK(int_rank(IntMatrix(2, 3)) == 0);
}

TEST_CASE("unimodular inverse") {
  CHECK(invert_unimodular(IntMatrix::identity(3)) == IntMatrix::identity(3));
  IntMatrix e{{1, 1}, {0, 1}};
  CHECK(invert_unimodular(e) == IntMatrix{{1, -1}, {0, 1}});
  IntMatrix b{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
  CHECK(b * invert_unimodular(b) == IntMatrix::identity(3));
  CHECK_THROWS_AS(invert_unimodular(IntMatrix{{2, 0}, {0, 3}}), Error);
}

TEST_CASE("matrix ops") {
  IntMatrix a{{1, 2, 3}, {4, 5, 6}};
  CHECK(a.select_columns({2, 0}) == IntMatrix{{3, 1}, {6, 4}});
  CHECK(a * IntVec{1, 0, -1} == IntVec{-2, -2});
  CHECK(dot(IntVec{1, 2}, IntVec{3, 4}) == 11);
  CHECK_THROWS_AS(dot(IntVec{1}, IntVec{1, 2}), Error);
}
