#include <doctest.h>

#include <unordered_set>

#include "kinv/error.hpp"
#include "kinv/perm.hpp"

using kinv::Permutation;

TEST_CASE("cycle notation round trip") {
  Permutation p = kinv::parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(p.degree() == 6);
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[5] == 5);
  CHECK(p.to_cycles() == "(1,2,3)(4,5)");
  CHECK(kinv::parse_cycles(p.to_cycles(), 6) == p);
  CHECK(Permutation::identity(4).to_cycles() == "()");
  CHECK(kinv::parse_cycles("()", 4).is_identity());
}

TEST_CASE("product applies the right factor first") {
  Permutation a = kinv::parse_cycles("(1,2)", 3);
  Permutation b = kinv::parse_cycles("(2,3)", 3);
  CHECK((a * b).to_cycles() == "(1,2,3)");
  CHECK((b * a).to_cycles() == "(1,3,2)");
}

TEST_CASE("inverse, order and conjugation") {
  Permutation p = kinv::parse_cycles("(1,2,3,4)(5,6)", 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK(kinv::element_order(p) == 4);
  CHECK(kinv::element_order(Permutation::identity(3)) == 1);
  Permutation c = kinv::parse_cycles("(1,5)", 6);
  Permutation q = kinv::conjugate(p, c);
  CHECK(q == c * p * c.inverse());
  CHECK(q.to_cycles() == "(1,6)(2,3,4,5)");
  CHECK(p.first_moved() == 0);
  CHECK(kinv::parse_cycles("(3,4)", 5).first_moved() == 2);
}

TEST_CASE("malformed cycles are rejected") {
  CHECK_THROWS_AS(kinv::parse_cycles("(1,2,1)", 3), kinv::ParseError);
  CHECK_THROWS_AS(kinv::parse_cycles("(1,4)", 3), kinv::ParseError);
  CHECK_THROWS_AS(kinv::parse_cycles("(0,1)", 3), kinv::ParseError);
  CHECK_THROWS_AS(kinv::parse_cycles("(1,2", 3), kinv::ParseError);
  CHECK_THROWS_AS(kinv::parse_cycles("1,2)", 3), kinv::ParseError);
  CHECK_THROWS_AS(kinv::parse_cycles("(1,2)(2,3)", 3), kinv::ParseError);
  CHECK_THROWS(Permutation::from_images({0, 0, 1}));
}

TEST_CASE("hash agrees with equality") {
  std::unordered_set<Permutation, kinv::PermutationHash> s;
  s.insert(kinv::parse_cycles("(1,2)", 3));
  s.insert(kinv::parse_cycles("(2,1)", 3));
  s.insert(kinv::parse_cycles("(1,3)", 3));
  CHECK(s.size() == 2);
}
