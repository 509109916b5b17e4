#include <doctest.h>

#include "kinv/alexander.hpp"
#include "kinv/bracket.hpp"
#include "kinv/diagram.hpp"
#include "kinv/error.hpp"
#include "kinv/laurent.hpp"
#include "kinv/wirtinger.hpp"

using kinv::LaurentPoly;

namespace {

LaurentPoly poly(std::vector<long> coeffs, int min_exp) {
  std::vector<kinv::BigInt> c(coeffs.begin(), coeffs.end());
  return LaurentPoly(c, min_exp);
}

LaurentPoly t() { return LaurentPoly::monomial(1, 1); }

LaurentPoly alexander(const char* name) {
  return kinv::alexander_poly(kinv::presentation(kinv::table_lookup(name)));
}

const char* kKnots[] = {"unknot", "3_1", "4_1", "8_17", "conway", "kt"};

}  // namespace

TEST_CASE("Laurent arithmetic") {
  LaurentPoly a = poly({1, -1}, 0);  // 1 - t
  LaurentPoly b = poly({1, 1}, -1);  // t^-1 + 1
  CHECK((a * b).to_string() == "t^-1 - t");
  CHECK((a + b).to_string() == "t^-1 + 2 - t");
  CHECK((a - a).is_zero());
  CHECK((a - a).to_string() == "0");
  CHECK((a * b).divide_exact(b) == a);
  CHECK_THROWS((a * b + LaurentPoly(1)).divide_exact(b));
  CHECK(a.shifted(3).min_exponent() == 3);
  CHECK(a.inverted().to_string() == "-t^-1 + 1");
  CHECK(poly({3, 0, 0, 0, 5}, -4).compress_exponents(4).to_string() == "3*t^-1 + 5");
  CHECK(poly({0, 0, 2, 0}, 1).min_exponent() == 3);
  CHECK(poly({0, 0, 2, 0}, 1).max_exponent() == 3);
}

TEST_CASE("evaluation and normalization") {
  LaurentPoly p = poly({-1, 3, -1}, -1);
  CHECK(p.evaluate(1) == 1);
  CHECK(p.evaluate(-1) == 5);
  CHECK(poly({1, -3, 1}, 0).evaluate(2) == -1);
  CHECK(p.normalized().to_string() == "1 - 3*t + t^2");
  CHECK((-p).normalized() == p.normalized());
  CHECK(kinv::is_symmetric(poly({1, -3, 1}, 7)));
  CHECK_FALSE(kinv::is_symmetric(poly({1, -3, 2}, 0)));
}

TEST_CASE("big coefficients do not overflow") {
  LaurentPoly p = poly({1, 1}, 0);
  LaurentPoly q(1);
  for (int i = 0; i < 80; ++i) q = q * p;
  kinv::BigInt middle = q.coeff(40);
  CHECK(middle.str() == "107507208733336176461620");
}

TEST_CASE("Fox derivatives of a Wirtinger relator") {
  kinv::WirtingerPresentation p = kinv::presentation(kinv::table_lookup("3_1"));
  // the trefoil's crossings are negative: x2 = x3^-1 x1 x3
  kinv::Word r = kinv::relator(p.relations[0]);
  CHECK(kinv::fox_derivative(r, 2) == LaurentPoly(1) - t().inverted());
  CHECK(kinv::fox_derivative(r, 0) == t().inverted());
  CHECK(kinv::fox_derivative(r, 1) == LaurentPoly(-1));

  // on the mirror the crossings are positive and the row is {1 - t, t, -1}
  kinv::WirtingerPresentation m = kinv::presentation(kinv::mirror(kinv::table_lookup("3_1")));
  const kinv::Relation& rel = m.relations[0];
  REQUIRE(rel.sign == 1);
  kinv::Word w = kinv::relator(rel);
  CHECK(kinv::fox_derivative(w, rel.over) == LaurentPoly(1) - t());
  CHECK(kinv::fox_derivative(w, rel.u_in) == t());
  CHECK(kinv::fox_derivative(w, rel.u_out) == LaurentPoly(-1));
}

TEST_CASE("Fox matrix rows sum to zero") {
  for (const char* name : {"3_1", "4_1", "conway"}) {
    kinv::PolyMatrix m = kinv::fox_matrix(kinv::presentation(kinv::table_lookup(name)));
    for (const auto& row : m) {
      LaurentPoly sum;
      for (const auto& e : row) sum += e;
      CHECK(sum.is_zero());
    }
  }
  CHECK(kinv::fox_matrix(kinv::presentation(kinv::table_lookup("conway"))).size() == 11);
  CHECK_THROWS_AS(kinv::fox_matrix(kinv::presentation(kinv::parse_pd(""))), kinv::InvalidInput);
}

TEST_CASE("determinants") {
  kinv::PolyMatrix m = {{poly({2}, 0), poly({1}, 1)}, {poly({1}, -1), poly({1}, 0)}};
  CHECK(kinv::determinant(m) == LaurentPoly(1));
  kinv::PolyMatrix swap = {{LaurentPoly(), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly()}};
  CHECK(kinv::determinant(swap) == LaurentPoly(-1));
  CHECK(kinv::determinant({}) == LaurentPoly(1));
}

TEST_CASE("Alexander polynomials") {
  CHECK(alexander("unknot").to_string() == "1");
  CHECK(alexander("3_1").to_string() == "1 - t + t^2");
  CHECK(alexander("4_1").to_string() == "1 - 3*t + t^2");
  CHECK(alexander("8_17").to_string() == "1 - 4*t + 8*t^2 - 11*t^3 + 8*t^4 - 4*t^5 + t^6");
  CHECK(alexander("conway") == LaurentPoly(1));
  CHECK(alexander("kt") == LaurentPoly(1));
}

TEST_CASE("Alexander polynomial does not depend on the deleted row") {
  for (const char* name : {"3_1", "4_1", "8_17"}) {
    kinv::WirtingerPresentation p = kinv::presentation(kinv::table_lookup(name));
    for (std::size_t r = 0; r < p.relations.size(); ++r)
      CHECK(kinv::alexander_poly(p, r) == alexander(name));
  }
}

TEST_CASE("Alexander polynomial is blind to reversal and mirroring") {
  for (const char* name : kKnots) {
    kinv::Diagram d = kinv::table_lookup(name);
    LaurentPoly a = kinv::alexander_poly(kinv::presentation(d));
    CHECK(kinv::is_symmetric(a));
    CHECK(kinv::alexander_poly(kinv::presentation(kinv::reverse(d))) == a);
    CHECK(kinv::alexander_poly(kinv::presentation(kinv::mirror(d))) == a);
    CHECK(abs(a.evaluate(1)) == 1);
  }
}

TEST_CASE("Kauffman bracket") {
  CHECK(kinv::kauffman_bracket(kinv::parse_pd("")) == LaurentPoly(1));
  // one kink: <X> = -A^3 or -A^-3
  LaurentPoly k1 = kinv::kauffman_bracket(kinv::parse_pd("X[1,1,2,2]"));
  LaurentPoly k2 = kinv::kauffman_bracket(kinv::parse_pd("X[1,2,2,1]"));
  CHECK(k1 * k2 == LaurentPoly(1));
  CHECK((k1 == LaurentPoly::monomial(-1, 3) || k1 == LaurentPoly::monomial(-1, -3)));
  CHECK(kinv::jones(kinv::parse_pd("X[1,1,2,2]")) == LaurentPoly(1));
}

TEST_CASE("Jones polynomials") {
  CHECK(kinv::jones(kinv::table_lookup("unknot")).to_string() == "1");
  CHECK(kinv::jones(kinv::table_lookup("3_1")).to_string() == "-t^-4 + t^-3 + t^-1");
  CHECK(kinv::jones(kinv::mirror(kinv::table_lookup("3_1"))).to_string() == "t + t^3 - t^4");
  CHECK(kinv::jones(kinv::table_lookup("4_1")).to_string() == "t^-2 - t^-1 + 1 - t + t^2");
  LaurentPoly v817 = kinv::jones(kinv::table_lookup("8_17"));
  CHECK(v817.to_string() == "t^-4 - 3*t^-3 + 5*t^-2 - 6*t^-1 + 7 - 6*t + 5*t^2 - 3*t^3 + t^4");
  CHECK(kinv::jones(kinv::table_lookup("conway")) == kinv::jones(kinv::table_lookup("kt")));
}

TEST_CASE("Jones polynomial is blind to reversal") {
  for (const char* name : kKnots) {
    kinv::Diagram d = kinv::table_lookup(name);
    LaurentPoly v = kinv::jones(d);
    CHECK(kinv::jones(kinv::reverse(d)) == v);
    CHECK(kinv::jones(kinv::mirror(d)) == v.inverted());
    CHECK(v.evaluate(1) == 1);
  }
}

TEST_CASE("bracket size limit") {
  // (2,n) torus knot: X[i, i+n, i+1, i+n+1] for odd i, labels mod 2n
  auto torus = [](int n) {
    std::string pd;
    auto lbl = [n](int e) { return std::to_string((e - 1) % (2 * n) + 1); };
    for (int i = 1; i < 2 * n; i += 2)
      pd += "X[" + lbl(i) + "," + lbl(i + n) + "," + lbl(i + 1) + "," + lbl(i + n + 1) + "] ";
    return kinv::parse_pd(pd);
  };
  CHECK(torus(3).crossings() == kinv::table_lookup("3_1").crossings());
  CHECK(kinv::jones(torus(5)).to_string() == "-t^-7 + t^-6 - t^-5 + t^-4 + t^-2");
  CHECK_THROWS_AS(kinv::jones(torus(25)), kinv::ComputeError);
}
