#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qtoda/polynomial.hpp"
#include "test_util.hpp"

using namespace qtoda;

TEST_CASE("variable tables reject duplicates and expose weights") {
  VarTableRef t = make_vars({{"p", 2}, {"q", 2}});
  CHECK(t->size() == 4);
  CHECK(t->name(0) == "p1");
  CHECK(t->name(3) == "q2");
  CHECK(t->weight(0) == 1);
  CHECK(t->weight(2) == 2);
  CHECK(t->index_of("q1") == 2);
  CHECK(t->index_of("zz") == -1);
  CHECK_THROWS_AS(VarTable::make({{"a", 1}, {"a", 1}}), std::invalid_argument);
}

TEST_CASE("canonical text round trips") {
  VarTableRef t = make_vars({{"p", 2}, {"q", 2}});
  for (const char* s : {"0", "1", "-1/2", "p1", "-p1^2 + p1*p2 - p2^2 + q1 + q2",
                        "p1^2*p2 - p1*p2^2 - p2*q1 + p1*q2", "3/7*p1*q2^3 - 2*q1"}) {
    Polynomial f = Polynomial::parse(t, s);
    CHECK(f.to_string() == s);
    CHECK(Polynomial::parse(t, f.to_string()) == f);
  }
}

TEST_CASE("ring axioms hold on random polynomials") {
  VarTableRef t = make_vars({{"a", 2}, {"q", 2}});
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 120; ++i) {
    Polynomial f = testutil::random_poly(rng, t, 4, 3);
    Polynomial g = testutil::random_poly(rng, t, 4, 3);
    Polynomial h = testutil::random_poly(rng, t, 4, 3);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(f + g == g + f);
    CHECK(f - f == Polynomial::zero(t));
    CHECK(f * Polynomial::constant(t, Rat(1)) == f);
  }
}

TEST_CASE("weighted degree and homogeneity") {
  VarTableRef t = make_vars({{"p", 2}, {"q", 2}});
  Polynomial f = Polynomial::parse(t, "p1^2 - q1");
  CHECK(f.weighted_degree() == 2);
  CHECK(f.is_homogeneous());
  Polynomial g = Polynomial::parse(t, "p1^3 + p2*q2");
  CHECK(g.is_homogeneous());
  CHECK(!(f + g).is_homogeneous());
  // Degree is additive on products of homogeneous inputs.
  CHECK((f * g).is_homogeneous());
  CHECK((f * g).weighted_degree() == 5);
}

TEST_CASE("derivative satisfies Leibniz on random inputs") {
  VarTableRef t = make_vars({{"x", 3}});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = testutil::random_poly(rng, t, 3, 3);
    Polynomial g = testutil::random_poly(rng, t, 3, 3);
    for (size_t v = 0; v < 3; ++v) {
      CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
  }
}

TEST_CASE("substitution composes with evaluation") {
  VarTableRef src = make_vars({{"x", 2}});
  VarTableRef dst = make_vars({{"y", 2}});
  Polynomial f = Polynomial::parse(src, "x1^2 - 2*x1*x2 + 3");
  std::map<size_t, Polynomial> images = {
      {0, Polynomial::parse(dst, "y1 + y2")},
      {1, Polynomial::parse(dst, "y1 - y2")},
  };
  Polynomial g = f.substitute(dst, images);
  std::vector<Rat> pt = {rat(3, 2), rat(-1, 3)};
  std::vector<Rat> src_pt = {pt[0] + pt[1], pt[0] - pt[1]};
  CHECK(g.eval_rat(pt) == f.eval_rat(src_pt));

  // Unmapped used variables are an error.
  std::map<size_t, Polynomial> partial = {{0, Polynomial::parse(dst, "y1")}};
  CHECK_THROWS_AS(f.substitute(dst, partial), std::invalid_argument);
}

TEST_CASE("transplant matches variables by name") {
  VarTableRef small = make_vars({{"p", 1}, {"q", 1}});
  VarTableRef big = make_vars({{"p", 2}, {"q", 2}});
  Polynomial f = Polynomial::parse(small, "p1^2 - q1");
  CHECK(f.transplant(big).to_string() == "p1^2 - q1");
  VarTableRef missing = make_vars({{"z", 2}});
  CHECK_THROWS_AS(f.transplant(missing), std::invalid_argument);
}

TEST_CASE("collect splits by one variable's exponent") {
  VarTableRef t = make_vars({{"p", 1}, {"q", 1}});
  Polynomial f = Polynomial::parse(t, "p1^2*q1 + p1^2 - 3*q1^2 + 5");
  auto parts = f.collect(0);
  CHECK(parts.size() == 2);
  CHECK(parts.at(0).to_string() == "-3*q1^2 + 5");
  CHECK(parts.at(2).to_string() == "q1 + 1");
}

TEST_CASE("elementary symmetric polynomials agree with direct expansion") {
  VarTableRef t = make_vars({{"x", 4}});
  std::vector<Polynomial> xs;
  for (size_t i = 0; i < 4; ++i) xs.push_back(Polynomial::variable(t, i));
  CHECK(elementary_symmetric(xs, 0).to_string() == "1");
  CHECK(elementary_symmetric(xs, 1).to_string() == "x1 + x2 + x3 + x4");
  CHECK(elementary_symmetric(xs, 4).to_string() == "x1*x2*x3*x4");
  CHECK(elementary_symmetric(xs, 5).is_zero());
  // e_k(x) matches the coefficient of z^(n-k) in prod (z + x_i).
  VarTableRef tz = make_vars({{"x", 4}, {"z", 0}});
  Polynomial prod = Polynomial::constant(tz, Rat(1));
  for (size_t i = 0; i < 4; ++i)
    prod *= Polynomial::variable(tz, 4) + Polynomial::variable(tz, i);
  auto by_z = prod.collect(4);
  for (size_t k = 0; k <= 4; ++k) {
    CHECK(by_z.at(static_cast<std::uint32_t>(4 - k)) == elementary_symmetric(xs, k).transplant(tz));
  }
}

TEST_CASE("evaluation agrees between exact and double paths") {
  VarTableRef t = make_vars({{"x", 2}});
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = testutil::random_poly(rng, t, 4, 3);
    std::vector<Rat> pt = {testutil::random_rat(rng), testutil::random_rat(rng)};
    std::vector<double> dpt = {mpq_get_d(pt[0].get_mpq_t()), mpq_get_d(pt[1].get_mpq_t())};
    const double exact = mpq_get_d(f.eval_rat(pt).get_mpq_t());
    CHECK(f.eval_double(dpt) == doctest::Approx(exact).epsilon(1e-9));
  }
}
