#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qcjt/poly.hpp"

using namespace qcjt;

namespace {

FieldPtr f7() { return Field::get(7); }

HomogPoly L(unsigned i, FieldPtr f = f7()) { return HomogPoly::variable(f, 2, i); }

HomogPoly random_form(std::mt19937_64& rng, FieldPtr f, unsigned nvars, unsigned deg) {
  HomogPoly out = HomogPoly::zero(f, nvars, deg);
  for (int t = 0; t < 4; ++t) {
    std::vector<unsigned> e(nvars, 0);
    unsigned left = deg;
    for (unsigned i = 0; i + 1 < nvars; ++i) {
      e[i] = rng() % (left + 1);
      left -= e[i];
    }
    e[nvars - 1] = left;
    out.add_term(e, rng() % f->order());
  }
  return out;
}

// Exact division check by evaluation at every point of the projective line:
// every root of g is a root of f.
bool roots_shared(const HomogPoly& g, const HomogPoly& f, const Field& fld) {
  for (Elem t = 0; t < fld.order(); ++t)
    if (g.eval({1, t}) == 0 && f.eval({1, t}) != 0) return false;
  if (g.eval({0, 1}) == 0 && f.eval({0, 1}) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  auto p = L(0) * L(1);
  CHECK(p.degree() == 2);
  CHECK(p.coeff({1, 1}) == 1);
  CHECK(p.terms().size() == 1);
  auto diff = (L(0) + L(1)) * (L(0) - L(1));
  auto expect = L(0) * L(0) - L(1) * L(1);
  CHECK(diff == expect);
  CHECK((p + (-p)).is_zero());
  CHECK_THROWS_AS(L(0) + p, Error);
}

TEST_CASE("evaluation") {
  CHECK((L(0) * L(1)).eval({2, 3}) == 6);
  CHECK((L(0) * L(0) - L(1) * L(1)).eval({3, 3}) == 0);
  CHECK((L(0) * L(0)).eval({0, 0}) == 0);
  CHECK_THROWS_AS(L(0).eval({1}), Error);
}

TEST_CASE("homogeneity under scaling") {
  std::mt19937_64 rng(5);
  auto f = Field::get(5, 2);
  for (int t = 0; t < 1000; ++t) {
    unsigned deg = 1 + rng() % 5;
    auto g = random_form(rng, f, 3, deg);
    std::vector<Elem> lam{Elem(rng() % 25), Elem(rng() % 25), Elem(rng() % 25)};
    Elem a = rng() % 25;
    std::vector<Elem> scaled_lam;
    for (Elem x : lam) scaled_lam.push_back(f->mul(a, x));
    CHECK(g.eval(scaled_lam) == f->mul(f->pow(a, deg), g.eval(lam)));
  }
}

TEST_CASE("binary form gcd examples") {
  auto one = binary_form_gcd({L(0), L(1)});
  CHECK(one.degree() == 0);
  CHECK(one.coeff({0, 0}) == 1);
  CHECK(binary_form_gcd({L(0) * L(1), L(0) * L(0)}) == L(0));
  CHECK(binary_form_gcd({L(0) * L(0) - L(1) * L(1), L(0) - L(1)}) == L(0) - L(1));
  CHECK(binary_form_gcd({L(1) * L(1), HomogPoly::zero(f7(), 2, 2)}) == L(1) * L(1));
  CHECK_THROWS_AS(binary_form_gcd({HomogPoly::zero(f7(), 2, 3)}), Error);
}

TEST_CASE("gcd divides and recovers planted factors") {
  std::mt19937_64 rng(9);
  for (unsigned e : {1u, 2u}) {
    auto f = Field::get(7, e);
    for (int t = 0; t < 100; ++t) {
      auto common = random_form(rng, f, 2, 1 + rng() % 2);
      if (common.is_zero()) continue;
      auto a = common * random_form(rng, f, 2, 2);
      auto b = common * random_form(rng, f, 2, 3);
      if (a.is_zero() || b.is_zero()) continue;
      auto g = binary_form_gcd({a, b});
      CHECK(g.degree() >= common.degree());
      // the planted factor divides g: every root of it over GF(7^4) is a root of g
      auto big = Field::get(7, 4);
      auto emb = embedding(*f, *big);
      auto G = map_field(g, big, emb), C = map_field(common, big, emb);
      auto A = map_field(a, big, emb), B = map_field(b, big, emb);
      CHECK(roots_shared(C, G, *big));
      CHECK(roots_shared(G, A, *big));
      CHECK(roots_shared(G, B, *big));
    }
  }
}

TEST_CASE("univariate gcd") {
  auto f = Field::get(7);
  // (t-1)(t-2) and (t-1)(t-3)
  UPoly a{2, 4, 1}, b{3, 3, 1};
  CHECK(upoly_gcd(*f, a, b) == UPoly{6, 1});
  CHECK(upoly_mod(*f, a, b) == UPoly{6, 1});
}
