#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qcjt/jordan.hpp"
#include "qcjt/module.hpp"

using namespace qcjt;

namespace {

Matrix unit(FieldPtr f, std::size_t d, std::size_t i, std::size_t j) {
  Matrix m(f, d, d);
  m(i, j) = 1;
  return m;
}

// Types at all projective points of GF(p).
std::vector<JordanType> type_map(const ModuleRep& m) {
  std::vector<JordanType> out;
  for (const auto& e : scan_types(m, 1)) out.push_back(e.type);
  return out;
}

}  // namespace

TEST_CASE("validation") {
  auto alg = make_algebra(3, 1, 2, 2);
  auto f = alg.field();
  CHECK(validate_module(ModuleRep::zero(alg, 3)));
  CHECK(validate_module(ModuleRep(alg, {unit(f, 2, 0, 1), Matrix(f, 2, 2)})));
  CHECK_FALSE(validate_module(ModuleRep(alg, {unit(f, 2, 0, 1), unit(f, 2, 1, 0)})));
  auto alg3 = make_algebra(7, 1, 3, 2);
  Matrix J(alg3.field(), 3, 3);
  J(0, 1) = 1; J(1, 2) = 1;
  CHECK(validate_module(ModuleRep(alg3, {J, Matrix(alg3.field(), 3, 3)})));
}

TEST_CASE("u_lambda") {
  auto alg = make_algebra(3, 1, 2, 2);
  auto A = regular_representation(alg);
  CHECK(u_lambda_matrix(A, {1, 0}) == A.X(0));
  auto u = u_lambda_matrix(A, {1, 1});
  CHECK((u * u).is_zero());
  CHECK(u_lambda_matrix(ModuleRep::zero(alg, 1), {2, 1}).is_zero());
  CHECK_THROWS_AS(u_lambda_matrix(A, {0, 0}), Error);
}

TEST_CASE("direct sums add types") {
  auto alg = make_algebra(7, 1, 3, 2);
  auto k = ModuleRep::zero(alg, 1);
  auto A = regular_representation(alg);
  CHECK(jordan_type_at(direct_sum(k, k), {3, 4}).to_string() == "[1]^2");
  CHECK(jordan_type_at(direct_sum(A, k), {1, 5}).to_string() == "[1] [3]^3");
  auto m = radical_quotient_module(alg, 0, 3);
  CHECK(direct_sum(m, ModuleRep::zero(alg, 0)).mats() == m.mats());
  auto s = direct_sum(m, radical_quotient_module(alg, 1, 4));
  auto a = type_map(m), b = type_map(radical_quotient_module(alg, 1, 4)), ab = type_map(s);
  for (std::size_t i = 0; i < ab.size(); ++i) CHECK(ab[i] == type_sum(a[i], b[i]));
  CHECK_THROWS_AS(direct_sum(k, ModuleRep::zero(make_algebra(7, 1, 3, 3), 1)), Error);
}

TEST_CASE("duals") {
  auto alg = make_algebra(7, 1, 3, 2);
  auto m = radical_quotient_module(alg, 0, 3);
  auto d = dual_module(m);
  CHECK(validate_module(d));
  CHECK(d.alg().q() == alg.field()->inv(alg.q()));
  CHECK(type_map(d) == type_map(m));
  CHECK(dual_module(d).mats() == m.mats());
  for (auto t : type_map(d)) CHECK(t.to_string() == "[1] [2] [3]");
}

TEST_CASE("twists") {
  auto alg = make_algebra(7, 1, 3, 2);
  auto m = radical_quotient_module(alg, 0, 3);
  CHECK(twist(m, identity_automorphism(alg)).mats() == m.mats());
  auto t = twist(m, diagonal_automorphism(alg, {3, 1}));
  CHECK(type_map(t) == type_map(m));
  Matrix S(alg.field(), 2, 2);
  S(0, 1) = 1; S(1, 0) = 1;
  CHECK_THROWS_AS(twist(m, {S}), Error);

  auto alg2 = make_algebra(3, 1, 2, 2);
  Matrix E(alg2.field(), 2, 2);
  E(0, 0) = 1; E(0, 1) = 1; E(1, 0) = 1; E(1, 1) = 2;
  auto r = radical_quotient_module(alg2, 0, 2);
  auto rt = twist(r, {E});
  CHECK(validate_module(rt));
  for (auto ty : type_map(rt)) CHECK(ty.to_string() == "[1] [2]");
}

TEST_CASE("twist moves lambda by E") {
  auto alg = make_algebra(7, 1, 3, 2);
  std::mt19937_64 rng(4);
  auto m = sample_module_point(alg, 5, 11);
  auto E = diagonal_automorphism(alg, {2, 5});
  auto t = twist(m, E);
  for (int i = 0; i < 30; ++i) {
    std::vector<Elem> lam{Elem(rng() % 7), Elem(rng() % 7)};
    if (lam[0] == 0 && lam[1] == 0) continue;
    std::vector<Elem> moved{alg.field()->mul(2, lam[0]), alg.field()->mul(5, lam[1])};
    CHECK(jordan_type_at(t, lam) == jordan_type_at(m, moved));
  }
}

TEST_CASE("sampling") {
  auto alg = make_algebra(7, 1, 3, 2);
  auto k = sample_module_point(alg, 1, 0);
  CHECK(k.X(0).is_zero());
  CHECK(k.X(1).is_zero());
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto m = sample_module_point(alg, 2 + s % 6, s);
    CHECK(validate_module(m));
    CHECK(sample_module_point(alg, 2 + s % 6, s).mats() == m.mats());
  }
  auto alg2 = make_algebra(7, 1, 2, 2);
  auto m = sample_module_point(alg2, 4, 3);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    std::vector<Elem> lam{Elem(rng() % 7), Elem(1 + rng() % 6)};
    CHECK(jordan_type_at(m, lam).dim() == 4);
  }
  CHECK_THROWS_AS(sample_module_point(make_algebra(7, 1, 3, 3), 3, 0), Error);
}

TEST_CASE("type strings and scaling invariance") {
  CHECK(jordan_from_blocks(3, {1, 1, 3}).to_string() == "[1]^2 [3]");
  CHECK(jordan_from_blocks(3, {}).to_string() == "0");
  CHECK(jordan_from_blocks(3, {1, 2, 3}).stable().to_string() == "[1] [2]");
  auto alg = make_algebra(7, 1, 3, 2);
  auto m = sample_module_point(alg, 6, 5);
  for (Elem a = 1; a < 7; ++a) CHECK(jordan_type_at(m, {a, alg.field()->mul(a, 3)}) == jordan_type_at(m, {1, 3}));
}
