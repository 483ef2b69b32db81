#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "qcjt/jordan.hpp"

using namespace qcjt;

namespace {

Matrix jordan_matrix(FieldPtr f, const std::vector<unsigned>& blocks) {
  std::size_t d = 0;
  for (unsigned b : blocks) d += b;
  Matrix m(f, d, d);
  std::size_t off = 0;
  for (unsigned b : blocks) {
    for (unsigned i = 0; i + 1 < b; ++i) m(off + i, off + i + 1) = 1;
    off += b;
  }
  return m;
}

// Ranks of powers by repeated multiplication.
std::vector<std::size_t> oracle_ranks(const Matrix& u, unsigned n) {
  std::vector<std::size_t> out;
  Matrix p = u;
  for (unsigned i = 1; i < n; ++i) {
    out.push_back(rank(p));
    p = p * u;
  }
  return out;
}

ModuleRep witness_j2(const AlgebraParams& alg) {
  Matrix X(alg.field(), 2, 2);
  X(0, 1) = 1;
  return ModuleRep(alg, {X, Matrix(alg.field(), 2, 2)});
}

}  // namespace

TEST_CASE("partition from ranks") {
  CHECK(partition_from_ranks(3, 3, {0, 0}).to_string() == "[1]^3");
  CHECK(partition_from_ranks(5, 3, {3, 1, 0}).to_string() == "[2] [3]");
  CHECK(partition_from_ranks(4, 2, {2, 0}).to_string() == "[2]^2");
  CHECK_THROWS_AS(partition_from_ranks(3, 3, {1, 2}), Error);
  auto f = Field::get(7);
  CHECK(oracle_ranks(jordan_matrix(f, {2, 3}), 3) == std::vector<std::size_t>{3, 1});
}

TEST_CASE("round trip against Jordan matrices") {
  std::mt19937_64 rng(17);
  auto f = Field::get(5);
  for (int t = 0; t < 200; ++t) {
    unsigned n = 2 + rng() % 4;
    std::vector<unsigned> blocks(rng() % 7);
    for (auto& b : blocks) b = 1 + rng() % n;
    Matrix J = jordan_matrix(f, blocks);
    // hide the block structure behind a change of basis
    Matrix P(f, J.rows(), J.rows());
    do {
      for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j) P(i, j) = rng() % 5;
    } while (rank(P) < P.rows());
    Matrix u = inverse(P) * J * P;
    auto ranks = oracle_ranks(u, n);
    CHECK(rank_sequence(u, n) == ranks);
    CHECK(partition_from_ranks(J.rows(), n, ranks) == jordan_from_blocks(n, blocks));
  }
}

TEST_CASE("types at points") {
  auto alg = make_algebra(7, 1, 3, 2);
  CHECK(jordan_type_at(ModuleRep::zero(alg, 1), {3, 2}).to_string() == "[1]");
  CHECK(jordan_type_at(regular_representation(alg), {1, 1}).to_string() == "[3]^3");
  CHECK(jordan_type_at(radical_quotient_module(alg, 0, 3), {2, 5}).to_string() == "[1] [2] [3]");
  CHECK_THROWS_AS(jordan_type_at(regular_representation(alg), {0, 0}), Error);
}

TEST_CASE("rank formula matches direct ranks") {
  auto alg = make_algebra(7, 1, 3, 2);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto m = sample_module_point(alg, 3 + s, s);
    for (const auto& e : scan_types(m, 1)) {
      auto u = u_lambda_matrix(m, e.lambda);
      auto r = oracle_ranks(u, 3);
      for (unsigned i = 1; i < 3; ++i) {
        std::size_t predicted = 0;
        for (unsigned j = i + 1; j <= 3; ++j) predicted += (j - i) * e.type.mults[j - 1];
        CHECK(r[i - 1] == predicted);
      }
    }
  }
}

TEST_CASE("projective points") {
  CHECK(projective_point_count(7, 2) == 8);
  CHECK(projective_point_count(3, 3) == 13);
  std::vector<std::vector<Elem>> seen;
  for (std::uint64_t i = 0; i < 13; ++i) seen.push_back(projective_point(3, 3, i));
  std::sort(seen.begin(), seen.end());
  CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
  for (auto& v : seen) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    REQUIRE(it != v.end());
    CHECK(*it == 1);
  }
}

TEST_CASE("scans") {
  auto alg = make_algebra(7, 1, 3, 2);
  auto s = scan_types(radical_quotient_module(alg, 0, 3), 1);
  CHECK(s.size() == 8);
  for (auto& e : s) CHECK(e.type.to_string() == "[1] [2] [3]");
  for (auto& e : scan_types(ModuleRep::zero(alg, 1), 2)) CHECK(e.type.to_string() == "[1]");
  CHECK(scan_types(ModuleRep::zero(alg, 1), 2).size() == 50);
  auto alg2 = make_algebra(3, 1, 2, 2);
  auto w = witness_j2(alg2);
  CHECK(jordan_type_at(w, {1, 0}).to_string() == "[2]");
  CHECK(jordan_type_at(w, {0, 1}).to_string() == "[1]^2");
  CHECK_THROWS_AS(scan_types(ModuleRep::zero(make_algebra(7, 1, 3, 3), 1), 4), Error);
}

TEST_CASE("constancy verdicts") {
  auto alg = make_algebra(7, 1, 3, 2);
  auto r3 = radical_quotient_module(alg, 0, 3);
  auto v = check_constant(r3, {CjtMethod::Symbolic});
  CHECK(v.constant);
  REQUIRE(v.type);
  CHECK(v.type->to_string() == "[1] [2] [3]");
  for (unsigned s = 0; s < 4; ++s)
    for (unsigned t = s + 1; t <= 5; ++t) CHECK(check_constant(radical_quotient_module(alg, s, t), {CjtMethod::Symbolic}).constant);

  auto alg2 = make_algebra(3, 1, 2, 2);
  auto w = check_constant(witness_j2(alg2), {CjtMethod::Exhaustive, 1});
  CHECK_FALSE(w.constant);
  REQUIRE(w.witness);
  CHECK(w.witness->first.type != w.witness->second.type);
  CHECK(jordan_type_at(witness_j2(alg2), w.witness->first.lambda) == w.witness->first.type);
  CHECK_FALSE(check_constant(witness_j2(alg2), {CjtMethod::Symbolic}).constant);

  auto kA = direct_sum(ModuleRep::zero(alg, 1), regular_representation(alg));
  for (auto method : {CjtMethod::Exhaustive, CjtMethod::Extension, CjtMethod::Symbolic}) {
    auto vv = check_constant(kA, {method, 2});
    CHECK(vv.constant);
    CHECK(vv.type->to_string() == "[1] [3]^3");
  }
  CHECK_THROWS_AS(check_constant(ModuleRep::zero(make_algebra(7, 1, 3, 3), 1), {CjtMethod::Symbolic}), Error);
}

TEST_CASE("symbolic and exhaustive agree on sampled modules") {
  auto alg = make_algebra(7, 1, 3, 2);
  for (std::uint64_t s = 0; s < 25; ++s) {
    auto m = sample_module_point(alg, 2 + s % 9, s);
    auto sym = check_constant(m, {CjtMethod::Symbolic, 1, s});
    for (unsigned e = 1; e <= 3; ++e) {
      auto ex = check_constant(m, {CjtMethod::Exhaustive, e});
      // a symbolic constant verdict covers every finite field
      if (sym.constant) CHECK(ex.constant);
      if (!ex.constant) CHECK_FALSE(sym.constant);
    }
    if (!sym.constant) {
      REQUIRE(sym.witness);
      auto& [a, b] = *sym.witness;
      CHECK(a.type != b.type);
      CHECK(jordan_type_at(extend_scalars(m, a.field), a.lambda) == a.type);
      CHECK(jordan_type_at(extend_scalars(m, b.field), b.lambda) == b.type);
    }
  }
}

TEST_CASE("minors") {
  auto alg2 = make_algebra(3, 1, 2, 2);
  auto k = ModuleRep::zero(alg2, 1);
  auto mk = minor_polys(k, 1, 1);
  REQUIRE(mk.size() == 1);
  CHECK(mk[0].is_zero());
  CHECK(minor_polys(k, 1, 0).size() == 1);

  auto r2 = radical_quotient_module(alg2, 0, 2);
  auto ms = minor_polys(r2, 1, 1);
  CHECK(ms.size() == 9);
  auto l1 = HomogPoly::variable(alg2.field(), 2, 0), l2 = HomogPoly::variable(alg2.field(), 2, 1);
  bool has1 = false, has2 = false;
  for (auto& p : ms) {
    if (p == l1 || p == -l1) has1 = true;
    if (p == l2 || p == -l2) has2 = true;
  }
  CHECK(has1);
  CHECK(has2);

  auto alg = make_algebra(7, 1, 3, 2);
  auto m = radical_quotient_module(alg, 0, 3);
  for (std::size_t g = 0; g <= 3; ++g) CHECK(minor_polys(m, 1, g).size() == binomial(6, g) * binomial(6, g));
  for (auto& p : minor_polys(m, 2, 2))
    if (!p.is_zero()) CHECK(p.degree() == 4);
  // minors evaluated at a point equal numeric minors
  auto u = u_lambda_matrix(m, {3, 4});
  auto two = minor_polys(m, 1, 2);
  std::size_t idx = 0;
  for (std::size_t r0 = 0; r0 < 6; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 6; ++r1)
      for (std::size_t c0 = 0; c0 < 6; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < 6; ++c1) {
          auto sub = select_columns(select_rows(u, {r0, r1}), {c0, c1});
          CHECK(two[idx++].eval({3, 4}) == determinant(sub));
        }
  CHECK_THROWS_AS(minor_polys(regular_representation(alg), 1, 4, 1000), Error);
}

TEST_CASE("constant rank") {
  auto alg2 = make_algebra(3, 1, 2, 2);
  CHECK(constant_rank_check(ModuleRep::zero(alg2, 1), 0));
  CHECK(constant_rank_check(radical_quotient_module(alg2, 0, 2), 1));
  CHECK_FALSE(constant_rank_check(radical_quotient_module(alg2, 0, 2), 2));
  // d = 1, g = 1: binom(1,1)^2 = 1 < c = 2
  CHECK_FALSE(constant_rank_check(ModuleRep::zero(alg2, 1), 1));
  auto alg3 = make_algebra(7, 1, 3, 3);
  CHECK(constant_rank_check(radical_quotient_module(alg3, 0, 2), 1));
}

TEST_CASE("generic rank profiles") {
  auto alg = make_algebra(7, 1, 3, 2);
  auto g = generic_rank_profile(regular_representation(alg));
  CHECK(g.g == std::vector<std::size_t>{6, 3});
  CHECK(g.certified);
  CHECK(generic_rank_profile(ModuleRep::zero(alg, 1)).g == std::vector<std::size_t>{0, 0});
  CHECK(generic_rank_profile(radical_quotient_module(alg, 0, 3)).g == std::vector<std::size_t>{3, 1});
  auto w = witness_j2(make_algebra(3, 1, 2, 2));
  CHECK(generic_rank_profile(w).g == std::vector<std::size_t>{1});
}
