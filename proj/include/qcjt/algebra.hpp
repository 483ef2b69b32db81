#pragma once

#include <cstddef>
#include <vector>

#include "qcjt/field.hpp"
#include "qcjt/matrix.hpp"

namespace qcjt {

class ModuleRep;

// A^c_q = k<x_1..x_c> / (x_i^n, x_i x_j - q x_j x_i for i < j).
struct AlgebraParams {
  FieldCtx ctx;
  unsigned c = 0;

  const FieldPtr& field() const { return ctx.field; }
  unsigned n() const { return ctx.n; }
  Elem q() const { return ctx.q; }
  std::size_t dim() const;
  // Same algebra with q replaced by q^{-1}; duals of modules live here.
  AlgebraParams opposite() const;

  friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
    return a.c == b.c && a.ctx == b.ctx;
  }
};

AlgebraParams make_algebra(const FieldCtx& ctx, unsigned c);
AlgebraParams make_algebra(std::uint32_t p, unsigned e, unsigned n, unsigned c);
// The same algebra over a larger field (q carried along the embedding).
AlgebraParams extend_algebra(const AlgebraParams& alg, const FieldPtr& big,
                             const std::vector<Elem>& table);

using Monomial = std::vector<unsigned>;

// Monomial basis data for given (c, n); q-independent.  Basis order is by
// total degree, then descending lex, so c = 2, n = 2 gives 1, x, y, xy.
struct MonomialBasis {
  unsigned c = 0;
  unsigned n = 0;
  std::vector<Monomial> monos;
  std::vector<unsigned> degree;
  // x_i * x^e = q^{-shift[i][j]} x^{e + eps_i} (target[i][j] = -1 if zero)
  std::vector<std::vector<int>> target;
  std::vector<std::vector<unsigned>> shift;
  // x^e = x_{first[j]} * x^{e - eps_first} exactly, for j > 0
  std::vector<unsigned> first;
  std::vector<std::size_t> rest;
  std::size_t socle = 0;

  std::size_t index_of(const Monomial& m) const;

 private:
  friend const MonomialBasis& monomial_table(unsigned c, unsigned n);
  std::vector<std::size_t> code_to_index_;
};

const MonomialBasis& monomial_table(unsigned c, unsigned n);
std::vector<Monomial> monomial_basis(const AlgebraParams& alg);

// x^a * x^b as (basis index or -1, coefficient).
std::pair<long, Elem> monomial_product(const AlgebraParams& alg, std::size_t a, std::size_t b);
// Matrices of left multiplication by x_1..x_c on the monomial basis.
std::vector<Matrix> left_regular_matrices(const AlgebraParams& alg);

ModuleRep regular_representation(const AlgebraParams& alg);
// r^s / r^t on the monomials of degree in [s, t).
ModuleRep radical_quotient_module(const AlgebraParams& alg, unsigned s, unsigned t);

// x_j -> sum_i E[i][j] x_i
struct AutomorphismSpec {
  Matrix E;
};

AutomorphismSpec identity_automorphism(const AlgebraParams& alg);
AutomorphismSpec diagonal_automorphism(const AlgebraParams& alg, const std::vector<Elem>& alphas);
bool validate_automorphism(const AlgebraParams& alg, const AutomorphismSpec& E);

struct NakayamaAutomorphism {
  std::vector<unsigned> exponents;  // nu(x_i) = q^{m_i} x_i
  AutomorphismSpec spec;
};

// Exponents solving pi(ab) = pi(b nu(a)), pi = coefficient of the socle monomial.
NakayamaAutomorphism nakayama_automorphism(const AlgebraParams& alg);

}  // namespace qcjt
