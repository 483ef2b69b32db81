#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcjt/algebra.hpp"
#include "qcjt/matrix.hpp"

namespace qcjt {

// A d-dimensional left module: the action matrices of x_1..x_c.
class ModuleRep {
 public:
  ModuleRep() = default;
  ModuleRep(AlgebraParams alg, std::vector<Matrix> mats);

  static ModuleRep zero(const AlgebraParams& alg, std::size_t d);

  const AlgebraParams& alg() const { return alg_; }
  const FieldPtr& field() const { return alg_.field(); }
  std::size_t dim() const { return d_; }
  unsigned c() const { return alg_.c; }
  const std::vector<Matrix>& mats() const { return mats_; }
  const Matrix& X(unsigned i) const { return mats_[i]; }

 private:
  AlgebraParams alg_;
  std::size_t d_ = 0;
  std::vector<Matrix> mats_;
};

bool validate_module(const ModuleRep& m);
Matrix u_lambda_matrix(const ModuleRep& m, const std::vector<Elem>& lambda);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
ModuleRep direct_sum(const std::vector<ModuleRep>& parts);
ModuleRep dual_module(const ModuleRep& m);
ModuleRep twist(const ModuleRep& m, const AutomorphismSpec& E);
// Same action after a change of basis: X_i -> P^{-1} X_i P.
ModuleRep conjugate(const ModuleRep& m, const Matrix& P);
ModuleRep extend_scalars(const ModuleRep& m, const FieldPtr& big);
// Action of x^mu (basis index) on the module: X_1^{e_1} ... X_c^{e_c}.
std::vector<Matrix> monomial_actions(const ModuleRep& m);
// Columns Mat(x^mu) v for every basis monomial mu.
Matrix orbit_columns(const ModuleRep& m, const std::vector<Elem>& v);
// Column space of X_1 | ... | X_c.
Matrix radical_basis(const ModuleRep& m);

ModuleRep sample_module_point(const AlgebraParams& alg, std::size_t d, std::uint64_t seed);

struct JordanType {
  unsigned n = 0;
  std::vector<unsigned> mults;  // mults[i-1] = d_i

  std::size_t dim() const;
  JordanType stable() const;  // d_n set to 0
  unsigned blocks() const;
  // [1]^2 [3]
  std::string to_string() const;

  friend bool operator==(const JordanType&, const JordanType&) = default;
  friend auto operator<=>(const JordanType&, const JordanType&) = default;
};

JordanType jordan_from_blocks(unsigned n, const std::vector<unsigned>& blocks);
JordanType type_sum(const JordanType& a, const JordanType& b);

}  // namespace qcjt
