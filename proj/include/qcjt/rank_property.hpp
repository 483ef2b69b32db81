#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcjt/homology.hpp"
#include "qcjt/jordan.hpp"

namespace qcjt {

// Two-generator algebras only; x = X(0), y = X(1).
enum class Axis { X, Y };

// Top vector of the unique non-free Jordan chain of the axis matrix.
std::vector<Elem> nonprojective_generator(const ModuleRep& m, Axis axis);

// Dimension of M / rM.
std::size_t top_dim(const ModuleRep& m);

struct RpReport {
  JordanType stable_type;
  std::vector<Elem> generator_x;
  std::vector<Elem> generator_y;
  bool rpx = false;
  bool rpy = false;
  std::size_t beta0 = 0;
  std::size_t beta_minus1 = 0;

  bool rp() const { return rpx && rpy; }
};

// Stable type along the axes, which must agree and be [1] or [n-1].
JordanType axis_stable_type(const ModuleRep& m);

RpReport check_rp(const ModuleRep& m);
// Same tests with caller-chosen generators.
bool rpx_holds(const ModuleRep& m, const JordanType& stable, const std::vector<Elem>& a);
bool rpy_holds(const ModuleRep& m, const JordanType& stable, const std::vector<Elem>& b);

struct RanksEquivalence {
  bool beta_side = false;  // beta_0 > beta_{-1}
  bool x_side = false;     // generator test over k[x]
  bool y_side = false;     // generator test over k[y]
  bool agree() const { return beta_side == x_side && beta_side == y_side; }
};

RanksEquivalence prop_ranks_equivalence(const ModuleRep& m);

// x -> x, y -> q^{-1} y and x -> q x, y -> y.
AutomorphismSpec psi_automorphism(const AlgebraParams& alg);
AutomorphismSpec phi_automorphism(const AlgebraParams& alg);

struct Hypotheses {
  std::optional<JordanType> stable_type;  // set when constant of type [1] or [n-1]
  bool free_summand = false;
  std::size_t stable_endo_dim = 0;
  bool psi_invariant = false;
  bool phi_invariant = false;
  std::string failure;  // empty when every certificate holds

  bool ok() const { return failure.empty(); }
};

// Constancy is checked exhaustively over GF(p^e) with e = ext times the field degree.
Hypotheses certify_hypotheses(const ModuleRep& m, unsigned ext = 2, std::uint64_t seed = 0);

enum class DescentVerdict { IsomorphicToK, SatisfiesRP, Violation };
const char* to_string(DescentVerdict v);

struct DescentStep {
  DescentVerdict verdict = DescentVerdict::Violation;
  ModuleRep cosyzygy;
};

DescentStep rp_descent_step(const ModuleRep& m, const Hypotheses& h);

struct TraceLine {
  std::size_t dim = 0;
  std::string stable_type;
  std::size_t beta0 = 0;
  std::size_t beta_minus1 = 0;
  std::string branch;
};

struct Classification {
  bool certified = false;
  int index = 0;  // m ~ Omega^index(k) when certified
  std::string reason;
  std::vector<TraceLine> trace;

  std::string to_string() const;
};

struct ClassifyOptions {
  unsigned ext = 2;
  std::size_t step_limit = 0;  // 0: 2 * dim
  std::uint64_t seed = 0;
};

Classification classify_syzygy_of_k(const ModuleRep& m, const ClassifyOptions& opts = {});

}  // namespace qcjt
