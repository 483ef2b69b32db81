#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcjt/module.hpp"
#include "qcjt/poly.hpp"

namespace qcjt {

// ranks = (r_1, ..., r_{n-1}) or (r_1, ..., r_n) with r_n = 0.
JordanType partition_from_ranks(std::size_t d, unsigned n, const std::vector<std::size_t>& ranks);
// Ranks of u, u^2, ..., u^{n-1}.
std::vector<std::size_t> rank_sequence(const Matrix& u, unsigned n);
JordanType jordan_type_at(const ModuleRep& m, const std::vector<Elem>& lambda);

// Normalized representatives (first nonzero coordinate 1) of the projective
// points of GF(Q)^c, in a fixed order.
std::uint64_t projective_point_count(std::uint64_t order, unsigned c);
std::vector<Elem> projective_point(std::uint64_t order, unsigned c, std::uint64_t index);

struct ScanEntry {
  std::vector<Elem> lambda;  // coordinates in GF(p^e)
  JordanType type;
};

constexpr std::uint64_t kMaxScanPoints = 1000000;

// One type per projective point of GF(p^e)^c.  e must be a multiple of the
// module field's degree.
std::vector<ScanEntry> scan_types(const ModuleRep& m, unsigned e);

enum class CjtMethod { Exhaustive, Extension, Symbolic };
const char* to_string(CjtMethod method);

struct CjtOptions {
  CjtMethod method = CjtMethod::Exhaustive;
  unsigned e = 1;  // Exhaustive: scan field degree; Extension: maximal degree
  std::uint64_t seed = 0;
  std::size_t minor_cap = 200000;
};

struct TypedPoint {
  FieldPtr field;
  std::vector<Elem> lambda;
  JordanType type;
};

struct CjtVerdict {
  CjtMethod method = CjtMethod::Exhaustive;
  bool constant = false;
  std::optional<JordanType> type;
  std::optional<std::pair<TypedPoint, TypedPoint>> witness;
  std::string certified_over;
};

CjtVerdict check_constant(const ModuleRep& m, const CjtOptions& opts);

// All g x g minors of U_Lambda^i as forms of degree i*g, rows then columns
// in lex order.  g = 0 gives the unit ideal marker [1].
std::vector<HomogPoly> minor_polys(const ModuleRep& m, unsigned i, std::size_t g,
                                   std::size_t cap = 200000);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Both conditions for constant rank g of u_lambda: I_{g+1} = 0 and
// sqrt(I_g) contains (Lambda_1..Lambda_c).
bool constant_rank_check(const ModuleRep& m, std::size_t g);

struct RankProfile {
  std::vector<std::size_t> g;  // g_1 .. g_{n-1}
  bool certified = false;      // upper bound proven and nonzero g_i-minor found
};

RankProfile generic_rank_profile(const ModuleRep& m, std::uint64_t seed = 0);

// Large extension used for generic evaluations.
FieldPtr generic_field(const Field& base, std::uint64_t min_order = 4096);

}  // namespace qcjt
