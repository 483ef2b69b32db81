#include "qcjt/module.hpp"

#include <algorithm>
#include <random>

namespace qcjt {

ModuleRep::ModuleRep(AlgebraParams alg, std::vector<Matrix> mats)
    : alg_(std::move(alg)), mats_(std::move(mats)) {
  require(mats_.size() == alg_.c, ErrorKind::LengthMismatch, "need one matrix per generator");
  d_ = mats_.empty() ? 0 : mats_[0].rows();
  for (const auto& x : mats_) {
    require(x.rows() == d_ && x.cols() == d_, ErrorKind::LengthMismatch,
            "action matrices must be square of equal size");
    require(x.field() == alg_.field(), ErrorKind::FieldMismatch, "matrix over the wrong field");
  }
}

ModuleRep ModuleRep::zero(const AlgebraParams& alg, std::size_t d) {
  std::vector<Matrix> mats(alg.c, Matrix(alg.field(), d, d));
  return ModuleRep(alg, std::move(mats));
}

bool validate_module(const ModuleRep& m) {
  const auto& xs = m.mats();
  for (const auto& x : xs)
    if (!matrix_power(x, m.alg().n()).is_zero()) return false;
  for (unsigned i = 0; i < m.c(); ++i)
    for (unsigned j = i + 1; j < m.c(); ++j)
      if (!(xs[i] * xs[j] == scaled(xs[j] * xs[i], m.alg().q()))) return false;
  return true;
}

Matrix u_lambda_matrix(const ModuleRep& m, const std::vector<Elem>& lambda) {
  require(lambda.size() == m.c(), ErrorKind::LengthMismatch, "lambda has wrong length");
  require(std::any_of(lambda.begin(), lambda.end(), [](Elem x) { return x != 0; }),
          ErrorKind::ZeroLambda, "lambda must be nonzero");
  const Field& f = *m.field();
  Matrix u(m.field(), m.dim(), m.dim());
  for (unsigned i = 0; i < m.c(); ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t r = 0; r < m.dim(); ++r) f.axpy(u.row(r), m.X(i).row(r), lambda[i], m.dim());
  }
  return u;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  require(a.alg() == b.alg(), ErrorKind::AlgebraMismatch, "direct sum over different algebras");
  std::vector<Matrix> mats;
  for (unsigned i = 0; i < a.c(); ++i) mats.push_back(block_diag(a.X(i), b.X(i)));
  return ModuleRep(a.alg(), std::move(mats));
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts) {
  require(!parts.empty(), ErrorKind::BadInput, "empty direct sum");
  ModuleRep acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

ModuleRep dual_module(const ModuleRep& m) {
  std::vector<Matrix> mats;
  for (const auto& x : m.mats()) mats.push_back(transpose(x));
  return ModuleRep(m.alg().opposite(), std::move(mats));
}

ModuleRep twist(const ModuleRep& m, const AutomorphismSpec& spec) {
  AutomorphismSpec local = spec;
  if (spec.E.field() != m.field() && spec.E.field() &&
      spec.E.field()->characteristic() == m.field()->characteristic())
    local.E = map_entries(spec.E, m.field(), embedding(*spec.E.field(), *m.field()));
  require(validate_automorphism(m.alg(), local), ErrorKind::InvalidAutomorphism,
          "matrix does not define an automorphism");
  const Matrix& E = local.E;
  const Field& f = *m.field();
  std::vector<Matrix> mats;
  for (unsigned j = 0; j < m.c(); ++j) {
    Matrix y(m.field(), m.dim(), m.dim());
    for (unsigned i = 0; i < m.c(); ++i) {
      if (E(i, j) == 0) continue;
      for (std::size_t r = 0; r < m.dim(); ++r) f.axpy(y.row(r), m.X(i).row(r), E(i, j), m.dim());
    }
    mats.push_back(std::move(y));
  }
  return ModuleRep(m.alg(), std::move(mats));
}

ModuleRep conjugate(const ModuleRep& m, const Matrix& P) {
  Matrix Pinv = inverse(P);
  std::vector<Matrix> mats;
  for (const auto& x : m.mats()) mats.push_back(Pinv * x * P);
  return ModuleRep(m.alg(), std::move(mats));
}

ModuleRep extend_scalars(const ModuleRep& m, const FieldPtr& big) {
  if (big == m.field()) return m;
  auto table = embedding(*m.field(), *big);
  std::vector<Matrix> mats;
  for (const auto& x : m.mats()) mats.push_back(map_entries(x, big, table));
  return ModuleRep(extend_algebra(m.alg(), big, table), std::move(mats));
}

std::vector<Matrix> monomial_actions(const ModuleRep& m) {
  const MonomialBasis& t = monomial_table(m.c(), m.alg().n());
  std::vector<Matrix> out;
  out.reserve(t.monos.size());
  out.push_back(Matrix::identity(m.field(), m.dim()));
  for (std::size_t j = 1; j < t.monos.size(); ++j) out.push_back(m.X(t.first[j]) * out[t.rest[j]]);
  return out;
}

Matrix orbit_columns(const ModuleRep& m, const std::vector<Elem>& v) {
  const MonomialBasis& t = monomial_table(m.c(), m.alg().n());
  std::size_t dim = t.monos.size();
  Matrix out(m.field(), m.dim(), dim);
  std::vector<std::vector<Elem>> cols(dim);
  cols[0] = v;
  for (std::size_t j = 1; j < dim; ++j) cols[j] = mat_vec(m.X(t.first[j]), cols[t.rest[j]]);
  for (std::size_t j = 0; j < dim; ++j) out.set_column(j, cols[j]);
  return out;
}

Matrix radical_basis(const ModuleRep& m) {
  if (m.dim() == 0) return Matrix(m.field(), 0, 0);
  return image_basis(hstack(m.mats()));
}

namespace {

Elem random_elem(std::mt19937_64& rng, const Field& f) {
  return static_cast<Elem>(rng() % f.order());
}

Elem random_nonzero(std::mt19937_64& rng, const Field& f) {
  return static_cast<Elem>(1 + rng() % (f.order() - 1));
}

Matrix random_invertible(std::mt19937_64& rng, const FieldPtr& field, std::size_t d) {
  for (;;) {
    Matrix q(field, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) q(i, j) = random_elem(rng, *field);
    if (rank(q) == d) return q;
  }
}

// Y with X Y = q Y X, drawn from the solution space restricted to `slots`.
Matrix random_commutant(std::mt19937_64& rng, const Matrix& X, Elem q,
                        const std::vector<std::pair<std::size_t, std::size_t>>& slots) {
  const Field& f = X.f();
  std::size_t d = X.rows();
  // (X Y - q Y X)(r, c) = sum_k X(r,k) Y(k,c) - q Y(r,k) X(k,c)
  Matrix sys(X.field(), d * d, slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto [k, c] = slots[s];
    for (std::size_t r = 0; r < d; ++r) sys(r * d + c, s) = f.add(sys(r * d + c, s), X(r, k));
    for (std::size_t cc = 0; cc < d; ++cc)
      sys(k * d + cc, s) = f.sub(sys(k * d + cc, s), f.mul(q, X(c, cc)));
  }
  Matrix K = kernel_basis(sys);
  Matrix Y(X.field(), d, d);
  for (std::size_t b = 0; b < K.cols(); ++b) {
    Elem coef = random_elem(rng, f);
    if (coef == 0) continue;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (K(s, b) != 0) Y(slots[s].first, slots[s].second) = f.fma(Y(slots[s].first, slots[s].second), coef, K(s, b));
  }
  return Y;
}

}  // namespace

ModuleRep sample_module_point(const AlgebraParams& alg, std::size_t d, std::uint64_t seed) {
  require(alg.c == 2, ErrorKind::MethodUnavailable, "sampling is implemented for c = 2 only");
  const FieldPtr& field = alg.field();
  const Field& f = *field;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> all, upper;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      all.emplace_back(i, j);
      if (i < j) upper.emplace_back(i, j);
    }
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<unsigned> blocks;
    std::size_t left = d;
    while (left > 0) {
      unsigned b = 1 + static_cast<unsigned>(rng() % std::min<std::size_t>(alg.n(), left));
      blocks.push_back(b);
      left -= b;
    }
    Matrix J(field, d, d);
    std::size_t off = 0;
    for (auto b : blocks) {
      for (unsigned k = 0; k + 1 < b; ++k) J(off + k, off + k + 1) = 1;
      off += b;
    }
    Matrix P(field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      P(i, i) = random_nonzero(rng, f);
      for (std::size_t j = i + 1; j < d; ++j) P(i, j) = random_elem(rng, f);
    }
    Matrix X = P * J * inverse(P);
    for (const auto* slots : {&all, &upper}) {
      Matrix Y = random_commutant(rng, X, alg.q(), *slots);
      if (!matrix_power(Y, alg.n()).is_zero()) continue;
      ModuleRep m(alg, {X, Y});
      if (d == 0) return m;
      return conjugate(m, random_invertible(rng, field, d));
    }
  }
  fail(ErrorKind::SamplingExhausted, "no nilpotent partner found; retry with another seed");
}

std::size_t JordanType::dim() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) s += (i + 1) * mults[i];
  return s;
}

JordanType JordanType::stable() const {
  JordanType t = *this;
  if (!t.mults.empty()) t.mults.back() = 0;
  return t;
}

unsigned JordanType::blocks() const {
  unsigned s = 0;
  for (auto x : mults) s += x;
  return s;
}

std::string JordanType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "[" + std::to_string(i + 1) + "]";
    if (mults[i] > 1) s += "^" + std::to_string(mults[i]);
  }
  return s.empty() ? "0" : s;
}

JordanType jordan_from_blocks(unsigned n, const std::vector<unsigned>& blocks) {
  JordanType t{n, std::vector<unsigned>(n, 0)};
  for (auto b : blocks) {
    require(b >= 1 && b <= n, ErrorKind::BadRange, "block size out of range");
    ++t.mults[b - 1];
  }
  return t;
}

JordanType type_sum(const JordanType& a, const JordanType& b) {
  require(a.n == b.n, ErrorKind::LengthMismatch, "types with different n");
  JordanType t = a;
  for (std::size_t i = 0; i < t.mults.size(); ++i) t.mults[i] += b.mults[i];
  return t;
}

}  // namespace qcjt
