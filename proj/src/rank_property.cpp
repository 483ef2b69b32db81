#include "qcjt/rank_property.hpp"

#include "qcjt/error.hpp"

namespace qcjt {

namespace {

const Matrix& axis_matrix(const ModuleRep& m, Axis axis) { return m.X(axis == Axis::X ? 0 : 1); }

bool in_span(const Matrix& basis, const std::vector<Elem>& v) {
  Matrix col(basis.field(), v.size(), 1);
  col.set_column(0, v);
  if (basis.cols() == 0) return col.is_zero();
  return rank(hstack({basis, col})) == rank(basis);
}

bool is_zero(const std::vector<Elem>& v) {
  for (Elem e : v)
    if (e) return false;
  return true;
}

// y^b x^a v
std::vector<Elem> act(const ModuleRep& m, unsigned a, unsigned b, std::vector<Elem> v) {
  for (unsigned i = 0; i < a; ++i) v = mat_vec(m.X(0), v);
  for (unsigned i = 0; i < b; ++i) v = mat_vec(m.X(1), v);
  return v;
}

unsigned block_size(const JordanType& stable) {
  for (unsigned i = 0; i < stable.mults.size(); ++i)
    if (stable.mults[i]) return i + 1;
  return 0;
}

void require_two(const ModuleRep& m) {
  require(m.c() == 2, ErrorKind::PreconditionUnmet, "two generators required");
}

}  // namespace

std::size_t top_dim(const ModuleRep& m) { return m.dim() - radical_basis(m).cols(); }

std::vector<Elem> nonprojective_generator(const ModuleRep& m, Axis axis) {
  require_two(m);
  const Matrix& X = axis_matrix(m, axis);
  unsigned n = m.alg().n();
  JordanType t = partition_from_ranks(m.dim(), n, rank_sequence(X, n));
  unsigned len = 0, count = 0;
  for (unsigned i = 0; i + 1 < n; ++i)
    if (t.mults[i]) {
      len = i + 1;
      count += t.mults[i];
    }
  require(count == 1, ErrorKind::NotSingleNonprojective,
          "axis restriction has " + std::to_string(count) + " non-free blocks");
  Matrix ker = kernel_basis(matrix_power(X, len));
  Matrix im = image_basis(X);
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    auto v = ker.column(j);
    if (!in_span(im, v)) return v;
  }
  fail(ErrorKind::Internal, "no generator outside the image");
}

JordanType axis_stable_type(const ModuleRep& m) {
  require_two(m);
  JordanType tx = jordan_type_at(m, {1, 0}).stable();
  JordanType ty = jordan_type_at(m, {0, 1}).stable();
  require(tx == ty, ErrorKind::PreconditionUnmet, "axis types differ: " + tx.to_string() + " vs " + ty.to_string());
  unsigned s = block_size(tx);
  require(tx.blocks() == 1 && (s == 1 || s == m.alg().n() - 1), ErrorKind::PreconditionUnmet,
          "stable type " + tx.to_string() + " is neither [1] nor [n-1]");
  return tx;
}

bool rpx_holds(const ModuleRep& m, const JordanType& stable, const std::vector<Elem>& a) {
  unsigned n = m.alg().n();
  if (block_size(stable) == 1) return !in_span(radical_basis(m), a) && !is_zero(act(m, 0, n - 1, a));
  return !is_zero(act(m, n - 2, n - 1, a));
}

bool rpy_holds(const ModuleRep& m, const JordanType& stable, const std::vector<Elem>& b) {
  unsigned n = m.alg().n();
  if (block_size(stable) == 1) return !in_span(radical_basis(m), b) && !is_zero(act(m, n - 1, 0, b));
  return !is_zero(act(m, n - 1, n - 2, b));
}

RpReport check_rp(const ModuleRep& m) {
  require_two(m);
  require(m.dim() > 0, ErrorKind::PreconditionUnmet, "zero module");
  require(split_free(m).free_rank == 0, ErrorKind::PreconditionUnmet, "module has a free summand");
  RpReport r;
  r.stable_type = axis_stable_type(m);
  r.generator_x = nonprojective_generator(m, Axis::X);
  r.generator_y = nonprojective_generator(m, Axis::Y);
  r.rpx = rpx_holds(m, r.stable_type, r.generator_x);
  r.rpy = rpy_holds(m, r.stable_type, r.generator_y);
  r.beta0 = top_dim(m);
  r.beta_minus1 = top_dim(syzygy(m, -1));
  return r;
}

RanksEquivalence prop_ranks_equivalence(const ModuleRep& m) {
  RpReport r = check_rp(m);
  unsigned n = m.alg().n();
  Matrix rad = radical_basis(m);
  const auto& a = r.generator_x;
  const auto& b = r.generator_y;
  RanksEquivalence out;
  out.beta_side = r.beta0 > r.beta_minus1;
  if (block_size(r.stable_type) == 1) {
    out.x_side = !in_span(rad, a) && !is_zero(act(m, 0, 1, a));
    out.y_side = !in_span(rad, b) && !is_zero(act(m, 1, 0, b));
  } else {
    out.x_side = !in_span(rad, a) && !is_zero(act(m, n - 2, 1, a));
    out.y_side = !in_span(rad, b) && !is_zero(act(m, 1, n - 2, b));
  }
  return out;
}

AutomorphismSpec psi_automorphism(const AlgebraParams& alg) {
  return diagonal_automorphism(alg, {1, alg.field()->inv(alg.q())});
}

AutomorphismSpec phi_automorphism(const AlgebraParams& alg) { return diagonal_automorphism(alg, {alg.q(), 1}); }

Hypotheses certify_hypotheses(const ModuleRep& m, unsigned ext, std::uint64_t seed) {
  Hypotheses h;
  if (m.c() != 2) {
    h.failure = "two generators required";
    return h;
  }
  if (m.dim() == 0) {
    h.failure = "zero module";
    return h;
  }
  if (split_free(m).free_rank > 0) {
    h.free_summand = true;
    h.failure = "module has a free summand";
    return h;
  }
  auto v = check_constant(m, {CjtMethod::Exhaustive, ext * m.field()->degree()});
  if (!v.constant) {
    h.failure = "Jordan type is not constant over " + v.certified_over;
    return h;
  }
  JordanType st = v.type->stable();
  unsigned s = block_size(st);
  if (st.blocks() != 1 || (s != 1 && s != m.alg().n() - 1)) {
    h.failure = "stable type " + st.to_string() + " is neither [1] nor [n-1]";
    return h;
  }
  h.stable_type = st;
  h.stable_endo_dim = hom_space(m, m).stable_dim();
  if (h.stable_endo_dim != 1) {
    h.failure = "stable endomorphism dimension " + std::to_string(h.stable_endo_dim);
    return h;
  }
  h.psi_invariant = find_isomorphism(twist(m, psi_automorphism(m.alg())), m, seed).found;
  h.phi_invariant = find_isomorphism(twist(m, phi_automorphism(m.alg())), m, seed).found;
  if (!h.psi_invariant || !h.phi_invariant) h.failure = "twist isomorphism not found";
  return h;
}

const char* to_string(DescentVerdict v) {
  switch (v) {
    case DescentVerdict::IsomorphicToK: return "IsomorphicToK";
    case DescentVerdict::SatisfiesRP: return "SatisfiesRP";
    case DescentVerdict::Violation: return "Violation";
  }
  return "?";
}

DescentStep rp_descent_step(const ModuleRep& m, const Hypotheses& h) {
  require(h.ok(), ErrorKind::PreconditionUnmet, h.failure);
  unsigned n = m.alg().n();
  unsigned s = block_size(*h.stable_type);
  require(s == n - 1 || n >= 3, ErrorKind::PreconditionUnmet, "stable type [1] needs n >= 3");
  require(check_rp(m).rp(), ErrorKind::PreconditionUnmet, "rank property fails");
  DescentStep out;
  out.cosyzygy = syzygy(m, -1);
  if (out.cosyzygy.dim() == 1) {
    out.verdict = DescentVerdict::IsomorphicToK;
    return out;
  }
  try {
    out.verdict = check_rp(out.cosyzygy).rp() ? DescentVerdict::SatisfiesRP : DescentVerdict::Violation;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionUnmet && e.kind() != ErrorKind::NotSingleNonprojective) throw;
    out.verdict = DescentVerdict::Violation;
  }
  return out;
}

std::string Classification::to_string() const {
  return certified ? "SyzygyOfK(" + std::to_string(index) + ")" : "NotCertified";
}

Classification classify_syzygy_of_k(const ModuleRep& m, const ClassifyOptions& opts) {
  Classification out;
  auto give_up = [&](std::string why) {
    out.certified = false;
    out.reason = std::move(why);
    return out;
  };
  auto line = [&](const ModuleRep& x, const RpReport& r, std::string branch) {
    out.trace.push_back({x.dim(), r.stable_type.to_string(), r.beta0, r.beta_minus1, std::move(branch)});
  };

  Hypotheses h = certify_hypotheses(m, opts.ext, opts.seed);
  if (!h.ok()) return give_up(h.failure);
  std::size_t limit = opts.step_limit ? opts.step_limit : 2 * m.dim();
  unsigned n = m.alg().n();

  ModuleRep cur = m;
  std::size_t up = 0;
  while (cur.dim() != 1) {
    RpReport r = check_rp(cur);
    bool ready = r.rp() && (block_size(r.stable_type) == n - 1 || n >= 3);
    line(cur, r, ready ? "rank property" : "ascend");
    if (ready) break;
    if (++up > limit) return give_up("step limit reached while ascending");
    cur = syzygy(cur, 1);
  }

  std::size_t down = 0;
  while (cur.dim() != 1) {
    Hypotheses hc = certify_hypotheses(cur, opts.ext, opts.seed);
    if (!hc.ok()) return give_up("hypotheses lost along the walk: " + hc.failure);
    DescentStep st = rp_descent_step(cur, hc);
    RpReport r = check_rp(cur);
    line(cur, r, to_string(st.verdict));
    if (st.verdict == DescentVerdict::Violation) return give_up("descent violation");
    cur = st.cosyzygy;
    if (++down > limit) return give_up("step limit reached while descending");
  }
  out.trace.push_back({1, "[1]", top_dim(cur), top_dim(syzygy(cur, -1)), "k"});

  int index = int(down) - int(up);
  ModuleRep k = ModuleRep::zero(m.alg(), 1);
  if (!find_isomorphism(m, syzygy(k, index), opts.seed).found) return give_up("no isomorphism to the located syzygy found");
  out.certified = true;
  out.index = index;
  return out;
}

}  // namespace qcjt
