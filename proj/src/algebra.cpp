#include "qcjt/algebra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "qcjt/module.hpp"

namespace qcjt {

std::size_t AlgebraParams::dim() const {
  std::size_t d = 1;
  for (unsigned i = 0; i < c; ++i) d *= ctx.n;
  return d;
}

AlgebraParams AlgebraParams::opposite() const {
  AlgebraParams op = *this;
  op.ctx.q = ctx.field->inv(ctx.q);
  return op;
}

AlgebraParams make_algebra(const FieldCtx& ctx, unsigned c) {
  require(c >= 1, ErrorKind::BadRange, "c must be >= 1");
  require(ctx.n >= 2, ErrorKind::BadRange, "n must be >= 2");
  return AlgebraParams{ctx, c};
}

AlgebraParams make_algebra(std::uint32_t p, unsigned e, unsigned n, unsigned c) {
  return make_algebra(make_field(p, e, n), c);
}

AlgebraParams extend_algebra(const AlgebraParams& alg, const FieldPtr& big,
                             const std::vector<Elem>& table) {
  AlgebraParams out = alg;
  out.ctx.field = big;
  out.ctx.q = table[alg.q()];
  return out;
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  require(m.size() == c, ErrorKind::LengthMismatch, "monomial length");
  std::size_t code = 0;
  for (unsigned i = c; i-- > 0;) {
    require(m[i] < n, ErrorKind::BadRange, "exponent out of range");
    code = code * n + m[i];
  }
  return code_to_index_[code];
}

const MonomialBasis& monomial_table(unsigned c, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{c, n}];
  if (slot) return *slot;
  auto t = std::make_unique<MonomialBasis>();
  t->c = c;
  t->n = n;
  std::size_t dim = 1;
  for (unsigned i = 0; i < c; ++i) dim *= n;
  for (std::size_t code = 0; code < dim; ++code) {
    Monomial m(c);
    std::size_t rest = code;
    for (unsigned i = 0; i < c; ++i) {
      m[i] = static_cast<unsigned>(rest % n);
      rest /= n;
    }
    t->monos.push_back(m);
  }
  auto deg = [](const Monomial& m) {
    unsigned s = 0;
    for (auto x : m) s += x;
    return s;
  };
  std::sort(t->monos.begin(), t->monos.end(), [&](const Monomial& a, const Monomial& b) {
    unsigned da = deg(a), db = deg(b);
    if (da != db) return da < db;
    return a > b;
  });
  t->code_to_index_.resize(dim);
  t->degree.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::size_t code = 0;
    for (unsigned i = c; i-- > 0;) code = code * n + t->monos[j][i];
    t->code_to_index_[code] = j;
    t->degree[j] = deg(t->monos[j]);
  }
  t->target.assign(c, std::vector<int>(dim, -1));
  t->shift.assign(c, std::vector<unsigned>(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    const Monomial& m = t->monos[j];
    unsigned prefix = 0;
    for (unsigned i = 0; i < c; ++i) {
      if (m[i] + 1 < n) {
        Monomial up = m;
        ++up[i];
        t->target[i][j] = static_cast<int>(t->index_of(up));
        t->shift[i][j] = prefix;
      }
      prefix += m[i];
    }
  }
  t->first.assign(dim, 0);
  t->rest.assign(dim, 0);
  for (std::size_t j = 1; j < dim; ++j) {
    Monomial m = t->monos[j];
    unsigned i = 0;
    while (m[i] == 0) ++i;
    --m[i];
    t->first[j] = i;
    t->rest[j] = t->index_of(m);
  }
  t->socle = dim - 1;
  slot = std::move(t);
  return *slot;
}

std::vector<Monomial> monomial_basis(const AlgebraParams& alg) {
  return monomial_table(alg.c, alg.n()).monos;
}

std::pair<long, Elem> monomial_product(const AlgebraParams& alg, std::size_t a, std::size_t b) {
  const MonomialBasis& t = monomial_table(alg.c, alg.n());
  const Field& f = *alg.field();
  Elem qinv = f.inv(alg.q());
  const Monomial& ea = t.monos[a];
  long cur = static_cast<long>(b);
  Elem coef = 1;
  for (unsigned i = alg.c; i-- > 0;) {
    for (unsigned k = 0; k < ea[i]; ++k) {
      int next = t.target[i][cur];
      if (next < 0) return {-1, 0};
      coef = f.mul(coef, f.pow(qinv, t.shift[i][cur]));
      cur = next;
    }
  }
  return {cur, coef};
}

std::vector<Matrix> left_regular_matrices(const AlgebraParams& alg) {
  const MonomialBasis& t = monomial_table(alg.c, alg.n());
  const Field& f = *alg.field();
  Elem qinv = f.inv(alg.q());
  std::size_t dim = t.monos.size();
  std::vector<Matrix> mats;
  for (unsigned i = 0; i < alg.c; ++i) {
    Matrix x(alg.field(), dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      int to = t.target[i][j];
      if (to >= 0) x(static_cast<std::size_t>(to), j) = f.pow(qinv, t.shift[i][j]);
    }
    mats.push_back(std::move(x));
  }
  return mats;
}

ModuleRep regular_representation(const AlgebraParams& alg) {
  return ModuleRep(alg, left_regular_matrices(alg));
}

ModuleRep radical_quotient_module(const AlgebraParams& alg, unsigned s, unsigned t) {
  unsigned top = (alg.n() - 1) * alg.c + 1;
  require(s < t && t <= top, ErrorKind::BadRange,
          "need 0 <= s < t <= " + std::to_string(top));
  const MonomialBasis& tab = monomial_table(alg.c, alg.n());
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < tab.monos.size(); ++j)
    if (tab.degree[j] >= s && tab.degree[j] < t) keep.push_back(j);
  std::vector<Matrix> mats;
  for (const auto& x : left_regular_matrices(alg))
    mats.push_back(select_columns(select_rows(x, keep), keep));
  return ModuleRep(alg, std::move(mats));
}

AutomorphismSpec identity_automorphism(const AlgebraParams& alg) {
  return {Matrix::identity(alg.field(), alg.c)};
}

AutomorphismSpec diagonal_automorphism(const AlgebraParams& alg, const std::vector<Elem>& alphas) {
  require(alphas.size() == alg.c, ErrorKind::LengthMismatch, "one scalar per generator");
  Matrix e(alg.field(), alg.c, alg.c);
  for (unsigned i = 0; i < alg.c; ++i) e(i, i) = alphas[i];
  return {e};
}

bool validate_automorphism(const AlgebraParams& alg, const AutomorphismSpec& spec) {
  const Matrix& E = spec.E;
  if (E.rows() != alg.c || E.cols() != alg.c || E.field() != alg.field()) return false;
  if (rank(E) < alg.c) return false;
  auto xs = left_regular_matrices(alg);
  std::vector<Matrix> ys;
  for (unsigned j = 0; j < alg.c; ++j) {
    Matrix y(alg.field(), xs[0].rows(), xs[0].cols());
    for (unsigned i = 0; i < alg.c; ++i)
      if (E(i, j) != 0) y = y + scaled(xs[i], E(i, j));
    ys.push_back(std::move(y));
  }
  return validate_module(ModuleRep(alg, std::move(ys)));
}

NakayamaAutomorphism nakayama_automorphism(const AlgebraParams& alg) {
  const MonomialBasis& t = monomial_table(alg.c, alg.n());
  const Field& f = *alg.field();
  std::size_t dim = t.monos.size();
  auto pi = [&](std::pair<long, Elem> prod) -> Elem {
    return prod.first == static_cast<long>(t.socle) ? prod.second : 0;
  };
  NakayamaAutomorphism nu;
  std::vector<Elem> alphas;
  for (unsigned i = 0; i < alg.c; ++i) {
    Monomial gen(alg.c, 0);
    gen[i] = 1;
    std::size_t gi = t.index_of(gen);
    bool found = false;
    for (unsigned m = 0; m < alg.ctx.n_prime && !found; ++m) {
      Elem qm = f.pow(alg.q(), m);
      bool ok = true;
      for (std::size_t b = 0; b < dim && ok; ++b)
        ok = pi(monomial_product(alg, gi, b)) == f.mul(qm, pi(monomial_product(alg, b, gi)));
      if (ok) {
        nu.exponents.push_back(m);
        alphas.push_back(qm);
        found = true;
      }
    }
    require(found, ErrorKind::InconsistentForm, "no diagonal Nakayama exponent");
  }
  // full check over all pairs of basis monomials
  for (std::size_t a = 0; a < dim; ++a) {
    Elem scale = 1;
    for (unsigned i = 0; i < alg.c; ++i) scale = f.mul(scale, f.pow(alphas[i], t.monos[a][i]));
    for (std::size_t b = 0; b < dim; ++b)
      require(pi(monomial_product(alg, a, b)) == f.mul(scale, pi(monomial_product(alg, b, a))),
              ErrorKind::InconsistentForm, "Frobenius identity fails");
  }
  nu.spec = diagonal_automorphism(alg, alphas);
  return nu;
}

}  // namespace qcjt
