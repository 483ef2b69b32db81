#include "qcjt/homology.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

namespace qcjt {

namespace {

// Left multiplication by x_i on a free module A^beta, applied to the
// columns of v (rows indexed by generator * n^c + monomial).
Matrix free_action(const AlgebraParams& alg, unsigned i, std::size_t beta, const Matrix& v) {
  const MonomialBasis& t = monomial_table(alg.c, alg.n());
  const Field& f = *alg.field();
  std::size_t N = t.monos.size();
  Elem qinv = f.inv(alg.q());
  Matrix out(v.field(), v.rows(), v.cols());
  for (std::size_t j = 0; j < beta; ++j)
    for (std::size_t mu = 0; mu < N; ++mu) {
      int to = t.target[i][mu];
      if (to < 0) continue;
      Elem coef = f.pow(qinv, t.shift[i][mu]);
      f.axpy(out.row(j * N + static_cast<std::size_t>(to)), v.row(j * N + mu), coef, v.cols());
    }
  return out;
}

Matrix socle_action(const ModuleRep& m) {
  Matrix s = Matrix::identity(m.field(), m.dim());
  for (unsigned i = m.c(); i-- > 0;)
    for (unsigned k = 0; k + 1 < m.alg().n(); ++k) s = m.X(i) * s;
  return s;
}

// Standard basis indices completing the column space of `basis`.
std::vector<std::size_t> complement_indices(const Matrix& basis, std::size_t d) {
  Matrix ext = hstack({basis, Matrix::identity(basis.field(), d)});
  std::vector<std::size_t> out;
  for (auto p : pivot_columns(ext))
    if (p >= basis.cols()) out.push_back(p - basis.cols());
  return out;
}

struct Presentation {
  std::size_t beta = 0;
  Matrix map;        // cover map of M
  Matrix relations;  // generators of the relation module, free coordinates
};

Presentation presentation(const ModuleRep& m) {
  ProjectiveCover pc = projective_cover(m);
  Presentation p;
  p.beta = pc.beta0;
  p.map = pc.map;
  if (pc.kernel.dim() == 0)
    p.relations = Matrix(m.field(), pc.map.cols(), 0);
  else
    p.relations = pc.kernel_in_free * top_vectors(pc.kernel);
  return p;
}

// Columns are the tuples (n_1..n_beta) in N^beta killed by every relation.
Matrix hom_solutions(const Presentation& pres, const ModuleRep& n,
                     const std::vector<Matrix>& acts) {
  std::size_t N = acts.size();
  std::size_t dn = n.dim();
  const Field& f = *n.field();
  std::size_t nrel = pres.relations.cols();
  Matrix sys(n.field(), std::max<std::size_t>(nrel * dn, 1), pres.beta * dn);
  for (std::size_t r = 0; r < nrel; ++r)
    for (std::size_t j = 0; j < pres.beta; ++j)
      for (std::size_t mu = 0; mu < N; ++mu) {
        Elem k = pres.relations(j * N + mu, r);
        if (k == 0) continue;
        const Matrix& a = acts[mu];
        for (std::size_t row = 0; row < dn; ++row)
          f.axpy(sys.row(r * dn + row) + j * dn, a.row(row), k, dn);
      }
  return kernel_basis(sys);
}

Matrix intertwiner(const std::vector<std::size_t>& piv,
                   const Matrix& piv_inv, const ModuleRep& n, const std::vector<Matrix>& acts,
                   const std::vector<Elem>& sol) {
  std::size_t N = acts.size();
  std::size_t dn = n.dim();
  Matrix G(n.field(), dn, piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k) {
    std::size_t j = piv[k] / N, mu = piv[k] % N;
    std::vector<Elem> nj(sol.begin() + j * dn, sol.begin() + (j + 1) * dn);
    G.set_column(k, mat_vec(acts[mu], nj));
  }
  return G * piv_inv;
}

}  // namespace

Matrix top_vectors(const ModuleRep& m) {
  std::size_t d = m.dim();
  if (d == 0) return Matrix(m.field(), 0, 0);
  auto idx = complement_indices(radical_basis(m), d);
  Matrix out(m.field(), d, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) out(idx[j], j) = 1;
  return out;
}

ProjectiveCover projective_cover(const ModuleRep& m) {
  ProjectiveCover pc;
  const AlgebraParams& alg = m.alg();
  pc.top = top_vectors(m);
  pc.beta0 = pc.top.cols();
  if (pc.beta0 == 0) {
    pc.map = Matrix(m.field(), m.dim(), 0);
    pc.kernel_in_free = Matrix(m.field(), 0, 0);
    pc.kernel = ModuleRep::zero(alg, 0);
    return pc;
  }
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < pc.beta0; ++j) blocks.push_back(orbit_columns(m, pc.top.column(j)));
  pc.map = hstack(blocks);
  std::vector<std::size_t> free;
  pc.kernel_in_free = kernel_basis(pc.map, &free);
  std::vector<Matrix> acts;
  for (unsigned i = 0; i < alg.c; ++i)
    acts.push_back(select_rows(free_action(alg, i, pc.beta0, pc.kernel_in_free), free));
  pc.kernel = ModuleRep(alg, std::move(acts));
  return pc;
}

ModuleRep syzygy(const ModuleRep& m, int i) {
  if (i == 0) return m;
  if (i < 0) return dual_module(syzygy(dual_module(m), -i));
  ModuleRep cur = m;
  std::size_t guard = size_guard();
  for (int k = 0; k < i; ++k) {
    cur = projective_cover(cur).kernel;
    require(cur.dim() <= guard, ErrorKind::SizeGuardExceeded,
            "syzygy " + std::to_string(k + 1) + " has dimension " + std::to_string(cur.dim()) +
                " above the size guard " + std::to_string(guard));
  }
  return cur;
}

ModuleRep quotient_module(const ModuleRep& m, const Matrix& sub) {
  std::size_t d = m.dim();
  Matrix S = sub.cols() == 0 ? Matrix(m.field(), d, 0) : image_basis(sub);
  auto comp = complement_indices(S, d);
  Matrix C(m.field(), d, comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j) C(comp[j], j) = 1;
  Matrix Qinv = inverse(hstack({S, C}));
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < comp.size(); ++j) rows.push_back(S.cols() + j);
  std::vector<Matrix> acts;
  for (const auto& x : m.mats()) acts.push_back(select_rows(Qinv * (x * C), rows));
  return ModuleRep(m.alg(), std::move(acts));
}

FreeSplit split_free(const ModuleRep& m) {
  FreeSplit out;
  if (m.dim() == 0) {
    out.core = m;
    return out;
  }
  Matrix s = socle_action(m);
  auto piv = pivot_columns(s);
  out.free_rank = piv.size();
  if (piv.empty()) {
    out.core = m;
    return out;
  }
  std::vector<Matrix> blocks;
  for (auto p : piv) {
    std::vector<Elem> w(m.dim(), 0);
    w[p] = 1;
    blocks.push_back(orbit_columns(m, w));
  }
  out.core = quotient_module(m, hstack(blocks));
  return out;
}

std::size_t size_guard() {
  if (const char* env = std::getenv("QCJT_SIZE_GUARD")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      fail(ErrorKind::BadInput, "QCJT_SIZE_GUARD is not a number");
    }
  }
  return 4000;
}

std::vector<std::size_t> betti_sequence(const ModuleRep& m, std::size_t N) {
  std::size_t guard = size_guard();
  std::vector<std::size_t> betas;
  ModuleRep cur = m;
  for (std::size_t t = 0; t <= N; ++t) {
    require(cur.dim() <= guard, ErrorKind::SizeGuardExceeded,
            "syzygy " + std::to_string(t) + " has dimension " + std::to_string(cur.dim()) +
                " above the size guard " + std::to_string(guard));
    if (t == N) {
      betas.push_back(cur.dim() == 0 ? 0 : cur.dim() - radical_basis(cur).cols());
      break;
    }
    ProjectiveCover pc = projective_cover(cur);
    betas.push_back(pc.beta0);
    cur = std::move(pc.kernel);
  }
  return betas;
}

unsigned complexity_estimate(const std::vector<std::size_t>& betas) {
  require(betas.size() >= 6, ErrorKind::TooFewEntries, "need at least 6 Betti numbers");
  std::size_t N = betas.size() - 1;
  if (betas[N] == 0) return 0;
  std::size_t h = (N + 1) / 2;
  if (betas[h] == 0) return 1;
  for (unsigned m = 1; m < 64; ++m) {
    double ratio = static_cast<double>(betas[N]) / static_cast<double>(betas[h]) *
                   std::pow(static_cast<double>(h + 1) / static_cast<double>(N + 1), m - 1.0);
    if (ratio <= 1.25) return m;
  }
  return 64;
}

HomSpace hom_space(const ModuleRep& m, const ModuleRep& n) {
  require(m.alg() == n.alg(), ErrorKind::AlgebraMismatch, "modules over different algebras");
  HomSpace hs;
  if (m.dim() == 0 || n.dim() == 0) return hs;
  Presentation pres = presentation(m);
  auto acts = monomial_actions(n);
  Matrix sols = hom_solutions(pres, n, acts);
  hs.dim = sols.cols();
  auto piv = pivot_columns(pres.map);
  Matrix piv_inv = inverse(select_columns(pres.map, piv));
  for (std::size_t s = 0; s < sols.cols(); ++s)
    hs.basis.push_back(intertwiner(piv, piv_inv, n, acts, sols.column(s)));
  if (hs.dim == 0) return hs;
  // maps through A^r: v_j -> a_j w with (a_j) in Hom(M, A) and w a top vector of n
  ModuleRep A = regular_representation(m.alg());
  Matrix homA = hom_solutions(pres, A, monomial_actions(A));
  std::size_t N = A.dim();
  Matrix tops = top_vectors(n);
  std::vector<Matrix> orbits;
  for (std::size_t t = 0; t < tops.cols(); ++t) orbits.push_back(orbit_columns(n, tops.column(t)));
  std::size_t dn = n.dim();
  Matrix proj(n.field(), pres.beta * dn, homA.cols() * orbits.size());
  std::size_t col = 0;
  for (std::size_t h = 0; h < homA.cols(); ++h)
    for (const auto& orb : orbits) {
      for (std::size_t j = 0; j < pres.beta; ++j) {
        std::vector<Elem> a(N);
        for (std::size_t mu = 0; mu < N; ++mu) a[mu] = homA(j * N + mu, h);
        auto img = mat_vec(orb, a);
        for (std::size_t r = 0; r < dn; ++r) proj(j * dn + r, col) = img[r];
      }
      ++col;
    }
  hs.dim_projective = rank(proj);
  return hs;
}

std::size_t hom_dim_direct(const ModuleRep& m, const ModuleRep& n) {
  require(m.alg() == n.alg(), ErrorKind::AlgebraMismatch, "modules over different algebras");
  std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return 0;
  const Field& f = *m.field();
  // unknown F(r, s) at index r * dm + s
  Matrix sys(m.field(), m.c() * dn * dm, dn * dm);
  for (unsigned i = 0; i < m.c(); ++i)
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t s = 0; s < dm; ++s) {
        std::size_t eq = (i * dn + r) * dm + s;
        // (F X^M)(r, s) = sum_k F(r, k) X^M(k, s)
        for (std::size_t k = 0; k < dm; ++k)
          sys(eq, r * dm + k) = f.add(sys(eq, r * dm + k), m.X(i)(k, s));
        // (X^N F)(r, s) = sum_k X^N(r, k) F(k, s)
        for (std::size_t k = 0; k < dn; ++k)
          sys(eq, k * dm + s) = f.sub(sys(eq, k * dm + s), n.X(i)(r, k));
      }
  return dn * dm - rank(sys);
}

IsoSearch find_isomorphism(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed, int trials) {
  IsoSearch out;
  if (!(m.alg() == n.alg()) || m.dim() != n.dim()) return out;
  if (m.dim() == 0) {
    out.found = true;
    out.intertwiner = Matrix(m.field(), 0, 0);
    return out;
  }
  HomSpace hs = hom_space(m, n);
  if (hs.basis.empty()) return out;
  std::mt19937_64 rng(seed);
  const Field& base = *m.field();
  for (unsigned k = 1; k <= 3; ++k) {
    std::uint64_t order = 1;
    for (unsigned j = 0; j < base.degree() * k; ++j) order *= base.characteristic();
    if (order > (1u << 22)) break;
    FieldPtr F = Field::get(base.characteristic(), base.degree() * k);
    auto emb = embedding(base, *F);
    std::vector<Matrix> basis;
    for (const auto& b : hs.basis) basis.push_back(map_entries(b, F, emb));
    for (int t = 0; t < trials; ++t) {
      Matrix cand(F, m.dim(), m.dim());
      for (const auto& b : basis) {
        Elem coef = static_cast<Elem>(rng() % F->order());
        if (coef != 0) cand = cand + scaled(b, coef);
      }
      if (rank(cand) == m.dim()) {
        out.found = true;
        out.intertwiner = std::move(cand);
        return out;
      }
    }
  }
  return out;
}

ModuleRep nakayama_twist(const ModuleRep& m) {
  return twist(m, nakayama_automorphism(m.alg()).spec);
}

ModuleRep ar_translate(const ModuleRep& m) {
  require(split_free(m).free_rank == 0, ErrorKind::FreeSummand,
          "module has a free summand; split it off first");
  return syzygy(nakayama_twist(m), 2);
}

}  // namespace qcjt
