#include "qcjt/jordan.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace qcjt {

JordanType partition_from_ranks(std::size_t d, unsigned n, const std::vector<std::size_t>& ranks) {
  require(ranks.size() + 1 == n || ranks.size() == n, ErrorKind::LengthMismatch,
          "need ranks r_1..r_{n-1}");
  std::vector<long long> r(n + 2, 0);
  r[0] = static_cast<long long>(d);
  for (std::size_t i = 0; i < ranks.size(); ++i) r[i + 1] = static_cast<long long>(ranks[i]);
  require(r[n] == 0, ErrorKind::NotAPartition, "r_n must be 0");
  JordanType t{n, std::vector<unsigned>(n, 0)};
  for (unsigned i = 1; i <= n; ++i) {
    long long di = r[i - 1] - 2 * r[i] + r[i + 1];
    require(di >= 0, ErrorKind::NotAPartition, "rank sequence is not that of a nilpotent operator");
    t.mults[i - 1] = static_cast<unsigned>(di);
  }
  return t;
}

std::vector<std::size_t> rank_sequence(const Matrix& u, unsigned n) {
  std::vector<std::size_t> r(n - 1, 0);
  if (u.rows() == 0) return r;
  Matrix img = image_basis(u);
  for (unsigned i = 1; i < n; ++i) {
    r[i - 1] = img.cols();
    if (img.cols() == 0 || i + 1 == n) break;
    img = image_basis(u * img);
  }
  return r;
}

JordanType jordan_type_at(const ModuleRep& m, const std::vector<Elem>& lambda) {
  Matrix u = u_lambda_matrix(m, lambda);
  return partition_from_ranks(m.dim(), m.alg().n(), rank_sequence(u, m.alg().n()));
}

std::uint64_t projective_point_count(std::uint64_t order, unsigned c) {
  std::uint64_t total = 0, block = 1;
  for (unsigned k = 0; k < c; ++k) {
    total += block;
    if (block > (1ull << 40)) return ~0ull;
    block *= order;
  }
  return total;
}

std::vector<Elem> projective_point(std::uint64_t order, unsigned c, std::uint64_t index) {
  std::vector<Elem> lam(c, 0);
  for (unsigned k = 0; k < c; ++k) {
    std::uint64_t block = 1;
    for (unsigned j = k + 1; j < c; ++j) block *= order;
    if (index < block) {
      lam[k] = 1;
      for (unsigned j = c; j-- > k + 1;) {
        lam[j] = static_cast<Elem>(index % order);
        index /= order;
      }
      return lam;
    }
    index -= block;
  }
  fail(ErrorKind::BadRange, "projective point index out of range");
}

std::vector<ScanEntry> scan_types(const ModuleRep& m, unsigned e) {
  unsigned e0 = m.field()->degree();
  require(e >= 1 && e % e0 == 0, ErrorKind::BadRange,
          "scan degree must be a multiple of the module field degree");
  FieldPtr F = Field::get(m.field()->characteristic(), e);
  std::uint64_t count = projective_point_count(F->order(), m.c());
  require(count <= kMaxScanPoints, ErrorKind::ScanTooLarge,
          std::to_string(count) + " projective points exceed the scan limit");
  ModuleRep mf = extend_scalars(m, F);
  std::vector<ScanEntry> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    auto lam = projective_point(F->order(), m.c(), k);
    out.push_back({lam, jordan_type_at(mf, lam)});
  }
  return out;
}

const char* to_string(CjtMethod method) {
  switch (method) {
    case CjtMethod::Exhaustive: return "exhaustive";
    case CjtMethod::Extension: return "extension";
    case CjtMethod::Symbolic: return "symbolic";
  }
  return "?";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (unsigned __int128)~0ull) return ~0ull;
  }
  return static_cast<std::uint64_t>(r);
}

FieldPtr generic_field(const Field& base, std::uint64_t min_order) {
  return extension_with_order(base, std::max<std::uint64_t>(min_order, 4096));
}

namespace {

// ---- evaluation grids (1, t_2, ..., t_c), t in codes [0, side) ----

struct InvTable {
  std::unordered_map<Elem, Elem> map;
  Elem operator()(Elem big) const {
    auto it = map.find(big);
    require(it != map.end(), ErrorKind::Internal, "coefficient outside the base field");
    return it->second;
  }
};

InvTable inverse_embedding(const Field& base, const Field& big) {
  auto emb = embedding(base, big);
  InvTable t;
  for (Elem a = 0; a < emb.size(); ++a) t.map.emplace(emb[a], a);
  return t;
}

struct Grid {
  FieldPtr E;
  unsigned c = 0;
  std::size_t side = 0;
  std::vector<Matrix> upow;  // U^i at each grid point
  Matrix vinv;               // inverse Vandermonde on the nodes

  std::size_t size() const { return upow.size(); }

  std::vector<Elem> point(std::size_t k) const {
    std::vector<Elem> lam(c, 1);
    for (unsigned a = 1; a < c; ++a) {
      lam[a] = static_cast<Elem>(k % side);
      k /= side;
    }
    return lam;
  }
};

std::uint64_t grid_size(std::size_t side, unsigned c) {
  std::uint64_t s = 1;
  for (unsigned a = 1; a < c; ++a) {
    s *= side;
    if (s > (1ull << 40)) return s;
  }
  return s;
}

Matrix u_power(const ModuleRep& m, const std::vector<Elem>& lam, unsigned i) {
  Matrix u = u_lambda_matrix(m, lam);
  Matrix p = u;
  for (unsigned k = 1; k < i; ++k) p = p * u;
  return p;
}

Grid make_grid(const ModuleRep& mE, unsigned i, std::size_t side) {
  Grid g;
  g.E = mE.field();
  g.c = mE.c();
  g.side = side;
  require(side <= g.E->order(), ErrorKind::Internal, "extension too small for the grid");
  std::uint64_t n = grid_size(side, g.c);
  g.upow.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) g.upow.push_back(u_power(mE, g.point(k), i));
  Matrix V(g.E, side, side);
  for (std::size_t r = 0; r < side; ++r) {
    Elem x = 1;
    for (std::size_t j = 0; j < side; ++j) {
      V(r, j) = x;
      x = g.E->mul(x, static_cast<Elem>(r));
    }
  }
  g.vinv = inverse(V);
  return g;
}

// Form of the given degree over `base` taking `values` on the grid.
HomogPoly interpolate_form(const Grid& g, std::vector<Elem> values, unsigned degree,
                           const FieldPtr& base, const InvTable& inv) {
  const Field& E = *g.E;
  std::size_t side = g.side;
  std::size_t stride = 1;
  std::vector<Elem> fiber(side), out(side);
  for (unsigned a = 1; a < g.c; ++a) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if ((k / stride) % side != 0) continue;
      for (std::size_t j = 0; j < side; ++j) fiber[j] = values[k + j * stride];
      for (std::size_t r = 0; r < side; ++r) {
        Elem s = 0;
        for (std::size_t j = 0; j < side; ++j) s = E.fma(s, g.vinv(r, j), fiber[j]);
        out[r] = s;
      }
      for (std::size_t j = 0; j < side; ++j) values[k + j * stride] = out[j];
    }
    stride *= side;
  }
  HomogPoly f(base, g.c, degree);
  std::vector<unsigned> exps(g.c);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == 0) continue;
    std::size_t rest = k;
    unsigned tot = 0;
    for (unsigned a = 1; a < g.c; ++a) {
      exps[a] = static_cast<unsigned>(rest % side);
      rest /= side;
      tot += exps[a];
    }
    require(tot <= degree, ErrorKind::Internal, "interpolated form exceeds its degree");
    exps[0] = degree - tot;
    f.add_term(exps, inv(values[k]));
  }
  return f;
}

HomogPoly minor_form(const Grid& g, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols, unsigned degree,
                     const FieldPtr& base, const InvTable& inv) {
  std::vector<Elem> values(g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    values[k] = determinant(select_columns(select_rows(g.upow[k], rows), cols));
  return interpolate_form(g, std::move(values), degree, base, inv);
}

// Rows and columns of a nonsingular g x g submatrix of u (rank u >= g).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> nonzero_minor(const Matrix& u,
                                                                            std::size_t g) {
  Echelon ec = rref(u);
  std::vector<std::size_t> cols(ec.pivots.begin(), ec.pivots.begin() + g);
  Echelon er = rref(transpose(select_columns(u, cols)));
  std::vector<std::size_t> rows(er.pivots.begin(), er.pivots.begin() + g);
  return {rows, cols};
}

std::vector<Elem> random_lambda(std::mt19937_64& rng, const Field& F, unsigned c) {
  for (;;) {
    std::vector<Elem> lam(c);
    bool nz = false;
    for (auto& x : lam) {
      x = static_cast<Elem>(rng() % F.order());
      nz = nz || x != 0;
    }
    if (nz) return lam;
  }
}

// Generic rank of U^i with certificates.
struct Level {
  std::size_t g = 0;
  bool certified = false;
  std::vector<Elem> lambda;  // over E, rank g there
  std::optional<Grid> grid;
  HomogPoly witness;
};

constexpr std::uint64_t kGridCap = 200000;

Level generic_level(const ModuleRep& mE, const FieldPtr& base, const InvTable& inv, unsigned i,
                    std::mt19937_64& rng) {
  Level lv;
  const Field& E = *mE.field();
  for (int s = 0; s < 4; ++s) {
    auto lam = random_lambda(rng, E, mE.c());
    std::size_t r = rank(u_power(mE, lam, i));
    if (lv.lambda.empty() || r > lv.g) {
      lv.g = r;
      lv.lambda = lam;
    }
  }
  for (;;) {
    std::size_t side = i * (lv.g + 1) + 1;
    if (grid_size(side, mE.c()) > kGridCap) return lv;
    Grid grid = make_grid(mE, i, side);
    bool raised = false;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      std::size_t r = rank(grid.upow[k]);
      if (r > lv.g) {
        lv.g = r;
        lv.lambda = grid.point(k);
        raised = true;
        break;
      }
    }
    if (raised) continue;
    if (lv.g == 0) {
      lv.witness = HomogPoly::constant(base, mE.c(), 1);
    } else {
      auto [rows, cols] = nonzero_minor(u_power(mE, lv.lambda, i), lv.g);
      lv.witness = minor_form(grid, rows, cols, static_cast<unsigned>(i * lv.g), base, inv);
    }
    lv.certified = !lv.witness.is_zero();
    lv.grid = std::move(grid);
    return lv;
  }
}

UPoly upoly_mulmod(const Field& f, const UPoly& a, const UPoly& b, const UPoly& m) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) f.axpy(r.data() + i, b.data(), a[i], b.size());
  return upoly_mod(f, std::move(r), m);
}

struct RootPoint {
  FieldPtr F;
  std::vector<Elem> lambda;
};

// A point of P^1 over a finite extension where the binary form vanishes.
std::optional<RootPoint> find_root(const HomogPoly& G) {
  const FieldPtr& B = G.field();
  const Field& f = *B;
  if (G.coeff({0, G.degree()}) == 0) return RootPoint{B, {0, 1}};
  UPoly h(G.degree() + 1, 0);
  for (const auto& [key, c] : G.terms()) h[G.unpack(key)[1]] = c;
  UPoly x{0, 1};
  UPoly w = x;
  for (unsigned k = 1; k < h.size(); ++k) {
    UPoly acc{1};
    // w <- w^Q mod h
    UPoly base = w;
    for (std::uint64_t e = f.order(); e > 0; e >>= 1) {
      if (e & 1) acc = upoly_mulmod(f, acc, base, h);
      base = upoly_mulmod(f, base, base, h);
    }
    w = acc;
    UPoly diff = w;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = f.sub(diff[1], 1);
    while (!diff.empty() && diff.back() == 0) diff.pop_back();
    UPoly g = upoly_gcd(f, h, diff);
    if (g.size() < 2) continue;
    std::uint64_t e = static_cast<std::uint64_t>(f.degree()) * k;
    std::uint64_t order = 1;
    for (std::uint64_t j = 0; j < e && order <= (1u << 22); ++j) order *= f.characteristic();
    if (order > (1u << 22)) return std::nullopt;
    FieldPtr F = Field::get(f.characteristic(), static_cast<unsigned>(e));
    auto emb = embedding(f, *F);
    UPoly gf(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) gf[j] = emb[g[j]];
    for (Elem t = 0; t < F->order(); ++t) {
      Elem v = 0;
      for (std::size_t j = gf.size(); j-- > 0;) v = F->fma(gf[j], v, t);
      if (v == 0) return RootPoint{F, {1, t}};
    }
    fail(ErrorKind::Internal, "distinct-degree factor without roots");
  }
  return std::nullopt;
}

struct CommonZero {
  bool found = false;
  RootPoint point;
};

// c = 2: decides whether all g-minors of U^i share a zero on P^1 over the
// closure.  Starts from the certified witness minor; each round either finds
// a common zero or adds a minor that does not vanish at a root of the gcd.
CommonZero g_minor_common_zero(const ModuleRep& m, const Level& lv, unsigned i,
                               const InvTable& inv) {
  CommonZero cz;
  if (lv.g == 0) return cz;
  HomogPoly G = normalized(lv.witness);
  const FieldPtr& base = m.field();
  while (!G.is_constant()) {
    auto root = find_root(G);
    require(root.has_value(), ErrorKind::MethodUnavailable,
            "gcd root lies in an extension too large to enumerate");
    ModuleRep mf = extend_scalars(m, root->F);
    Matrix u = u_power(mf, root->lambda, i);
    if (rank(u) < lv.g) {
      cz.found = true;
      cz.point = *root;
      return cz;
    }
    auto [rows, cols] = nonzero_minor(u, lv.g);
    HomogPoly next = minor_form(*lv.grid, rows, cols, static_cast<unsigned>(i * lv.g), base, inv);
    HomogPoly h = binary_form_gcd({G, next});
    require(h.degree() < G.degree(), ErrorKind::Internal, "gcd did not shrink");
    G = h;
  }
  return cz;
}

CjtVerdict exhaustive_verdict(const ModuleRep& m, unsigned e) {
  CjtVerdict v;
  v.method = CjtMethod::Exhaustive;
  auto scan = scan_types(m, e);
  FieldPtr F = Field::get(m.field()->characteristic(), e);
  v.constant = true;
  for (std::size_t k = 1; k < scan.size(); ++k) {
    if (scan[k].type != scan[0].type) {
      v.constant = false;
      v.witness = std::make_pair(TypedPoint{F, scan[0].lambda, scan[0].type},
                                 TypedPoint{F, scan[k].lambda, scan[k].type});
      break;
    }
  }
  if (v.constant && !scan.empty()) v.type = scan[0].type;
  v.certified_over = "GF(" + std::to_string(F->characteristic()) + "^" + std::to_string(e) + ")";
  return v;
}

CjtVerdict symbolic_verdict(const ModuleRep& m, std::uint64_t seed) {
  require(m.c() == 2, ErrorKind::MethodUnavailable, "symbolic certificate needs c = 2");
  CjtVerdict v;
  v.method = CjtMethod::Symbolic;
  const FieldPtr& base = m.field();
  unsigned n = m.alg().n();
  std::uint64_t need = static_cast<std::uint64_t>(n) * (m.dim() + 1) + 2;
  FieldPtr E = generic_field(*base, need);
  ModuleRep mE = extend_scalars(m, E);
  InvTable inv = inverse_embedding(*base, *E);
  std::mt19937_64 rng(seed);
  std::vector<Level> levels;
  std::vector<std::size_t> ranks;
  for (unsigned i = 1; i < n; ++i) {
    levels.push_back(generic_level(mE, base, inv, i, rng));
    require(levels.back().certified, ErrorKind::Internal, "generic rank not certified");
    ranks.push_back(levels.back().g);
  }
  JordanType generic = partition_from_ranks(m.dim(), n, ranks);
  v.certified_over = "algebraic closure of GF(" + std::to_string(base->characteristic()) + "^" +
                     std::to_string(base->degree()) + ")";
  for (unsigned i = 1; i < n; ++i) {
    CommonZero cz = g_minor_common_zero(m, levels[i - 1], i, inv);
    if (!cz.found) continue;
    ModuleRep mf = extend_scalars(m, cz.point.F);
    // report the generic point in the larger of the two fields
    v.constant = false;
    v.witness = std::make_pair(TypedPoint{E, levels[i - 1].lambda, jordan_type_at(mE, levels[i - 1].lambda)},
                               TypedPoint{cz.point.F, cz.point.lambda,
                                          jordan_type_at(mf, cz.point.lambda)});
    return v;
  }
  v.constant = true;
  v.type = generic;
  return v;
}

}  // namespace

CjtVerdict check_constant(const ModuleRep& m, const CjtOptions& opts) {
  switch (opts.method) {
    case CjtMethod::Exhaustive:
      return exhaustive_verdict(m, opts.e);
    case CjtMethod::Symbolic:
      return symbolic_verdict(m, opts.seed);
    case CjtMethod::Extension:
      break;
  }
  unsigned e0 = m.field()->degree();
  require(opts.e >= e0, ErrorKind::BadRange, "maximal degree below the module field degree");
  CjtVerdict v;
  v.method = CjtMethod::Extension;
  v.constant = true;
  for (unsigned e = e0; e <= opts.e; e += e0) {
    CjtVerdict part = exhaustive_verdict(m, e);
    if (!part.constant) {
      part.method = CjtMethod::Extension;
      return part;
    }
    if (v.type && part.type && *v.type != *part.type) {
      fail(ErrorKind::Internal, "scan types differ between subfield and extension");
    }
    v.type = part.type;
  }
  v.certified_over = "GF(" + std::to_string(m.field()->characteristic()) + "^e) points, e <= " +
                     std::to_string(opts.e);
  return v;
}

std::vector<HomogPoly> minor_polys(const ModuleRep& m, unsigned i, std::size_t g, std::size_t cap) {
  require(i >= 1 && i < m.alg().n(), ErrorKind::BadRange, "power must lie in [1, n-1]");
  require(g <= m.dim(), ErrorKind::BadRange, "minor size exceeds the dimension");
  const FieldPtr& base = m.field();
  if (g == 0) return {HomogPoly::constant(base, m.c(), 1)};
  std::uint64_t per_side = binomial(m.dim(), g);
  std::uint64_t count = per_side > (1ull << 32) ? ~0ull : per_side * per_side;
  require(count <= cap, ErrorKind::MethodUnavailable,
          std::to_string(count) + " minors exceed the enumeration cap");
  unsigned degree = static_cast<unsigned>(i * g);
  FieldPtr E = extension_with_order(*base, degree + 2);
  InvTable inv = inverse_embedding(*base, *E);
  ModuleRep mE = extend_scalars(m, E);
  require(grid_size(degree + 1, m.c()) <= kGridCap, ErrorKind::MethodUnavailable,
          "interpolation grid too large");
  Grid grid = make_grid(mE, i, degree + 1);
  std::vector<std::vector<std::size_t>> combos;
  std::vector<std::size_t> cur(g);
  for (std::size_t k = 0; k < g; ++k) cur[k] = k;
  for (;;) {
    combos.push_back(cur);
    std::size_t k = g;
    while (k > 0 && cur[k - 1] == m.dim() - g + k - 1) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t j = k; j < g; ++j) cur[j] = cur[j - 1] + 1;
  }
  std::vector<HomogPoly> out;
  out.reserve(combos.size() * combos.size());
  for (const auto& rows : combos)
    for (const auto& cols : combos) out.push_back(minor_form(grid, rows, cols, degree, base, inv));
  return out;
}

bool constant_rank_check(const ModuleRep& m, std::size_t g) {
  if (g == 0) {
    for (const auto& x : m.mats())
      if (!x.is_zero()) return false;
    return true;
  }
  const FieldPtr& base = m.field();
  std::size_t side = g + 2;
  FieldPtr E = generic_field(*base, side + 1);
  ModuleRep mE = extend_scalars(m, E);
  InvTable inv = inverse_embedding(*base, *E);
  require(grid_size(side, m.c()) <= kGridCap, ErrorKind::MethodUnavailable,
          "certificate grid too large");
  Grid grid = make_grid(mE, 1, side);
  std::size_t best = 0, best_k = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::size_t r = rank(grid.upow[k]);
    if (r > best) {
      best = r;
      best_k = k;
    }
  }
  // rank <= g on the grid means every (g+1)-minor vanishes identically;
  // rank < g everywhere on it means every g-minor does
  if (best != g) return false;
  if (m.c() != 2) {
    std::uint64_t count = projective_point_count(base->order(), m.c());
    require(count <= kMaxScanPoints, ErrorKind::ScanTooLarge, "too many points for the fallback");
    for (std::uint64_t k = 0; k < count; ++k)
      if (rank(u_lambda_matrix(m, projective_point(base->order(), m.c(), k))) < g) return false;
    return true;
  }
  Level lv;
  lv.g = g;
  lv.lambda = grid.point(best_k);
  auto [rows, cols] = nonzero_minor(grid.upow[best_k], g);
  lv.witness = minor_form(grid, rows, cols, static_cast<unsigned>(g), base, inv);
  lv.certified = true;
  lv.grid = std::move(grid);
  return !g_minor_common_zero(m, lv, 1, inv).found;
}

RankProfile generic_rank_profile(const ModuleRep& m, std::uint64_t seed) {
  RankProfile prof;
  const FieldPtr& base = m.field();
  unsigned n = m.alg().n();
  std::uint64_t need = static_cast<std::uint64_t>(n) * (m.dim() + 1) + 2;
  FieldPtr E = generic_field(*base, need);
  ModuleRep mE = extend_scalars(m, E);
  InvTable inv = inverse_embedding(*base, *E);
  std::mt19937_64 rng(seed);
  prof.certified = true;
  for (unsigned i = 1; i < n; ++i) {
    Level lv = generic_level(mE, base, inv, i, rng);
    prof.g.push_back(lv.g);
    prof.certified = prof.certified && lv.certified;
  }
  return prof;
}

}  // namespace qcjt
