#include "qcjt/field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace qcjt {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 22;
constexpr std::uint32_t kTableOrder = 512;
constexpr std::uint32_t kNoLog = 0xffffffffu;

using Poly = std::vector<std::uint32_t>;  // over GF(p), low to high

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// f mod g, g nonzero
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    std::uint64_t coef = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t sub = coef * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
  Poly result{1};
  result = poly_mod(result, m, p);
  base = poly_mod(base, m, p);
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f != 0) continue;
    out.push_back(f);
    while (v % f == 0) v /= f;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Ben-Or: gcd(x^{p^i} - x, f) = 1 for i <= deg/2
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly h = xp;
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned e) {
  require(e >= 1, ErrorKind::BadRange, "extension degree must be >= 1");
  std::uint64_t count = ipow(p, e);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // idx enumerates (a_{e-1}, ..., a_0) lexicographically
    Poly f(e + 1, 0);
    f[e] = 1;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(p, f)) return f;
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");
}

Field::Field(std::uint32_t p, unsigned e) : p_(p), e_(e) {
  std::uint64_t order = ipow(p, e);
  order_ = static_cast<std::uint32_t>(order);
  if (e == 1) {
    mode_ = Mode::Prime;
    if (p <= (1u << 20)) {
      inv_.assign(p, 0);
      for (std::uint32_t a = 1; a < p; ++a) inv_[a] = inv_mod(a, p);
    }
    return;
  }
  min_poly_ = find_irreducible(p, e);
  neg_.resize(order_);
  for (Elem a = 0; a < order_; ++a) {
    auto d = digits(a);
    for (auto& x : d) x = x == 0 ? 0 : p_ - x;
    neg_[a] = from_digits(d);
  }
  if (order_ <= kTableOrder) {
    mode_ = Mode::Table;
    add_tab_.resize(static_cast<std::size_t>(order_) * order_);
    mul_tab_.resize(static_cast<std::size_t>(order_) * order_);
    inv_.assign(order_, 0);
    for (Elem a = 0; a < order_; ++a) {
      auto da = digits(a);
      for (Elem b = 0; b < order_; ++b) {
        auto db = digits(b);
        for (unsigned i = 0; i < e_; ++i) db[i] = (db[i] + da[i]) % p_;
        add_tab_[a * order_ + b] = static_cast<std::uint16_t>(from_digits(db));
        Elem m = poly_mul(a, b);
        mul_tab_[a * order_ + b] = static_cast<std::uint16_t>(m);
        if (m == 1) inv_[a] = b;
      }
    }
    return;
  }
  mode_ = Mode::Zech;
  std::uint32_t group = order_ - 1;
  auto factors = prime_factors(group);
  Elem gen = 0;
  for (Elem g = 2; g < order_ && gen == 0; ++g) {
    bool full = true;
    for (auto f : factors) {
      Poly r = poly_powmod(digits(g), group / f, min_poly_, p_);
      if (r.size() == 1 && r[0] == 1) {
        full = false;
        break;
      }
    }
    if (full) gen = g;
  }
  require(gen != 0, ErrorKind::Internal, "no multiplicative generator");
  exp_.resize(2 * static_cast<std::size_t>(group));
  log_.assign(order_, kNoLog);
  Elem x = 1;
  for (std::uint32_t k = 0; k < group; ++k) {
    exp_[k] = x;
    exp_[k + group] = x;
    log_[x] = k;
    x = poly_mul(x, gen);
  }
  zech_.resize(group);
  for (std::uint32_t k = 0; k < group; ++k) {
    auto d = digits(exp_[k]);
    d[0] = (d[0] + 1) % p_;
    Elem s = from_digits(d);
    zech_[k] = s == 0 ? kNoLog : log_[s];
  }
}

Elem Field::poly_mul(Elem a, Elem b) const {
  Poly pa = digits(a), pb = digits(b);
  Poly r = poly_mulmod(pa, pb, min_poly_, p_);
  r.resize(e_, 0);
  return from_digits(r);
}

Elem Field::zech_add(Elem a, Elem b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  std::uint32_t group = order_ - 1;
  std::uint32_t la = log_[a], lb = log_[b];
  std::uint32_t k = lb >= la ? lb - la : lb + group - la;
  std::uint32_t z = zech_[k];
  if (z == kNoLog) return 0;
  return exp_[la + z];
}

Elem Field::inv(Elem a) const {
  require(a != 0, ErrorKind::DivisionByZero, "inverse of zero");
  switch (mode_) {
    case Mode::Prime:
      return inv_.empty() ? inv_mod(a, p_) : inv_[a];
    case Mode::Table:
      return inv_[a];
    case Mode::Zech:
      break;
  }
  std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

void Field::axpy(Elem* dst, const Elem* src, Elem f, std::size_t len) const {
  if (f == 0) return;
  switch (mode_) {
    case Mode::Prime: {
      std::uint64_t ff = f;
      for (std::size_t k = 0; k < len; ++k)
        if (src[k]) dst[k] = static_cast<Elem>((dst[k] + ff * src[k]) % p_);
      return;
    }
    case Mode::Table: {
      const std::uint16_t* row = &mul_tab_[static_cast<std::size_t>(f) * order_];
      for (std::size_t k = 0; k < len; ++k)
        if (src[k]) dst[k] = add_tab_[dst[k] * order_ + row[src[k]]];
      return;
    }
    case Mode::Zech:
      break;
  }
  std::uint32_t lf = log_[f];
  for (std::size_t k = 0; k < len; ++k)
    if (src[k]) dst[k] = zech_add(dst[k], exp_[lf + log_[src[k]]]);
}

void Field::scale(Elem* dst, Elem f, std::size_t len) const {
  for (std::size_t k = 0; k < len; ++k) dst[k] = mul(dst[k], f);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(e_);
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
  require(d.size() == e_, ErrorKind::LengthMismatch, "field element has wrong length");
  Elem r = 0;
  for (std::size_t i = e_; i-- > 0;) {
    require(d[i] < p_, ErrorKind::BadInput, "residue out of range");
    r = r * p_ + d[i];
  }
  return r;
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  require(a != 0, ErrorKind::DivisionByZero, "order of zero");
  std::uint64_t ord = order_ - 1;
  for (auto f : prime_factors(ord))
    while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
  return ord;
}

std::string Field::to_string(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::string s = "[";
  for (unsigned i = 0; i < e_; ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

FieldPtr Field::get(std::uint32_t p, unsigned e) {
  require(is_prime(p), ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  require(e >= 1, ErrorKind::BadRange, "extension degree must be >= 1");
  if (e > 1)
    require(ipow(p, e) <= kMaxOrder && e <= 32, ErrorKind::FieldTooLarge,
            "GF(" + std::to_string(p) + "^" + std::to_string(e) + ") is too large");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, e}];
  if (!slot) slot = FieldPtr(new Field(p, e));
  return slot;
}

std::vector<Elem> embedding(const Field& small, const Field& big) {
  require(small.characteristic() == big.characteristic() &&
              big.degree() % small.degree() == 0,
          ErrorKind::FieldMismatch, "no embedding between these fields");
  std::vector<Elem> table(small.order());
  if (small.degree() == 1) {
    for (Elem a = 0; a < small.order(); ++a) table[a] = a;
    return table;
  }
  const auto& mp = small.min_poly();
  Elem root = 0;
  bool found = false;
  for (Elem r = 0; r < big.order() && !found; ++r) {
    Elem v = 0;
    for (std::size_t i = mp.size(); i-- > 0;) v = big.add(big.mul(v, r), mp[i]);
    if (v == 0) {
      root = r;
      found = true;
    }
  }
  require(found, ErrorKind::Internal, "defining polynomial has no root");
  std::vector<Elem> powers(small.degree());
  powers[0] = 1;
  for (unsigned i = 1; i < small.degree(); ++i) powers[i] = big.mul(powers[i - 1], root);
  for (Elem a = 0; a < small.order(); ++a) {
    auto d = small.digits(a);
    Elem v = 0;
    for (unsigned i = 0; i < small.degree(); ++i)
      v = big.add(v, big.mul(d[i], powers[i]));
    table[a] = v;
  }
  return table;
}

FieldPtr extension_with_order(const Field& base, std::uint64_t min_order) {
  unsigned e = base.degree();
  while (ipow(base.characteristic(), e) < min_order) e += base.degree();
  return Field::get(base.characteristic(), e);
}

FieldCtx make_field(std::uint32_t p, unsigned e, unsigned n) {
  require(n >= 2, ErrorKind::BadRange, "n must be >= 2");
  FieldCtx ctx;
  ctx.field = Field::get(p, e);
  ctx.n = n;
  ctx.n_prime = n / std::gcd(n, p);
  std::uint32_t group = ctx.field->order() - 1;
  require(group % ctx.n_prime == 0, ErrorKind::NoPrimitiveRoot,
          "no primitive " + std::to_string(ctx.n_prime) + "-th root of unity in GF(" +
              std::to_string(p) + "^" + std::to_string(e) + ")");
  for (Elem a = 1; a < ctx.field->order(); ++a) {
    if (ctx.field->multiplicative_order(a) == ctx.n_prime) {
      ctx.q = a;
      return ctx;
    }
  }
  fail(ErrorKind::Internal, "root of unity search failed");
}

}  // namespace qcjt
