#include "qcjt/poly.hpp"

#include <algorithm>

namespace qcjt {

namespace {

void compatible(const HomogPoly& a, const HomogPoly& b) {
  require(a.field() == b.field(), ErrorKind::FieldMismatch, "polynomials over different fields");
  require(a.nvars() == b.nvars(), ErrorKind::LengthMismatch, "different numbers of variables");
}

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

HomogPoly::HomogPoly(FieldPtr field, unsigned nvars, unsigned degree)
    : field_(std::move(field)), nvars_(nvars), degree_(degree) {
  require(nvars >= 1 && nvars <= 8, ErrorKind::BadRange, "between 1 and 8 variables supported");
  require(degree <= 255, ErrorKind::BadRange, "degree above 255");
}

HomogPoly HomogPoly::constant(FieldPtr field, unsigned nvars, Elem value) {
  HomogPoly p(std::move(field), nvars, 0);
  if (value != 0) p.terms_[0] = value;
  return p;
}

HomogPoly HomogPoly::variable(FieldPtr field, unsigned nvars, unsigned i) {
  std::vector<unsigned> e(nvars, 0);
  require(i < nvars, ErrorKind::BadRange, "variable index out of range");
  e[i] = 1;
  return monomial(std::move(field), e, 1);
}

HomogPoly HomogPoly::monomial(FieldPtr field, const std::vector<unsigned>& exps, Elem coef) {
  unsigned deg = 0;
  for (auto x : exps) deg += x;
  HomogPoly p(std::move(field), static_cast<unsigned>(exps.size()), deg);
  p.add_term(exps, coef);
  return p;
}

HomogPoly::Key HomogPoly::pack(const std::vector<unsigned>& exps) const {
  require(exps.size() == nvars_, ErrorKind::LengthMismatch, "exponent vector length");
  Key k = 0;
  for (unsigned i = 0; i < nvars_; ++i) {
    require(exps[i] <= 255, ErrorKind::BadRange, "exponent above 255");
    k = (k << 8) | exps[i];
  }
  return k;
}

std::vector<unsigned> HomogPoly::unpack(Key key) const {
  std::vector<unsigned> e(nvars_);
  for (unsigned i = nvars_; i-- > 0;) {
    e[i] = static_cast<unsigned>(key & 0xff);
    key >>= 8;
  }
  return e;
}

Elem HomogPoly::coeff(const std::vector<unsigned>& exps) const {
  auto it = terms_.find(pack(exps));
  return it == terms_.end() ? 0 : it->second;
}

void HomogPoly::add_term(const std::vector<unsigned>& exps, Elem c) {
  unsigned deg = 0;
  for (auto x : exps) deg += x;
  require(deg == degree_, ErrorKind::DegreeMismatch, "term of wrong degree");
  if (c == 0) return;
  Key k = pack(exps);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second = field_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Elem HomogPoly::leading_coeff() const {
  return terms_.empty() ? 0 : terms_.begin()->second;
}

Elem HomogPoly::eval(const std::vector<Elem>& lambda) const {
  require(lambda.size() == nvars_, ErrorKind::LengthMismatch, "evaluation point length");
  const Field& f = *field_;
  // powers[i][k] = lambda_i^k
  std::vector<std::vector<Elem>> powers(nvars_, std::vector<Elem>(degree_ + 1, 1));
  for (unsigned i = 0; i < nvars_; ++i)
    for (unsigned k = 1; k <= degree_; ++k) powers[i][k] = f.mul(powers[i][k - 1], lambda[i]);
  Elem s = 0;
  for (const auto& [key, c] : terms_) {
    Elem t = c;
    auto e = unpack(key);
    for (unsigned i = 0; i < nvars_; ++i) t = f.mul(t, powers[i][e[i]]);
    s = f.add(s, t);
  }
  return s;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : terms_) {
    if (!s.empty()) s += " + ";
    auto e = unpack(key);
    std::string mono;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "L" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += field_->to_string(c);
    else if (c == 1)
      s += mono;
    else
      s += field_->to_string(c) + "*" + mono;
  }
  return s;
}

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
  compatible(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  require(a.degree() == b.degree(), ErrorKind::DegreeMismatch, "sum of forms of different degree");
  HomogPoly r = a;
  for (const auto& [key, c] : b.terms()) r.add_term(b.unpack(key), c);
  return r;
}

HomogPoly operator-(const HomogPoly& a) { return scaled(a, a.field()->neg(1)); }

HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) { return a + (-b); }

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  compatible(a, b);
  HomogPoly r(a.field(), a.nvars(), a.degree() + b.degree());
  const Field& f = *a.field();
  for (const auto& [ka, ca] : a.terms()) {
    auto ea = a.unpack(ka);
    for (const auto& [kb, cb] : b.terms()) {
      auto eb = b.unpack(kb);
      for (unsigned i = 0; i < a.nvars(); ++i) eb[i] += ea[i];
      r.add_term(eb, f.mul(ca, cb));
    }
  }
  return r;
}

HomogPoly scaled(const HomogPoly& a, Elem s) {
  HomogPoly r(a.field(), a.nvars(), a.degree());
  for (const auto& [key, c] : a.terms()) r.add_term(a.unpack(key), a.field()->mul(c, s));
  return r;
}

HomogPoly normalized(const HomogPoly& a) {
  if (a.is_zero()) return a;
  return scaled(a, a.field()->inv(a.leading_coeff()));
}

HomogPoly map_field(const HomogPoly& a, const FieldPtr& target, const std::vector<Elem>& table) {
  HomogPoly r(target, a.nvars(), a.degree());
  for (const auto& [key, c] : a.terms()) r.add_term(a.unpack(key), table[c]);
  return r;
}

UPoly upoly_mod(const Field& f, UPoly a, const UPoly& b) {
  require(!b.empty(), ErrorKind::DivisionByZero, "polynomial division by zero");
  trim(a);
  Elem lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    Elem coef = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    f.axpy(a.data() + shift, b.data(), f.neg(coef), b.size());
    trim(a);
  }
  return a;
}

UPoly upoly_gcd(const Field& f, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Elem inv = f.inv(a.back());
    f.scale(a.data(), inv, a.size());
  }
  return a;
}

HomogPoly binary_form_gcd(const std::vector<HomogPoly>& fs) {
  require(!fs.empty(), ErrorKind::AllZero, "gcd of an empty list");
  const FieldPtr& field = fs[0].field();
  const Field& f = *field;
  bool any = false;
  unsigned lambda1_power = 0;
  UPoly g;
  for (const auto& p : fs) {
    require(p.nvars() == 2, ErrorKind::LengthMismatch, "binary forms only");
    require(p.field() == field, ErrorKind::FieldMismatch, "forms over different fields");
    if (p.is_zero()) continue;
    // p(1, t) has t^j coefficient equal to that of Lambda1^{D-j} Lambda2^j
    UPoly dehom(p.degree() + 1, 0);
    for (const auto& [key, c] : p.terms()) dehom[p.unpack(key)[1]] = c;
    trim(dehom);
    unsigned deficit = p.degree() - static_cast<unsigned>(dehom.size() - 1);
    if (!any) {
      lambda1_power = deficit;
      g = dehom;
      any = true;
    } else {
      lambda1_power = std::min(lambda1_power, deficit);
      g = upoly_gcd(f, g, dehom);
    }
  }
  require(any, ErrorKind::AllZero, "gcd of zero forms");
  g = upoly_gcd(f, g, {});
  unsigned gdeg = static_cast<unsigned>(g.size() - 1);
  HomogPoly r(field, 2, gdeg + lambda1_power);
  for (unsigned j = 0; j <= gdeg; ++j)
    r.add_term({gdeg - j + lambda1_power, j}, g[j]);
  return normalized(r);
}

}  // namespace qcjt
