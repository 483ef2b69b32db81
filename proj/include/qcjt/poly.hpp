#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcjt/field.hpp"

namespace qcjt {

// Homogeneous polynomial in Lambda_1..Lambda_c (c <= 8).  Exponent vectors
// are packed one byte per variable with Lambda_1 in the most significant
// byte, so descending key order is graded-lex order.
class HomogPoly {
 public:
  using Key = std::uint64_t;
  using Terms = std::map<Key, Elem, std::greater<Key>>;

  HomogPoly() = default;
  HomogPoly(FieldPtr field, unsigned nvars, unsigned degree);

  static HomogPoly zero(FieldPtr field, unsigned nvars, unsigned degree = 0) {
    return HomogPoly(std::move(field), nvars, degree);
  }
  static HomogPoly constant(FieldPtr field, unsigned nvars, Elem value);
  static HomogPoly variable(FieldPtr field, unsigned nvars, unsigned i);
  static HomogPoly monomial(FieldPtr field, const std::vector<unsigned>& exps, Elem coef);

  const FieldPtr& field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return degree_ == 0 || terms_.empty(); }

  Key pack(const std::vector<unsigned>& exps) const;
  std::vector<unsigned> unpack(Key key) const;

  Elem coeff(const std::vector<unsigned>& exps) const;
  // Adds c to the coefficient of the given monomial.
  void add_term(const std::vector<unsigned>& exps, Elem c);
  // Coefficient of the grlex-leading term (0 for the zero polynomial).
  Elem leading_coeff() const;

  Elem eval(const std::vector<Elem>& lambda) const;

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_ &&
           (a.terms_.empty() || a.degree_ == b.degree_);
  }

  std::string to_string() const;

 private:
  FieldPtr field_;
  unsigned nvars_ = 0;
  unsigned degree_ = 0;
  Terms terms_;
};

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b);
HomogPoly operator-(const HomogPoly& a);
HomogPoly operator-(const HomogPoly& a, const HomogPoly& b);
HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
HomogPoly scaled(const HomogPoly& a, Elem s);
// Leading coefficient scaled to 1.
HomogPoly normalized(const HomogPoly& a);
HomogPoly map_field(const HomogPoly& a, const FieldPtr& target, const std::vector<Elem>& table);

// Gcd of binary forms, normalized so the leading coefficient is 1.  Constant
// iff the forms have no common zero on the projective line over the closure.
HomogPoly binary_form_gcd(const std::vector<HomogPoly>& fs);

// Univariate polynomials over a field, coefficients low to high, no trailing zeros.
using UPoly = std::vector<Elem>;
UPoly upoly_gcd(const Field& f, UPoly a, UPoly b);
UPoly upoly_mod(const Field& f, UPoly a, const UPoly& b);

}  // namespace qcjt
