#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qcjt/error.hpp"

namespace qcjt {

// Field elements are canonical codes: the element sum_i a_i z^i of GF(p^e)
// is stored as sum_i a_i p^i.  Code order is the canonical element order.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Exact arithmetic in GF(p^e).  Instances are immutable and shared; get()
// caches one instance per (p, e).
class Field {
 public:
  static FieldPtr get(std::uint32_t p, unsigned e = 1);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t order() const { return order_; }
  // Monic defining polynomial, coefficients low to high (size e + 1).
  // Empty for prime fields.
  const std::vector<std::uint32_t>& min_poly() const { return min_poly_; }
  bool is_prime_field() const { return e_ == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    switch (mode_) {
      case Mode::Prime: {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
      }
      case Mode::Table:
        return add_tab_[a * order_ + b];
      case Mode::Zech:
        break;
    }
    return zech_add(a, b);
  }

  Elem neg(Elem a) const {
    if (mode_ == Mode::Prime) return a == 0 ? 0 : p_ - a;
    return neg_[a];
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    switch (mode_) {
      case Mode::Prime:
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
      case Mode::Table:
        return mul_tab_[a * order_ + b];
      case Mode::Zech:
        break;
    }
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  // a + b * c
  Elem fma(Elem a, Elem b, Elem c) const { return add(a, mul(b, c)); }

  // dst[k] += f * src[k]
  void axpy(Elem* dst, const Elem* src, Elem f, std::size_t len) const;
  void scale(Elem* dst, Elem f, std::size_t len) const;

  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  // Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elem a) const;

  std::string to_string(Elem a) const;

 private:
  enum class Mode { Prime, Table, Zech };

  Field(std::uint32_t p, unsigned e);
  Elem zech_add(Elem a, Elem b) const;
  Elem poly_mul(Elem a, Elem b) const;

  Mode mode_ = Mode::Prime;
  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> min_poly_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<std::uint16_t> add_tab_;
  std::vector<std::uint16_t> mul_tab_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;        // doubled so that log a + log b needs no reduction
  std::vector<std::uint32_t> zech_;
};

bool is_prime(std::uint64_t v);

// Monic irreducible polynomial of degree e over GF(p): the first one in
// lexicographic order of (a_{e-1}, ..., a_0).
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned e);
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

// Code table of the embedding GF(p^e) -> GF(p^E) (e | E), sending z to the
// smallest root of the small field's defining polynomial.
std::vector<Elem> embedding(const Field& small, const Field& big);

// Smallest extension of `base` (degree a multiple of base's degree) with at
// least `min_order` elements.
FieldPtr extension_with_order(const Field& base, std::uint64_t min_order);

// The base field plus its chosen root of unity.  n_prime = n / gcd(n, p);
// q is the smallest element of multiplicative order exactly n_prime.
struct FieldCtx {
  FieldPtr field;
  unsigned n = 0;
  unsigned n_prime = 0;
  Elem q = 0;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.field == b.field && a.n == b.n && a.n_prime == b.n_prime &&
           a.q == b.q;
  }
};

FieldCtx make_field(std::uint32_t p, unsigned e, unsigned n);

}  // namespace qcjt
