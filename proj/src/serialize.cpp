#include "qcjt/serialize.hpp"

#include "qcjt/error.hpp"

namespace qcjt {

namespace {

unsigned get_uint(const Json& j, const char* key) {
  require(j.contains(key) && j[key].is_number_unsigned(), ErrorKind::BadInput,
          std::string("missing or invalid field '") + key + "'");
  return j[key].get<unsigned>();
}

Json field_json(const Field& f) { return Json{{"p", f.characteristic()}, {"e", f.degree()}}; }

}  // namespace

Json elem_json(const Field& f, Elem a) {
  if (f.degree() == 1) return a;
  return f.digits(a);
}

Elem elem_from_json(const Field& f, const Json& j) {
  if (f.degree() == 1) {
    require(j.is_number_unsigned() && j.get<std::uint64_t>() < f.order(), ErrorKind::BadInput,
            "field entry out of range: " + j.dump());
    return j.get<Elem>();
  }
  require(j.is_array() && j.size() == f.degree(), ErrorKind::BadInput, "extension entry needs " +
          std::to_string(f.degree()) + " residues: " + j.dump());
  std::vector<std::uint32_t> digits;
  for (const auto& x : j) {
    require(x.is_number_unsigned() && x.get<std::uint64_t>() < f.characteristic(), ErrorKind::BadInput,
            "residue out of range: " + j.dump());
    digits.push_back(x.get<std::uint32_t>());
  }
  return f.from_digits(digits);
}

Json module_json(const ModuleRep& m) {
  const Field& f = *m.field();
  Json j;
  j["p"] = f.characteristic();
  j["e"] = f.degree();
  j["n"] = m.alg().n();
  j["c"] = m.c();
  j["q"] = elem_json(f, m.alg().q());
  j["d"] = m.dim();
  Json mats = Json::array();
  for (const Matrix& X : m.mats()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < X.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < X.cols(); ++c) row.push_back(elem_json(f, X(r, c)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  j["matrices"] = std::move(mats);
  return j;
}

ModuleRep module_from_json(const Json& j) {
  require(j.is_object(), ErrorKind::BadInput, "module JSON must be an object");
  unsigned p = get_uint(j, "p"), e = get_uint(j, "e"), n = get_uint(j, "n"), c = get_uint(j, "c");
  std::size_t d = get_uint(j, "d");
  require(c >= 1 && c <= 8, ErrorKind::BadInput, "c must lie in [1, 8]");
  require(n >= 2, ErrorKind::BadInput, "n must be at least 2");
  FieldCtx ctx = make_field(p, e, n);
  require(j.contains("q"), ErrorKind::BadInput, "missing field 'q'");
  Elem q = elem_from_json(*ctx.field, j["q"]);
  // any primitive n'-th root is accepted; duals carry q^{-1}
  require(q != 0 && ctx.field->multiplicative_order(q) == ctx.n_prime, ErrorKind::BadInput,
          "q is not a primitive n'-th root of unity");
  ctx.q = q;
  AlgebraParams alg = make_algebra(ctx, c);
  require(j.contains("matrices") && j["matrices"].is_array() && j["matrices"].size() == c, ErrorKind::BadInput,
          "expected " + std::to_string(c) + " matrices");
  std::vector<Matrix> mats;
  for (const auto& jm : j["matrices"]) {
    require(jm.is_array() && jm.size() == d, ErrorKind::BadInput, "matrix must have d rows");
    Matrix X(ctx.field, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      require(jm[r].is_array() && jm[r].size() == d, ErrorKind::BadInput, "matrix rows must have d entries");
      for (std::size_t col = 0; col < d; ++col) X(r, col) = elem_from_json(*ctx.field, jm[r][col]);
    }
    mats.push_back(std::move(X));
  }
  ModuleRep m(alg, std::move(mats));
  require(validate_module(m), ErrorKind::InvalidModule, "matrices violate x_i^n = 0 or x_i x_j = q x_j x_i");
  return m;
}

std::string dump_module(const ModuleRep& m) { return module_json(m).dump() + "\n"; }

ModuleRep parse_module(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::BadInput, std::string("malformed JSON: ") + e.what());
  }
  return module_from_json(j);
}

Json type_json(const JordanType& t) {
  return Json{{"n", t.n}, {"mults", t.mults}, {"notation", t.to_string()}};
}

Json verdict_json(const CjtVerdict& v) {
  Json j;
  j["method"] = to_string(v.method);
  j["constant"] = v.constant;
  if (v.type) j["type"] = type_json(*v.type);
  if (v.witness) {
    Json w = Json::array();
    for (const TypedPoint* pt : {&v.witness->first, &v.witness->second}) {
      Json lam = Json::array();
      for (Elem a : pt->lambda) lam.push_back(elem_json(*pt->field, a));
      w.push_back(Json{{"field", field_json(*pt->field)}, {"lambda", lam}, {"type", type_json(pt->type)}});
    }
    j["witness"] = std::move(w);
  }
  j["certified_over"] = v.certified_over;
  return j;
}

Json poly_json(const HomogPoly& f) {
  Json terms = Json::array();
  for (const auto& [key, coef] : f.terms()) terms.push_back(Json::array({f.unpack(key), elem_json(*f.field(), coef)}));
  return terms;
}

Json rp_json(const RpReport& r, const Field& f) {
  auto vec = [&](const std::vector<Elem>& v) {
    Json a = Json::array();
    for (Elem x : v) a.push_back(elem_json(f, x));
    return a;
  };
  Json j;
  j["stable_type"] = type_json(r.stable_type);
  j["generator_x"] = vec(r.generator_x);
  j["generator_y"] = vec(r.generator_y);
  j["rpx"] = r.rpx;
  j["rpy"] = r.rpy;
  j["beta0"] = r.beta0;
  j["beta_minus1"] = r.beta_minus1;
  return j;
}

Json classification_json(const Classification& c) {
  Json j;
  j["verdict"] = c.to_string();
  if (c.certified) j["index"] = c.index;
  if (!c.reason.empty()) j["reason"] = c.reason;
  Json trace = Json::array();
  for (const auto& t : c.trace)
    trace.push_back(Json{{"dim", t.dim}, {"stable_type", t.stable_type}, {"beta0", t.beta0},
                         {"beta_minus1", t.beta_minus1}, {"branch", t.branch}});
  j["trace"] = std::move(trace);
  return j;
}

}  // namespace qcjt
