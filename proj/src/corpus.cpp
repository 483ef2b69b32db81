#include "qcjt/corpus.hpp"

#include <random>

#include "qcjt/error.hpp"
#include "qcjt/homology.hpp"

namespace qcjt {

namespace {

ModuleSpec of_kind(std::string kind) {
  ModuleSpec m;
  m.kind = std::move(kind);
  return m;
}

}  // namespace

ModuleRep build_module(const AlgebraParams& alg, const ModuleSpec& spec) {
  const std::string& k = spec.kind;
  if (k == "k") return ModuleRep::zero(alg, 1);
  if (k == "free") return regular_representation(alg);
  if (k == "radical-quotient") return radical_quotient_module(alg, spec.s, spec.t);
  if (k == "sample") return sample_module_point(alg, spec.d, spec.seed);
  if (k == "syzygy" || k == "twist") {
    require(spec.parts.size() == 1, ErrorKind::BadInput, k + " needs one base module");
    ModuleRep base = build_module(alg, spec.parts[0]);
    if (k == "syzygy") return syzygy(split_free(base).core, spec.i);
    return twist(base, diagonal_automorphism(alg, spec.diag));
  }
  if (k == "sum") {
    std::vector<ModuleRep> parts;
    for (const auto& p : spec.parts) parts.push_back(build_module(alg, p));
    require(!parts.empty(), ErrorKind::BadInput, "sum needs at least one part");
    return direct_sum(parts);
  }
  fail(ErrorKind::BadInput, "unknown module kind '" + k + "'");
}

std::string describe(const ModuleSpec& spec) {
  const std::string& k = spec.kind;
  if (k == "radical-quotient") return "r^" + std::to_string(spec.s) + "/r^" + std::to_string(spec.t);
  if (k == "sample") return "sample(d=" + std::to_string(spec.d) + ",seed=" + std::to_string(spec.seed) + ")";
  if (k == "syzygy") return "Omega^" + std::to_string(spec.i) + "(" + describe(spec.parts.at(0)) + ")";
  if (k == "twist") {
    std::string s = "twist(" + describe(spec.parts.at(0)) + ";";
    for (std::size_t j = 0; j < spec.diag.size(); ++j) s += (j ? "," : "") + std::to_string(spec.diag[j]);
    return s + ")";
  }
  if (k == "sum") {
    std::string s;
    for (std::size_t j = 0; j < spec.parts.size(); ++j) s += (j ? " + " : "") + describe(spec.parts[j]);
    return "(" + s + ")";
  }
  return k;
}

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
  AlgebraParams alg = make_algebra(spec.p, spec.e, spec.n, spec.c);
  std::vector<CorpusEntry> out;
  for (const auto& m : spec.modules) {
    ModuleRep mod = build_module(alg, m);
    require(validate_module(mod), ErrorKind::InvalidModule, describe(m) + " fails validation");
    out.push_back({describe(m), std::move(mod)});
  }
  return out;
}

CorpusSpec standard_corpus_spec(std::uint32_t p, unsigned e, unsigned n, unsigned c, std::uint64_t seed) {
  CorpusSpec cs{p, e, n, c, {}};
  AlgebraParams alg = make_algebra(p, e, n, c);
  auto& ms = cs.modules;
  ModuleSpec k = of_kind("k"), free = of_kind("free");
  auto rq = [](unsigned s, unsigned t) {
    ModuleSpec m = of_kind("radical-quotient");
    m.s = s;
    m.t = t;
    return m;
  };
  auto syz = [](ModuleSpec base, int i) {
    ModuleSpec m = of_kind("syzygy");
    m.i = i;
    m.parts = {std::move(base)};
    return m;
  };
  auto sum = [](std::vector<ModuleSpec> parts) {
    ModuleSpec m = of_kind("sum");
    m.parts = std::move(parts);
    return m;
  };
  ms.push_back(k);
  ms.push_back(free);
  unsigned top = (n - 1) * c + 1;
  const auto& table = monomial_table(c, n);
  for (unsigned s = 0; s < top; ++s)
    for (unsigned t = s + 1; t <= top; ++t) {
      if (s == 0 && t == top) continue;
      std::size_t d = 0;
      for (unsigned deg : table.degree) d += (deg >= s && deg < t);
      if (d <= 24) ms.push_back(rq(s, t));
    }
  std::vector<int> idx = c == 2 ? std::vector<int>{-2, -1, 1, 2, 3} : std::vector<int>{-1, 1, 2};
  for (int i : idx) ms.push_back(syz(k, i));
  ms.push_back(syz(rq(0, 2), 1));
  ms.push_back(sum({k, k}));
  ms.push_back(sum({k, free}));
  ms.push_back(sum({rq(0, 2), rq(1, 2)}));

  std::mt19937_64 rng(seed);
  const Field& f = *alg.field();
  auto unit = [&] { return Elem(1 + rng() % (f.order() - 1)); };
  for (ModuleSpec base : {rq(0, 2), syz(k, 2)}) {
    ModuleSpec tw = of_kind("twist");
    tw.parts = {base};
    for (unsigned j = 0; j < c; ++j) tw.diag.push_back(unit());
    ms.push_back(tw);
  }
  if (c == 2) {
    for (std::size_t d = 2; d <= 8; ++d) {
      ModuleSpec s = of_kind("sample");
      s.d = d;
      // first seed in the sequence whose sample is accepted
      for (std::uint64_t r = 0; r < 64; ++r) {
        s.seed = seed * 1000 + d + 100 * r;
        try {
          sample_module_point(alg, d, s.seed);
          ms.push_back(s);
          break;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::SamplingExhausted) throw;
        }
      }
    }
  }
  return cs;
}

}  // namespace qcjt
