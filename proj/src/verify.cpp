#include "qcjt/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "qcjt/corpus.hpp"
#include "qcjt/error.hpp"
#include "qcjt/homology.hpp"

namespace qcjt {

namespace {

using Finding = std::optional<Json>;

Json witness(const std::string& what, const ModuleRep& m) {
  return Json{{"what", what}, {"module", module_json(m)}};
}

Json witness(const std::string& what, const ModuleRep& m, const std::vector<Elem>& lambda) {
  Json j = witness(what, m);
  Json lam = Json::array();
  for (Elem a : lambda) lam.push_back(elem_json(*m.field(), a));
  j["lambda"] = lam;
  return j;
}

JordanType golden_quotient3(unsigned n, unsigned c) {
  JordanType t{n, std::vector<unsigned>(n, 0)};
  if (n >= 3) {
    t.mults[0] = c * (c - 1) / 2;
    t.mults[1] = c - 1;
    t.mults[2] += 1;
  } else {
    t.mults[0] = (c * c - 3 * c + 2) / 2;
    t.mults[1] = c;
  }
  return t;
}

std::size_t ipow(std::size_t b, unsigned k) {
  std::size_t r = 1;
  while (k--) r *= b;
  return r;
}

JordanType reversed_stable(const JordanType& t) {
  JordanType r{t.n, std::vector<unsigned>(t.n, 0)};
  for (unsigned i = 1; i < t.n; ++i) r.mults[i - 1] = t.mults[t.n - 1 - i];
  return r;
}

std::vector<JordanType> sorted_types(const ModuleRep& m, unsigned e) {
  std::vector<JordanType> out;
  for (auto& s : scan_types(m, e)) out.push_back(s.type);
  std::sort(out.begin(), out.end());
  return out;
}

bool single_block(const JordanType& t, unsigned a) { return t.blocks() == 1 && t.mults[a - 1] == 1; }

class Runner {
 public:
  Runner(std::string config, std::vector<CheckOutcome>& out) : config_(std::move(config)), out_(out) {}

  void run(const std::string& statement, const std::function<Finding()>& body, std::string note = {}) {
    CheckOutcome c{config_, statement, true, false, std::move(note), nullptr};
    try {
      if (Finding f = body()) {
        c.passed = false;
        c.counterexample = std::move(*f);
      }
    } catch (const Error& e) {
      c.passed = false;
      c.counterexample = Json{{"error", to_string(e.kind())}, {"message", e.what()}};
    }
    out_.push_back(std::move(c));
  }

  void skip(const std::string& statement, std::string note) {
    out_.push_back({config_, statement, true, true, std::move(note), nullptr});
  }

 private:
  std::string config_;
  std::vector<CheckOutcome>& out_;
};

void mutant_config(const GridPoint& gp, const VerifyOptions& opts, Runner& run) {
  AlgebraParams alg = make_algebra(gp.p, gp.e, gp.n, gp.c);
  AlgebraParams mut = alg;
  // q = 1 is never primitive once n' > 1; otherwise use a generator of the unit group
  mut.ctx.q = alg.ctx.n_prime > 1 ? 1 : (alg.field()->order() > 2 ? 2 : 1);
  CorpusSpec cs = standard_corpus_spec(gp.p, gp.e, gp.n, gp.c, opts.seed);
  run.run("module relations", [&]() -> Finding {
    Json bad = Json::array();
    for (const auto& spec : cs.modules) {
      if (spec.kind == "sample" || spec.kind == "syzygy") continue;
      ModuleRep m(alg, build_module(mut, spec).mats());
      if (!validate_module(m)) bad.push_back(witness(describe(spec) + " violates the relations", m));
    }
    if (bad.empty()) return std::nullopt;
    return bad;
  }, "mutant q = " + alg.field()->to_string(mut.ctx.q));
}

void run_config(const GridPoint& gp, const VerifyOptions& opts, std::vector<CheckOutcome>& out) {
  Runner run(gp.label(), out);
  if (opts.mutant) {
    mutant_config(gp, opts, run);
    return;
  }
  const unsigned n = gp.n, c = gp.c, e = gp.e;
  AlgebraParams alg = make_algebra(gp.p, e, n, c);
  const Field& f = *alg.field();
  auto corpus = build_corpus(standard_corpus_spec(gp.p, e, n, c, opts.seed));
  std::mt19937_64 rng(opts.seed ^ (gp.p * 1000003ull + e * 101 + n * 7 + c));
  auto unit = [&] { return Elem(1 + rng() % (f.order() - 1)); };
  ModuleRep k = ModuleRep::zero(alg, 1);

  run.run("module relations", [&]() -> Finding {
    for (auto& ce : corpus)
      if (!validate_module(ce.module)) return witness(ce.name, ce.module);
    return std::nullopt;
  });

  run.run("golden types", [&]() -> Finding {
    JordanType tk = jordan_from_blocks(n, {1});
    JordanType tA{n, std::vector<unsigned>(n, 0)};
    tA.mults[n - 1] = unsigned(ipow(n, c - 1));
    ModuleRep A = regular_representation(alg), r3 = radical_quotient_module(alg, 0, 3);
    for (auto [m, t] : {std::pair{&k, tk}, {&A, tA}, {&r3, golden_quotient3(n, c)}})
      for (auto& s : scan_types(*m, e))
        if (s.type != t) return witness("expected " + t.to_string() + ", got " + s.type.to_string(), *m, s.lambda);
    return std::nullopt;
  });

  run.run("Prop elementary", [&]() -> Finding {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const ModuleRep& m = corpus[j].module;
      auto sm = scan_types(m, e);
      auto sd = scan_types(dual_module(m), e);
      for (std::size_t t = 0; t < sm.size(); ++t) {
        if (sm[t].type.dim() != m.dim()) return witness(corpus[j].name + ": sum of i*d_i differs from dim", m, sm[t].lambda);
        if (sd[t].type != sm[t].type) return witness(corpus[j].name + ": dual type differs", m, sm[t].lambda);
      }
      const ModuleRep& other = corpus[(j + 1) % corpus.size()].module;
      auto so = scan_types(other, e);
      auto ss = scan_types(direct_sum(m, other), e);
      for (std::size_t t = 0; t < sm.size(); ++t)
        if (ss[t].type != type_sum(sm[t].type, so[t].type))
          return witness(corpus[j].name + ": direct sum not additive", m, sm[t].lambda);
    }
    return std::nullopt;
  });

  std::vector<const CorpusEntry*> small;
  for (auto& ce : corpus)
    if (ce.module.dim() <= 12) small.push_back(&ce);

  run.run("Cor directsum", [&]() -> Finding {
    for (int t = 0; t < 50; ++t) {
      const auto& a = *small[rng() % small.size()];
      const auto& b = *small[rng() % small.size()];
      ModuleRep s = direct_sum(a.module, b.module);
      Matrix P(alg.field(), s.dim(), s.dim());
      do {
        for (std::size_t r = 0; r < s.dim(); ++r)
          for (std::size_t q = 0; q < s.dim(); ++q) P(r, q) = rng() % f.order();
      } while (rank(P) < s.dim());
      s = conjugate(s, P);
      if (!check_constant(s, {CjtMethod::Exhaustive, e}).constant) continue;
      for (auto* part : {&a, &b})
        if (!check_constant(part->module, {CjtMethod::Exhaustive, e}).constant)
          return witness("summand of a constant sum is not constant: " + part->name, part->module);
    }
    return std::nullopt;
  });

  run.run("Prop nottype", [&]() -> Finding {
    std::vector<ModuleRep> cands;
    for (auto& ce : corpus)
      if (ce.module.dim() >= 2 && ce.module.dim() <= n) cands.push_back(ce.module);
    if (c == 2)
      for (std::uint64_t s = 0; s < 40; ++s) cands.push_back(sample_module_point(alg, 2 + s % (n - 1), opts.seed + s));
    for (auto& m : cands) {
      unsigned a = unsigned(m.dim());
      bool seen = false;
      for (auto& s : scan_types(m, e)) seen |= single_block(s.type, a);
      if (!seen) continue;
      auto v = check_constant(m, {CjtMethod::Exhaustive, e});
      if (v.constant || !v.witness || v.witness->first.type == v.witness->second.type)
        return witness("single-block candidate without a differing witness", m);
    }
    return std::nullopt;
  });

  struct Constant {
    const CorpusEntry* entry;
    ModuleRep core;
    JordanType type;
  };
  std::vector<Constant> constants;
  for (auto& ce : corpus) {
    ModuleRep core = split_free(ce.module).core;
    if (core.dim() == 0 || core.dim() > 30) continue;
    auto v = check_constant(core, {CjtMethod::Exhaustive, e});
    if (v.constant) constants.push_back({&ce, core, *v.type});
  }

  run.run("Thm complexitysyzygies (2)", [&]() -> Finding {
    for (auto& cm : constants) {
      std::size_t r = projective_cover(cm.core).beta0;
      JordanType pred = reversed_stable(cm.type);
      long d = long(r * ipow(n, c - 1));
      for (unsigned i = 0; i < n; ++i) d -= cm.type.mults[i];
      pred.mults[n - 1] = unsigned(d);
      auto v = check_constant(syzygy(cm.core, 1), {CjtMethod::Exhaustive, e});
      if (!v.constant || *v.type != pred)
        return witness(cm.entry->name + ": Omega^1 type differs from " + pred.to_string(), cm.core);
    }
    return std::nullopt;
  });

  run.run("Cor syzygies", [&]() -> Finding {
    for (auto& cm : constants) {
      if (cm.core.dim() > 12) continue;
      for (int i = -2; i <= 2; ++i) {
        auto v = check_constant(syzygy(cm.core, i), {CjtMethod::Exhaustive, e});
        JordanType want = i % 2 == 0 ? cm.type.stable() : reversed_stable(cm.type);
        if (!v.constant || v.type->stable() != want)
          return witness(cm.entry->name + ": stable type of Omega^" + std::to_string(i) + " is not " + want.to_string(), cm.core);
      }
    }
    return std::nullopt;
  });

  run.run("Thm complexitysyzygies (1)", [&]() -> Finding {
    for (auto& cm : constants) {
      if (cm.entry->module.dim() > (c == 2 ? 30u : 12u)) continue;
      auto b = betti_sequence(cm.entry->module, 7);
      unsigned want = split_free(cm.entry->module).core.dim() == 0 ? 0 : c;
      if (complexity_estimate(b) != want) {
        Json w = witness(cm.entry->name + ": complexity estimate is not " + std::to_string(want), cm.entry->module);
        w["betti"] = b;
        return w;
      }
    }
    auto bA = betti_sequence(regular_representation(alg), 7);
    if (complexity_estimate(bA) != 0) return Json{{"what", "free module complexity is not 0"}, {"betti", bA}};
    return std::nullopt;
  });

  if (c == 2) {
    run.run("Prop cr / Thm generic", [&]() -> Finding {
      for (auto* ce : small) {
        const ModuleRep& m = ce->module;
        bool sym = check_constant(m, {CjtMethod::Symbolic, 1, opts.seed}).constant;
        for (unsigned mult = 1; mult <= 3; ++mult) {
          if (projective_point_count(ipow(gp.p, e * mult), c) > kMaxScanPoints) continue;
          if (check_constant(m, {CjtMethod::Exhaustive, e * mult}).constant != sym)
            return witness(ce->name + ": symbolic and exhaustive verdicts differ over degree " + std::to_string(e * mult), m);
        }
        if (m.dim() <= 8)
          for (std::size_t g = 0; g <= std::min<std::size_t>(m.dim(), 3); ++g)
            if (minor_polys(m, 1, g).size() != binomial(m.dim(), g) * binomial(m.dim(), g))
              return witness(ce->name + ": minor count differs from binom(d,g)^2", m);
        for (std::size_t g = 1; g <= m.dim(); ++g)
          if (binomial(m.dim(), g) * binomial(m.dim(), g) < c && constant_rank_check(m, g))
            return witness(ce->name + ": constant rank despite the binomial obstruction", m);
      }
      return std::nullopt;
    });
  } else {
    run.skip("Prop cr / Thm generic", "binary-form certificate needs c = 2");
  }

  std::vector<AutomorphismSpec> autos;
  for (int t = 0; t < 3; ++t) {
    std::vector<Elem> a;
    for (unsigned i = 0; i < c; ++i) a.push_back(unit());
    autos.push_back(diagonal_automorphism(alg, a));
  }
  Elem minus_one = f.neg(1);
  if (c == 2 && alg.q() == minus_one) {
    Matrix E(alg.field(), 2, 2);
    E(0, 0) = 1;
    E(0, 1) = 1;
    E(1, 0) = 1;
    E(1, 1) = minus_one;
    autos.push_back({E});
  }

  run.run("Lemma homogeneoustwist", [&]() -> Finding {
    for (auto& E : autos) {
      if (!validate_automorphism(alg, E)) return Json{{"what", "expected automorphism rejected"}};
      for (auto* ce : small) {
        ModuleRep tw = twist(ce->module, E);
        if (sorted_types(tw, e) != sorted_types(ce->module, e))
          return witness(ce->name + ": twist changes the multiset of types", ce->module);
        for (auto& s : scan_types(tw, e)) {
          std::vector<Elem> moved(c, 0);
          for (unsigned i = 0; i < c; ++i)
            for (unsigned j = 0; j < c; ++j) moved[i] = f.add(moved[i], f.mul(E.E(i, j), s.lambda[j]));
          if (jordan_type_at(ce->module, moved) != s.type)
            return witness(ce->name + ": twisted type is not the type at E lambda", ce->module, s.lambda);
        }
      }
    }
    return std::nullopt;
  });

  if (alg.q() != 1 && alg.q() != minus_one) {
    run.run("Remark automorphisms", [&]() -> Finding {
      for (int t = 0; t < 500; ++t) {
        Matrix E(alg.field(), c, c);
        bool diagonal = true;
        do {
          diagonal = true;
          for (unsigned i = 0; i < c; ++i)
            for (unsigned j = 0; j < c; ++j) {
              E(i, j) = rng() % f.order();
              if (i != j && E(i, j)) diagonal = false;
            }
        } while (diagonal);
        if (validate_automorphism(alg, {E})) return Json{{"what", "non-diagonal automorphism accepted"}};
      }
      return std::nullopt;
    });
  } else {
    run.skip("Remark automorphisms", "q = +-1 admits non-diagonal automorphisms");
  }

  run.run("Nakayama automorphism", [&]() -> Finding {
    auto nu = nakayama_automorphism(alg);
    const auto& t = monomial_table(c, n);
    for (std::size_t a = 0; a < t.monos.size(); ++a) {
      unsigned s = 0;
      for (unsigned i = 0; i < c; ++i) s += t.monos[a][i] * nu.exponents[i];
      Elem scale = f.pow(alg.q(), s);
      for (std::size_t b = 0; b < t.monos.size(); ++b) {
        auto ab = monomial_product(alg, a, b), ba = monomial_product(alg, b, a);
        Elem lhs = ab.first == long(t.socle) ? ab.second : 0;
        Elem rhs = ba.first == long(t.socle) ? f.mul(scale, ba.second) : 0;
        if (lhs != rhs) return Json{{"what", "Frobenius identity fails"}, {"a", a}, {"b", b}};
      }
    }
    return std::nullopt;
  });

  run.run("Thm ARtranslate", [&]() -> Finding {
    auto nu = nakayama_automorphism(alg);
    for (auto* ce : small) {
      const ModuleRep& m = ce->module;
      if (split_free(m).free_rank > 0 || m.dim() > 10) continue;
      ModuleRep tau = ar_translate(m);
      for (auto& s : scan_types(tau, e)) {
        std::vector<Elem> moved(c);
        for (unsigned i = 0; i < c; ++i) moved[i] = f.mul(nu.spec.E(i, i), s.lambda[i]);
        if (jordan_type_at(m, moved).stable() != s.type.stable())
          return witness(ce->name + ": stable type of tau M differs at the Nakayama-moved point", m, s.lambda);
      }
    }
    return std::nullopt;
  });

  if (n == 2 && c == 2) run.skip("Thm ARcomponents", "out of scope (Thm ARcomponents)");

  run.run("Omega inverse", [&]() -> Finding {
    for (auto& ce : corpus) {
      ModuleRep core = split_free(ce.module).core;
      if (core.dim() == 0 || core.dim() > 30) continue;
      for (int sgn : {1, -1}) {
        ModuleRep back = syzygy(syzygy(core, sgn), -sgn);
        if (back.dim() != core.dim() || !find_isomorphism(back, core, opts.seed).found)
          return witness(ce.name + ": no isomorphism certificate for Omega^" + std::to_string(-sgn) + " Omega^" + std::to_string(sgn), core);
      }
    }
    return std::nullopt;
  });

  if (c != 2) {
    run.skip("Section 4 rank properties", "two generators only");
    return;
  }

  std::vector<std::pair<int, ModuleRep>> chain;
  for (int i = -3; i <= 6; ++i) chain.push_back({i, syzygy(k, i)});
  unsigned ext = e == 1 ? 2 : 1;

  run.run("Thm syzygiesofk (1)=>(2)", [&]() -> Finding {
    for (auto& [i, m] : chain) {
      auto h = certify_hypotheses(m, ext, opts.seed);
      if (!h.ok()) return witness("Omega^" + std::to_string(i) + "(k): " + h.failure, m);
      JordanType want = jordan_from_blocks(n, {i % 2 == 0 ? 1u : n - 1});
      if (*h.stable_type != want) return witness("Omega^" + std::to_string(i) + "(k): stable type is not " + want.to_string(), m);
      for (auto& E : autos)
        if (!find_isomorphism(twist(m, E), m, opts.seed).found)
          return witness("Omega^" + std::to_string(i) + "(k): twist is not isomorphic", m);
    }
    return std::nullopt;
  });

  run.run("Prop ranks", [&]() -> Finding {
    for (auto& [i, m] : chain)
      for (const ModuleRep& x : {m, twist(m, autos[0])})
        if (!prop_ranks_equivalence(x).agree()) return witness("Omega^" + std::to_string(i) + "(k): sides disagree", x);
    return std::nullopt;
  });

  run.run("Prop RPimpliesWRP", [&]() -> Finding {
    for (auto& [i, m] : chain) {
      auto r = check_rp(m);
      if ((r.rpx || r.rpy) && r.beta0 <= r.beta_minus1) return witness("Omega^" + std::to_string(i) + "(k): RP without beta growth", m);
    }
    return std::nullopt;
  });

  run.run("Prop WRPimpliesRP", [&]() -> Finding {
    for (auto& [i, m] : chain) {
      auto h = certify_hypotheses(m, ext, opts.seed);
      if (!h.ok() || *h.stable_type != jordan_from_blocks(n, {n - 1})) continue;
      auto r = check_rp(m);
      if (r.beta0 > r.beta_minus1 && !r.rp()) return witness("Omega^" + std::to_string(i) + "(k): beta growth without RP", m);
    }
    return std::nullopt;
  });

  run.run("Prop reduce[n-1] / reduce[1]", [&]() -> Finding {
    for (auto& [i, m] : chain) {
      if (i < 1) continue;
      ModuleRep cur = m;
      int steps = 0;
      while (cur.dim() != 1) {
        auto st = rp_descent_step(cur, certify_hypotheses(cur, ext, opts.seed));
        if (st.verdict == DescentVerdict::Violation) return witness("descent violation", cur);
        cur = st.cosyzygy;
        if (++steps > i) break;
      }
      if (steps != i) return witness("Omega^" + std::to_string(i) + "(k): descent took " + std::to_string(steps) + " steps", m);
    }
    return std::nullopt;
  });

  if (n >= 3) {
    run.run("Thm syzygiesofk (3)=>(1)", [&]() -> Finding {
      ClassifyOptions co{ext, 0, opts.seed};
      for (auto& [i, m] : chain) {
        if (i < 0) continue;
        auto cl = classify_syzygy_of_k(m, co);
        if (!cl.certified || cl.index != i) return witness("Omega^" + std::to_string(i) + "(k) classified as " + cl.to_string(), m);
      }
      ModuleRep r3 = radical_quotient_module(alg, 0, 3);
      if (classify_syzygy_of_k(r3, co).certified) return witness("A/r^3 certified", r3);
      for (auto& ce : corpus)
        if (!check_constant(ce.module, {CjtMethod::Exhaustive, e}).constant && classify_syzygy_of_k(ce.module, co).certified)
          return witness(ce.name + ": non-constant module certified", ce.module);
      return std::nullopt;
    });
  } else {
    run.skip("Thm syzygiesofk (3)=>(1)", "n = 2: only (1)=>(2) is verified; the converse rests on Thm ARcomponents (out of scope)");
  }
}

}  // namespace

std::string GridPoint::label() const {
  return "p=" + std::to_string(p) + " e=" + std::to_string(e) + " n=" + std::to_string(n) + " c=" + std::to_string(c);
}

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> g;
  for (unsigned e = 1; e <= 3; ++e) g.push_back({3, e, 2, 2});
  for (unsigned e = 1; e <= 3; ++e) g.push_back({7, e, 3, 2});
  for (unsigned e = 1; e <= 2; ++e) g.push_back({5, e, 2, 3});
  return g;
}

std::vector<CheckOutcome> run_property_suite(const VerifyOptions& opts) {
  std::vector<CheckOutcome> out;
  for (const auto& gp : opts.grid.empty() ? default_grid() : opts.grid) {
    try {
      run_config(gp, opts, out);
    } catch (const Error& e) {
      out.push_back({gp.label(), "configuration", false, false, "", Json{{"error", to_string(e.kind())}, {"message", e.what()}}});
    }
  }
  return out;
}

}  // namespace qcjt
