#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qcjt/corpus.hpp"
#include "qcjt/homology.hpp"
#include "qcjt/jordan.hpp"
#include "qcjt/rank_property.hpp"
#include "qcjt/serialize.hpp"
#include "qcjt/verify.hpp"

using namespace qcjt;

namespace {

ModuleRep load(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    require(bool(in), ErrorKind::BadInput, "cannot open " + path);
    ss << in.rdbuf();
  }
  return parse_module(ss.str());
}

std::vector<Elem> parse_codes(const Field& f, const std::string& text, unsigned c) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  bool nonzero = false;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    require(pos == item.size() && !item.empty() && v < f.order(), ErrorKind::BadInput, "bad lambda entry '" + item + "'");
    out.push_back(Elem(v));
    nonzero |= v != 0;
  }
  require(out.size() == c, ErrorKind::BadInput, "lambda needs " + std::to_string(c) + " entries");
  require(nonzero, ErrorKind::BadInput, "lambda must be nonzero");
  return out;
}

CjtMethod parse_method(const std::string& s) {
  if (s == "exhaustive") return CjtMethod::Exhaustive;
  if (s == "extension") return CjtMethod::Extension;
  if (s == "symbolic") return CjtMethod::Symbolic;
  fail(ErrorKind::BadInput, "unknown method " + s);
}

GridPoint parse_grid_point(const std::string& s) {
  GridPoint g;
  char sep[3];
  std::istringstream in(s);
  require(bool(in >> g.p >> sep[0] >> g.e >> sep[1] >> g.n >> sep[2] >> g.c) && in.eof() &&
              sep[0] == ',' && sep[1] == ',' && sep[2] == ',',
          ErrorKind::BadInput, "grid entries are p,e,n,c");
  return g;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan types and syzygies over quantum complete intersections"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized procedures");
  std::string file = "-";

  std::uint32_t p = 7;
  unsigned e = 1, n = 3, c = 2, s = 0, t = 0;
  int idx = 1;
  std::size_t d = 2;
  std::string kind = "k";
  auto* cmd_new = app.add_subcommand("new", "build a module");
  cmd_new->add_option("--p", p);
  cmd_new->add_option("--e", e);
  cmd_new->add_option("--n", n);
  cmd_new->add_option("--c", c);
  cmd_new->add_option("--kind", kind)->check(CLI::IsMember({"k", "free", "radical-quotient", "syzygy", "sample"}));
  cmd_new->add_option("--s", s);
  cmd_new->add_option("--t", t);
  cmd_new->add_option("--i", idx, "syzygy index, applied to k");
  cmd_new->add_option("--d", d, "sample dimension");

  std::string lambda;
  auto* cmd_jtype = app.add_subcommand("jtype", "Jordan type at a point");
  cmd_jtype->add_option("module", file);
  cmd_jtype->add_option("--lambda", lambda, "comma separated field codes")->required();

  unsigned scan_e = 0;
  auto* cmd_scan = app.add_subcommand("scan", "Jordan types over all projective points");
  cmd_scan->add_option("module", file);
  cmd_scan->add_option("--e", scan_e, "scan field degree (default: module field)");

  std::string method = "exhaustive";
  unsigned ext = 0;
  auto* cmd_cjt = app.add_subcommand("cjt", "decide constant Jordan type");
  cmd_cjt->add_option("module", file);
  cmd_cjt->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "extension", "symbolic"}));
  cmd_cjt->add_option("--ext", ext, "scan degree (exhaustive) or maximal degree (extension)");

  unsigned power = 1;
  std::size_t g = 1;
  auto* cmd_minors = app.add_subcommand("minors", "g-minors of the generic matrix power");
  cmd_minors->add_option("module", file);
  cmd_minors->add_option("--i", power);
  cmd_minors->add_option("--g", g);

  auto* cmd_grank = app.add_subcommand("grank", "generic rank profile");
  cmd_grank->add_option("module", file);

  std::string chain_dir;
  auto* cmd_syz = app.add_subcommand("syzygy", "Omega^i");
  cmd_syz->add_option("module", file);
  cmd_syz->add_option("--i", idx);
  cmd_syz->add_option("--chain-dir", chain_dir, "also write Omega^0..Omega^i with a manifest");

  std::size_t max = 6;
  auto* cmd_betti = app.add_subcommand("betti", "Betti numbers beta_0..beta_max");
  cmd_betti->add_option("module", file);
  cmd_betti->add_option("--max", max);

  auto* cmd_tau = app.add_subcommand("tau", "Auslander-Reiten translate");
  cmd_tau->add_option("module", file);

  auto* cmd_rp = app.add_subcommand("rp", "rank property report (c = 2)");
  cmd_rp->add_option("module", file);

  unsigned step_limit = 0;
  auto* cmd_classify = app.add_subcommand("classify", "locate the module among the syzygies of k (c = 2)");
  cmd_classify->add_option("module", file);
  cmd_classify->add_option("--ext", ext);
  cmd_classify->add_option("--step-limit", step_limit);

  std::string suite = "paper";
  std::vector<std::string> grid;
  bool mutant = false;
  auto* cmd_verify = app.add_subcommand("verify", "run the property suite");
  cmd_verify->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
  cmd_verify->add_option("--grid", grid, "p,e,n,c (repeatable)");
  cmd_verify->add_flag("--mutant", mutant, "use a non-primitive root of unity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_new) {
      AlgebraParams alg = make_algebra(p, e, n, c);
      ModuleSpec spec;
      spec.kind = kind;
      spec.s = s;
      spec.t = t;
      spec.d = d;
      spec.seed = seed;
      if (kind == "syzygy") {
        spec.i = idx;
        spec.parts = {ModuleSpec{"k"}};
      }
      ModuleRep m = build_module(alg, spec);
      std::cout << dump_module(m);
      return 0;
    }
    if (*cmd_verify) {
      VerifyOptions opts;
      for (auto& gs : grid) opts.grid.push_back(parse_grid_point(gs));
      opts.mutant = mutant;
      opts.seed = seed;
      bool all = true;
      for (auto& o : run_property_suite(opts)) {
        const char* tag = o.skipped ? "SKIP" : o.passed ? "PASS" : "FAIL";
        std::cout << tag << "  [" << o.config << "] " << o.statement;
        if (!o.note.empty()) std::cout << "  (" << o.note << ")";
        std::cout << "\n";
        if (!o.passed) {
          all = false;
          std::cout << "  counterexample: " << o.counterexample.dump() << "\n";
        }
      }
      return all ? 0 : 1;
    }

    ModuleRep m = load(file);
    const Field& f = *m.field();
    if (*cmd_jtype) {
      std::cout << jordan_type_at(m, parse_codes(f, lambda, m.c())).to_string() << "\n";
    } else if (*cmd_scan) {
      Json out = Json::array();
      for (auto& se : scan_types(m, scan_e ? scan_e : f.degree())) {
        Json lam = Json::array();
        for (Elem a : se.lambda) lam.push_back(a);
        out.push_back(Json{{"lambda", lam}, {"type", se.type.to_string()}});
      }
      print(out);
    } else if (*cmd_cjt) {
      CjtOptions o{parse_method(method), ext ? ext : (method == "extension" ? 3 : f.degree()), seed};
      auto v = check_constant(m, o);
      print(verdict_json(v));
      return v.constant ? 0 : 1;
    } else if (*cmd_minors) {
      Json out = Json::array();
      for (auto& poly : minor_polys(m, power, g)) out.push_back(poly_json(poly));
      print(out);
    } else if (*cmd_grank) {
      auto prof = generic_rank_profile(m, seed);
      print(Json{{"g", prof.g}, {"certified", prof.certified}});
    } else if (*cmd_syz) {
      if (!chain_dir.empty()) {
        std::filesystem::create_directories(chain_dir);
        Json manifest = Json::array();
        int step = idx >= 0 ? 1 : -1;
        ModuleRep cur = m;
        for (int i = 0;; i += step) {
          std::string name = "omega_" + std::to_string(i) + ".json";
          std::ofstream(std::filesystem::path(chain_dir) / name) << dump_module(cur);
          manifest.push_back(Json{{"i", i}, {"file", name}, {"dim", cur.dim()}});
          if (i == idx) break;
          cur = syzygy(cur, step);
        }
        std::ofstream(std::filesystem::path(chain_dir) / "manifest.json") << manifest.dump(2) << "\n";
        std::cout << dump_module(cur);
      } else {
        std::cout << dump_module(syzygy(m, idx));
      }
    } else if (*cmd_betti) {
      std::cout << Json(betti_sequence(m, max)).dump() << "\n";
    } else if (*cmd_tau) {
      std::cout << dump_module(ar_translate(m));
    } else if (*cmd_rp) {
      print(rp_json(check_rp(m), f));
    } else if (*cmd_classify) {
      ClassifyOptions o;
      if (ext) o.ext = ext;
      o.step_limit = step_limit;
      o.seed = seed;
      auto cl = classify_syzygy_of_k(m, o);
      for (auto& line : cl.trace)
        std::cout << "dim " << line.dim << "  stable " << line.stable_type << "  beta0 " << line.beta0
                  << "  beta-1 " << line.beta_minus1 << "  " << line.branch << "\n";
      std::cout << cl.to_string() << "\n";
      return cl.certified ? 0 : 1;
    }
    return 0;
  } catch (const Error& err) {
    std::cerr << Json{{"error", to_string(err.kind())}, {"message", err.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << Json{{"error", "Internal"}, {"message", err.what()}}.dump() << "\n";
    return 2;
  }
}
