#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>

#include "qcjt/serialize.hpp"

struct Run {
  int code;
  std::string out;
};

static Run run(const std::string& args) {
  std::string cmd = std::string(QCJT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

static void save(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

static std::string last_line(const std::string& s) {
  std::string t = s.substr(0, s.find_last_not_of('\n') + 1);
  return t.substr(t.find_last_of('\n') + 1);
}

TEST_CASE("new") {
  auto r3 = run("new --p 7 --n 3 --c 2 --kind radical-quotient --s 0 --t 3");
  CHECK(r3.code == 0);
  CHECK(qcjt::Json::parse(r3.out)["d"] == 6);
  save("r3.json", r3.out);
  auto k = run("new --kind k");
  CHECK(k.out == "{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":1,\"matrices\":[[[0]],[[0]]]}\n");
  save("k.json", k.out);
  auto A = run("new --kind free");
  CHECK(qcjt::Json::parse(A.out)["d"] == 9);
  save("free.json", A.out);
  CHECK(run("new --p 5 --n 3 --kind k").code == 2);
  CHECK(run("new --kind radical-quotient --s 2 --t 1").code == 2);
  CHECK(run("new --kind nonsense").code == 2);
  CHECK(run("new --kind sample --d 4 --seed 3").out == run("new --kind sample --d 4 --seed 3").out);
}

TEST_CASE("jtype") {
  CHECK(run("jtype r3.json --lambda 1,1").out == "[1] [2] [3]\n");
  CHECK(run("jtype k.json --lambda 3,0").out == "[1]\n");
  CHECK(run("jtype free.json --lambda 2,5").out == "[3]^3\n");
  CHECK(run("jtype r3.json --lambda 0,0").code == 2);
  CHECK(run("jtype r3.json --lambda 1").code == 2);
}

TEST_CASE("cjt exit codes") {
  CHECK(run("cjt r3.json --method symbolic").code == 0);
  save("j2.json", "{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":2,\"matrices\":[[[0,0],[1,0]],[[0,0],[0,0]]]}");
  auto neg = run("cjt j2.json");
  CHECK(neg.code == 1);
  auto v = qcjt::Json::parse(neg.out);
  CHECK(v["witness"].size() == 2);
  CHECK(v["witness"][0]["type"] != v["witness"][1]["type"]);
  save("k3.json", run("new --kind k --c 3").out);
  CHECK(run("cjt k3.json --method symbolic").code == 2);
  save("bad.json", "{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":1,\"matrices\":[[[1]],[[0]]]}");
  CHECK(run("cjt bad.json").code == 2);
}

TEST_CASE("homological commands") {
  auto b = qcjt::Json::parse(run("betti k.json --max 6").out);
  REQUIRE(b.size() == 7);
  for (std::size_t i = 2; i < b.size(); ++i) CHECK(b[i] > b[i - 1]);
  auto tau = run("tau r3.json");
  CHECK(tau.code == 0);
  save("tau.json", tau.out);
  auto v = qcjt::Json::parse(run("cjt tau.json").out);
  CHECK(v["type"]["mults"][0] == 1);
  CHECK(v["type"]["mults"][1] == 1);
  save("o2.json", run("syzygy k.json --i 2").out);
  auto cl = run("classify o2.json");
  CHECK(cl.code == 0);
  CHECK(last_line(cl.out) == "SyzygyOfK(2)");
  CHECK(run("classify r3.json").code == 1);
  CHECK(qcjt::Json::parse(run("rp o2.json").out).contains("rpx"));
  CHECK(run("syzygy k.json --i 3 --chain-dir chain").code == 0);
  auto manifest = qcjt::Json::parse(std::ifstream("chain/manifest.json"));
  CHECK(manifest.size() == 4);
  CHECK(run("rp k3.json").code == 2);
}

TEST_CASE("size guard") {
  CHECK(run("syzygy k.json --i 3").code == 0);
  CHECK(run("syzygy k.json --i 3").out == run("syzygy k.json --i 3").out);
  setenv("QCJT_SIZE_GUARD", "5", 1);
  CHECK(run("syzygy k.json --i 3").code == 2);
  unsetenv("QCJT_SIZE_GUARD");
}

TEST_CASE("verify") {
  auto ok = run("verify --suite paper --grid 3,1,2,2");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("out of scope (Thm ARcomponents)") != std::string::npos);
  auto mut = run("verify --mutant --grid 7,1,3,2");
  CHECK(mut.code == 1);
  CHECK(mut.out.find("FAIL") != std::string::npos);
  CHECK(run("verify --grid 7,1").code == 2);
}
