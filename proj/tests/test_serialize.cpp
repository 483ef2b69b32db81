#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcjt/corpus.hpp"
#include "qcjt/serialize.hpp"

using namespace qcjt;

static ErrorKind kind_of(const std::string& text) {
  try {
    parse_module(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

TEST_CASE("hand-written canonical form of k") {
  ModuleRep k = ModuleRep::zero(make_algebra(7, 1, 3, 2), 1);
  CHECK(dump_module(k) == "{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":1,\"matrices\":[[[0]],[[0]]]}\n");
}

TEST_CASE("extension entries are digit arrays") {
  AlgebraParams alg = make_algebra(3, 2, 2, 2);
  ModuleRep m = radical_quotient_module(alg, 0, 2);
  Json j = module_json(m);
  CHECK(j["q"] == Json::array({2, 0}));
  CHECK(j["matrices"][0][1][0] == Json::array({1, 0}));
}

TEST_CASE("round trip is byte-identical") {
  for (auto [p, e, n, c] : std::vector<std::tuple<unsigned, unsigned, unsigned, unsigned>>{
           {7, 1, 3, 2}, {3, 2, 2, 2}, {7, 2, 3, 2}, {5, 1, 2, 3}}) {
    for (auto& ce : build_corpus(standard_corpus_spec(p, e, n, c, 1))) {
      std::string once = dump_module(ce.module);
      ModuleRep back = parse_module(once);
      CHECK(back.mats() == ce.module.mats());
      CHECK(dump_module(back) == once);
    }
  }
}

TEST_CASE("duals load with the inverse root") {
  ModuleRep m = radical_quotient_module(make_algebra(7, 1, 3, 2), 0, 3);
  ModuleRep d = dual_module(m);
  std::string s = dump_module(d);
  CHECK(s.find("\"q\":4") != std::string::npos);
  CHECK(dump_module(parse_module(s)) == s);
}

TEST_CASE("invalid input") {
  CHECK(kind_of("{\"p\":7,") == ErrorKind::BadInput);
  CHECK(kind_of("[1,2]") == ErrorKind::BadInput);
  // 1 is not a primitive cube root
  CHECK(kind_of("{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":1,\"d\":1,\"matrices\":[[[0]],[[0]]]}") == ErrorKind::BadInput);
  CHECK(kind_of("{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":1,\"matrices\":[[[0]]]}") == ErrorKind::BadInput);
  CHECK(kind_of("{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":1,\"matrices\":[[[9]],[[0]]]}") == ErrorKind::BadInput);
  CHECK(kind_of("{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":2,\"matrices\":[[[0,0]],[[0,0],[0,0]]]}") == ErrorKind::BadInput);
  // X = J_2, Y = identity breaks nilpotence
  CHECK(kind_of("{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":2,\"matrices\":[[[0,0],[1,0]],[[1,0],[0,1]]]}") ==
        ErrorKind::InvalidModule);
  // XY = 2YX fails for X = e_21, Y = e_12
  CHECK(kind_of("{\"p\":7,\"e\":1,\"n\":3,\"c\":2,\"q\":2,\"d\":2,\"matrices\":[[[0,0],[1,0]],[[0,1],[0,0]]]}") ==
        ErrorKind::InvalidModule);
}
