#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcjt/module.hpp"

namespace qcjt {

// One module constructor; parts is used by "sum", base by "syzygy" and "twist".
struct ModuleSpec {
  std::string kind;  // k, free, radical-quotient, syzygy, twist, sum, sample
  unsigned s = 0, t = 0;
  int i = 0;
  std::vector<Elem> diag;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::vector<ModuleSpec> parts;
};

ModuleRep build_module(const AlgebraParams& alg, const ModuleSpec& spec);

struct CorpusEntry {
  std::string name;
  ModuleRep module;
};

// Field parameters, generator count and constructor list.
struct CorpusSpec {
  std::uint32_t p = 7;
  unsigned e = 1;
  unsigned n = 3;
  unsigned c = 2;
  std::vector<ModuleSpec> modules;
};

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec);
std::string describe(const ModuleSpec& spec);

// k, A, radical quotients, syzygies of k, sums, twists, and (c = 2) samples.
CorpusSpec standard_corpus_spec(std::uint32_t p, unsigned e, unsigned n, unsigned c, std::uint64_t seed = 0);

}  // namespace qcjt
