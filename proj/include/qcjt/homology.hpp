#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcjt/module.hpp"

namespace qcjt {

struct ProjectiveCover {
  std::size_t beta0 = 0;
  Matrix top;             // d x beta0, lifts of a basis of M / rM
  Matrix map;             // d x (beta0 * n^c); column j*n^c + mu is x^mu top_j
  Matrix kernel_in_free;  // (beta0 * n^c) x dim(kernel)
  ModuleRep kernel;
};

// Columns extending the radical rM to a basis of M.
Matrix top_vectors(const ModuleRep& m);
ProjectiveCover projective_cover(const ModuleRep& m);
// Omega^i for i > 0, cosyzygies for i < 0, m itself for i = 0.
ModuleRep syzygy(const ModuleRep& m, int i);

// M / span(columns of sub); sub must span a submodule.
ModuleRep quotient_module(const ModuleRep& m, const Matrix& sub);

struct FreeSplit {
  ModuleRep core;
  std::size_t free_rank = 0;
};
FreeSplit split_free(const ModuleRep& m);

std::size_t size_guard();  // QCJT_SIZE_GUARD, default 4000
std::vector<std::size_t> betti_sequence(const ModuleRep& m, std::size_t N);
// Finite-window growth-degree estimate; needs at least 6 entries.
unsigned complexity_estimate(const std::vector<std::size_t>& betas);

struct HomSpace {
  std::size_t dim = 0;
  std::size_t dim_projective = 0;
  std::size_t stable_dim() const { return dim - dim_projective; }
  std::vector<Matrix> basis;  // intertwiners F : M -> N, F X_i = X_i F
};

HomSpace hom_space(const ModuleRep& m, const ModuleRep& n);
// Solution space of F X_i^M = X_i^N F computed directly (reference method).
std::size_t hom_dim_direct(const ModuleRep& m, const ModuleRep& n);

struct IsoSearch {
  bool found = false;
  Matrix intertwiner;  // invertible, possibly over an extension field
};
// Random combinations of a Hom basis; a negative result means only that
// none was found.
IsoSearch find_isomorphism(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = 0,
                           int trials = 50);

ModuleRep nakayama_twist(const ModuleRep& m);
ModuleRep ar_translate(const ModuleRep& m);

}  // namespace qcjt
