#pragma once

#include <random>

#include "tphopf/invariants/invariants.hpp"

namespace tphopf {

/// Least Poisson H-ideal containing the seed: closed under multiplication by
/// A, under {a,−} for all a, and coaction-stable.  The three closure
/// operators are iterated to a fixed point; the dimension grows strictly
/// each round, so at most dim(A) rounds run.
inline Subspace ideal_closure(const ComoduleTPAlgebra& a, const Subspace& seed) {
  if (seed.ambient_dim() != a.dim()) throw ShapeError("seed lives in the wrong ambient space");
  const int d = a.dim(), dh = a.comodule.coaction.rows() / std::max(1, a.dim());
  Subspace current = seed;
  for (int round = 0; round <= d; ++round) {
    std::vector<Vec> gens;
    for (int r = 0; r < current.dim(); ++r) gens.push_back(current.basis_vector(r));
    for (int r = 0; r < current.dim(); ++r) {
      Vec v = current.basis_vector(r);
      for (int i = 0; i < d; ++i) {
        gens.push_back(a.algebra().multiply(a.tp.basis(i), v));
        gens.push_back(a.tp.bracket.apply(a.tp.basis(i), v));
      }
      Vec image = a.comodule.coaction.apply(v);
      for (int l = 0; l < dh; ++l) {
        Vec slice(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) slice[static_cast<size_t>(i)] = image[static_cast<size_t>(i) * dh + l];
        gens.push_back(std::move(slice));
      }
    }
    Subspace next = Subspace::span(d, gens);
    if (next == current) return current;
    current = next;
  }
  return current;
}

/// Sampling evidence for Poisson H-simplicity.  Simplicity quantifies over
/// all nonzero elements, so it is only semidecidable here: the report says
/// whether the closure of every sampled line (all basis lines plus seeded
/// random combinations) is the whole algebra.  proven is claimed only in the
/// one-dimensional case.
struct SimplicityEvidence {
  bool proven = false;
  bool all_closures_full = true;
  int samples = 0;
  unsigned seed = 0;
};

inline SimplicityEvidence simplicity_evidence(const ComoduleTPAlgebra& a, unsigned seed = 0,
                                              int random_samples = 8) {
  SimplicityEvidence ev;
  ev.seed = seed;
  const int d = a.dim();
  if (d == 1) {
    ev.proven = true;
    ev.samples = 1;
    return ev;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<Vec> candidates;
  for (int i = 0; i < d; ++i) candidates.push_back(unit_vec(d, i));
  for (int s = 0; s < random_samples; ++s) {
    Vec v(static_cast<size_t>(d));
    bool nonzero = false;
    for (auto& x : v) {
      x = entry(rng);
      if (x != 0) nonzero = true;
    }
    if (nonzero) candidates.push_back(std::move(v));
  }
  for (const Vec& v : candidates) {
    ++ev.samples;
    if (ideal_closure(a, Subspace::span(d, {v})).dim() != d) ev.all_closures_full = false;
  }
  return ev;
}

}  // namespace tphopf
