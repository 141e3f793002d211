// Deterministic random instance generators shared by the property tests and
// the acceptance suite.
#pragma once

#include "lojax/ideal.hpp"

#include <random>

namespace lojax::testing {

using Rng = std::mt19937_64;

// A finite-colength ideal: one pure power per axis plus a few extra
// generators, exponents bounded by max_exp.
inline MonomialIdeal random_convenient_ideal(Rng& rng, int n, int max_exp, int extra_gens) {
  std::uniform_int_distribution<int> exp_dist(1, max_exp);
  std::uniform_int_distribution<int> coord_dist(0, max_exp);
  std::vector<ZVec> gens;
  for (int i = 0; i < n; ++i) {
    ZVec g(n, Int(0));
    g[i] = exp_dist(rng);
    gens.push_back(std::move(g));
  }
  for (int e = 0; e < extra_gens; ++e) {
    ZVec g(n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      g[i] = coord_dist(rng);
      if (g[i] != 0) nonzero = true;
    }
    if (nonzero) gens.push_back(std::move(g));
  }
  return MonomialIdeal(n, std::move(gens));
}

// A diagonal (pure-power) ideal with exponents in [lo, hi].
inline MonomialIdeal random_diagonal_ideal(Rng& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> exp_dist(lo, hi);
  std::vector<ZVec> gens;
  for (int i = 0; i < n; ++i) {
    ZVec g(n, Int(0));
    g[i] = exp_dist(rng);
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(n, std::move(gens));
}

inline QVec random_point(Rng& rng, int n, int max_num, int max_den) {
  std::uniform_int_distribution<int> num_dist(0, max_num);
  std::uniform_int_distribution<int> den_dist(1, max_den);
  QVec p(n);
  for (int i = 0; i < n; ++i) p[i] = Rat(num_dist(rng)) / Rat(den_dist(rng));
  return p;
}

}  // namespace lojax::testing
