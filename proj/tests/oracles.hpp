#pragma once

// Independent reference implementations used only by tests: everything here
// avoids the code paths it is used to check (no canonical codes, no
// deletion-contraction, no Sturm machinery).

#include <cstdint>
#include <random>
#include <vector>

#include "chromaroot/graph.hpp"
#include "chromaroot/poly.hpp"

namespace chromaroot::oracle {

// Permutation search; graphs capped at 9 vertices.
bool brute_isomorphic(const Graph& a, const Graph& b);

// Number of proper colourings with t colours by direct backtracking
// enumeration (feasible when t^n is small).
BigInt count_colourings_backtrack(const Graph& g, int t);

// The same count by inclusion-exclusion over vertex subsets:
//   sum over W of (-1)^{n-|W|} * i(G[W])^t,
// with i the number of independent sets (including empty). Cross-validated
// against the backtracking count on the small-graph atlas.
BigInt count_colourings_subset_ie(const Graph& g, int t);

// Picks backtracking when t^n stays below ~2e6, subset IE otherwise.
BigInt count_colourings(const Graph& g, int t);

// Degree-n interpolation through (0, y0), ..., (n, yn); coefficients must
// come out integral.
IntPoly interpolate_through_integer_points(const std::vector<BigInt>& values);

// Brute-force chromatic polynomial: counts at t = 0..n, then interpolation.
IntPoly brute_chromatic(const Graph& g);

// All graphs on exactly n vertices, one per isomorphism class, built by
// vertex augmentation with canonical-code dedup.
std::vector<Graph> atlas(int n);

// Number of distinct real roots of p in (lo, hi] found by sign changes on a
// dense uniform grid (grid_points + 1 sample points).
int sign_sampling_root_count(const IntPoly& p, const Rational& lo, const Rational& hi,
                             int grid_points);

Graph random_graph(int n, double edge_probability, std::mt19937& rng);
IntPoly random_poly(int max_degree, long coeff_bound, std::mt19937& rng);

}  // namespace chromaroot::oracle
