#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <set>

#include "singhodge/laurent.hpp"
#include "singhodge/monodromy.hpp"

namespace singhodge::cli {

// Generators shared by the verify subcommand; deterministic in the engine
// state.
JordanBlockData random_jordan(std::mt19937_64& rng, int n);
LaurentPolynomialZ random_symmetric(std::mt19937_64& rng, int center);
std::set<ExponentVector> random_support(std::mt19937_64& rng, int n, int max_points, Exponent max_coord);

/// Property runs: per iteration one random Jordan dataset (n in 3..6) with
/// 20 random symmetric perturbations checked through the pipeline identity,
/// plus one geometry instance checked against the brute-force oracle.
/// Returns 0, or 4 with a counterexample dump on `err`.
int run_verify(std::uint64_t seed, int iterations, std::ostream& out, std::ostream& err);

}  // namespace singhodge::cli
