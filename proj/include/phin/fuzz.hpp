#pragma once

#include "phin/builders.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace phin {

struct FuzzBounds {
  std::int64_t max_vertices = 8;
  std::int64_t max_edges = 14;
  std::int64_t max_genus = 2;
  std::int64_t max_prime = 50;
  std::int64_t max_f = 2;
};

/// Random connected curve instance (loops and parallel edges allowed) with
/// genus-1 components from random elliptic curves and genus-2 components
/// as sums of two elliptic Frobenius blocks. Deterministic in the engine's
/// state; draws avoid std distributions so sequences match across
/// standard libraries.
CurveInstance random_curve_instance(std::mt19937_64& rng, const FuzzBounds& bounds);

/// Deterministic instance sequence for a seed.
std::vector<CurveInstance> fuzz_instances(std::uint64_t seed, std::size_t count,
                                          const FuzzBounds& bounds);

/// Every check run on one curve instance.
struct InstanceVerdict {
  bool relations = false;
  bool rank_n_is_b1 = false;
  bool duality = false;
  bool agreement = false;
  /// t_N = t_H = total genus + b1.
  bool endpoints = false;
  bool newton_symmetric = false;
  bool newton_above_hodge = false;
  std::string error;

  bool ok() const {
    return error.empty() && relations && rank_n_is_b1 && duality && agreement && endpoints &&
           newton_symmetric && newton_above_hodge;
  }
};

InstanceVerdict evaluate_instance(const CurveInstance& c);

enum class Execution { serial, parallel };

/// Verdicts in instance order; the parallel path distributes instances over
/// OpenMP threads and yields the same vector.
std::vector<InstanceVerdict> evaluate_all(const std::vector<CurveInstance>& instances,
                                          Execution exec = Execution::parallel);

}  // namespace phin
