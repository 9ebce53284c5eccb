#pragma once

#include "phin/exact_linalg.hpp"
#include "phin/matrix.hpp"
#include "phin/weil.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phin {

class ModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sizes of the three graded pieces, in basis order: weight 0 (Hom(Gamma, K),
/// the graph's H^1), weight 1 (abelian / component part), weight 2 (toric
/// part, the graph's H_1 tensor K).
struct WeightDims {
  std::size_t w0 = 0;
  std::size_t w1 = 0;
  std::size_t w2 = 0;

  std::size_t total() const { return w0 + w1 + w2; }
  friend bool operator==(const WeightDims&, const WeightDims&) = default;
};

/// Filtered (Phi, N)-module on H^1_dR with its exact-rational matrices.
/// Fields are public so that tests can build deliberately broken modules;
/// assemble() is the validating constructor.
struct PhiNModule {
  std::int64_t p = 2;
  std::int64_t f = 1;
  WeightDims dims;
  QMatrix phi;
  QMatrix n;
  std::int64_t fil1_dim = 0;
  QMatrix gram;

  Integer q() const { return PrimePower{p, f}.value(); }

  friend bool operator==(const PhiNModule&, const PhiNModule&) = default;
};

/// Block diagonal Phi = (1, W, q) and N carrying gram from weight 2 to
/// weight 0. Throws ModuleError for a gram that is not a symmetric positive
/// definite integer matrix, or for a WeilMatrix over a different q.
PhiNModule assemble(std::int64_t p, std::int64_t f, const QMatrix& gram, const WeilMatrix& w);

struct Check {
  std::string name;
  bool passed = false;
};

struct RelationReport {
  std::vector<Check> checks;

  bool all_passed() const;
  bool passed(const std::string& name) const;
};

/// N^2 = 0, N Phi = q Phi N, Phi invertible, rank N = w2.
RelationReport verify_relations(const PhiNModule& m);

struct HodgeNewtonReport {
  Rational t_newton;
  std::int64_t t_hodge = 0;
  NewtonPolygon newton;  // slopes normalised by 1/f
  NewtonPolygon hodge;
  bool endpoints_equal = false;
  bool newton_above_hodge = false;
  bool newton_symmetric = false;
};

/// Requires Phi invertible (throws ModuleError otherwise).
HodgeNewtonReport hodge_newton(const PhiNModule& m);

/// Zero except the (w2, w2') block, which is gram.
QMatrix monodromy_pairing_matrix(const PhiNModule& m);

/// Identity blocks pairing w0 with w2', w1 with w1', w2 with w0'.
QMatrix duality_pairing(const PhiNModule& m);

/// P * N' == monodromy_pairing_matrix(m), with N' the dual side's monodromy
/// (equal to N under the principal-polarization identification).
bool verify_monodromy_duality(const PhiNModule& m);

bool modules_equal(const PhiNModule& a, const PhiNModule& b);

}  // namespace phin
