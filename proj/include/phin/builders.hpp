#pragma once

#include "phin/graph.hpp"
#include "phin/phin_module.hpp"
#include "phin/weil.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace phin {

struct GenusZero {
  friend bool operator==(const GenusZero&, const GenusZero&) = default;
};

/// An explicit integer Frobenius matrix (2g x 2g) for the component.
struct ExplicitFrobenius {
  QMatrix matrix;
  friend bool operator==(const ExplicitFrobenius&, const ExplicitFrobenius&) = default;
};

using ComponentSource = std::variant<GenusZero, EllipticCurveSpec, ExplicitFrobenius>;

std::int64_t source_genus(const ComponentSource& s);

struct CurveInstance {
  DualGraph graph;
  std::map<std::string, ComponentSource> components;
  std::int64_t p = 2;
  std::int64_t f = 1;
};

/// Uniformization data of a split semistable abelian variety: the torus
/// rank, the valuation pairing on Gamma, and the Frobenius of the
/// good-reduction quotient B.
struct UniformizationData {
  std::int64_t torus_rank = 0;
  QMatrix gram;
  WeilMatrix b_frobenius;
  std::int64_t p = 2;
  std::int64_t f = 1;
};

/// Checks that every vertex has a source of matching genus and that p, f are
/// sane. Throws CurveError.
void validate_instance(const CurveInstance& c);

/// Validated Frobenius of one component (elliptic sources are point-counted).
WeilMatrix component_frobenius(const ComponentSource& s, PrimePower q);

/// Curve-side pipeline. N is the composition restriction -> residue ->
/// boundary worked out on the edge space; Phi on the graph pieces is the
/// map induced by q on edges (toric) and the identity on H^0 of the
/// annuli (weight 0).
PhiNModule build_from_curve(const CurveInstance& c);

/// Abelian-variety-side pipeline: assembles directly from the cross data.
PhiNModule build_from_av(const UniformizationData& u);

UniformizationData jacobian_data(const CurveInstance& c);

bool check_curve_jacobian_agreement(const CurveInstance& c);

}  // namespace phin
