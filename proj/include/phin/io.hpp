#pragma once

#include "phin/builders.hpp"
#include "phin/phin_module.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace phin {

using Json = nlohmann::ordered_json;

/// Malformed or schema-invalid input; the message names the offending field.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integers and rationals are written as decimal strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& field);
std::int64_t int_from_json(const Json& j, const std::string& field);

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, const std::string& field);

/// A parsed instance file; exactly one of curve/av is set. Mathematical
/// validation (Weil checks, positive definiteness) happens when the module
/// is built, not here.
struct InstanceFile {
  std::string kind;
  std::optional<CurveInstance> curve;
  struct Av {
    std::int64_t p = 2;
    std::int64_t f = 1;
    std::int64_t torus_rank = 0;
    QMatrix gram;
    QMatrix b_frobenius;
  };
  std::optional<Av> av;
  Json source;
};

InstanceFile parse_instance(const Json& j);
InstanceFile read_instance_file(const std::string& path);

/// Validates the Weil data of an av instance and returns the cross data.
UniformizationData to_uniformization(const InstanceFile::Av& av);

Json curve_instance_to_json(const CurveInstance& c);

/// Builds the module for the instance, runs every check and returns the
/// report together with its overall verdict.
struct BuildOutcome {
  Json report;
  bool all_passed = false;
  PhiNModule module;
};

BuildOutcome build_report(const InstanceFile& instance);

/// Serialises with a fixed layout; identical inputs give identical bytes.
std::string dump_report(const Json& report);

/// Rebuilds the module recorded in a report's "module" section.
PhiNModule module_from_report(const Json& report);

}  // namespace phin
