#include "phin/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace phin {

namespace {

const Json& require_field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + (where.empty() ? "" : ".") + key + ": missing field");
  return *it;
}

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string string_from_json(const Json& j, const std::string& field) {
  if (!j.is_string()) throw InputError(field + ": expected a string");
  return j.get<std::string>();
}

Json check_entry(bool ok) { return ok ? "pass" : "fail"; }

Json polygon_to_json(const NewtonPolygon& poly) {
  Json out = Json::array();
  for (const auto& s : poly.segments) {
    out.push_back({{"slope", rational_to_json(s.slope)},
                   {"multiplicity", std::to_string(s.multiplicity)}});
  }
  return out;
}

ComponentSource parse_component(const Json& j, std::int64_t p, const std::string& where) {
  const std::string type = string_from_json(require_field(j, "type", where), join(where, "type"));
  if (type == "genus0") return GenusZero{};
  if (type == "elliptic") {
    return EllipticCurveSpec{p, int_from_json(require_field(j, "a4", where), join(where, "a4")),
                             int_from_json(require_field(j, "a6", where), join(where, "a6"))};
  }
  if (type == "matrix") {
    return ExplicitFrobenius{
        matrix_from_json(require_field(j, "matrix", where), join(where, "matrix"))};
  }
  throw InputError(join(where, "type") + ": unknown component type '" + type + "'");
}

Json component_to_json(const ComponentSource& s) {
  if (std::holds_alternative<GenusZero>(s)) return Json{{"type", "genus0"}};
  if (const auto* e = std::get_if<EllipticCurveSpec>(&s)) {
    return Json{{"type", "elliptic"}, {"a4", std::to_string(e->a4)}, {"a6", std::to_string(e->a6)}};
  }
  return Json{{"type", "matrix"}, {"matrix", matrix_to_json(std::get<ExplicitFrobenius>(s).matrix)}};
}

CurveInstance parse_curve(const Json& j) {
  const std::int64_t p = int_from_json(require_field(j, "p", ""), "p");
  const std::int64_t f = j.contains("f") ? int_from_json(j["f"], "f") : 1;

  const Json& vs = require_field(j, "vertices", "");
  if (!vs.is_array()) throw InputError("vertices: expected an array");
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    vertices.push_back({string_from_json(require_field(vs[i], "id", where), where + ".id"),
                        int_from_json(require_field(vs[i], "genus", where), where + ".genus")});
  }
  const Json& es = require_field(j, "edges", "");
  if (!es.is_array()) throw InputError("edges: expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    edges.push_back({string_from_json(require_field(es[i], "id", where), where + ".id"),
                     string_from_json(require_field(es[i], "tail", where), where + ".tail"),
                     string_from_json(require_field(es[i], "head", where), where + ".head")});
  }

  std::map<std::string, ComponentSource> components;
  if (j.contains("components")) {
    const Json& cs = j["components"];
    if (!cs.is_object()) throw InputError("components: expected an object keyed by vertex id");
    for (const auto& [id, src] : cs.items()) {
      components.emplace(id, parse_component(src, p, "components." + id));
    }
  }
  // Vertices without an explicit source default to genus 0.
  for (const auto& v : vertices) {
    if (!components.contains(v.id) && v.genus == 0) components.emplace(v.id, GenusZero{});
  }

  try {
    return CurveInstance{DualGraph(std::move(vertices), std::move(edges)), std::move(components), p, f};
  } catch (const GraphError& e) {
    throw InputError(std::string("graph: ") + e.what());
  }
}

InstanceFile::Av parse_av(const Json& j) {
  InstanceFile::Av av;
  av.p = int_from_json(require_field(j, "p", ""), "p");
  av.f = j.contains("f") ? int_from_json(j["f"], "f") : 1;
  av.torus_rank = int_from_json(require_field(j, "torus_rank", ""), "torus_rank");
  av.gram = matrix_from_json(require_field(j, "gram", ""), "gram");
  av.b_frobenius = j.contains("b_frobenius") ? matrix_from_json(j["b_frobenius"], "b_frobenius")
                                             : QMatrix();
  return av;
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw InputError(field + ": expected an integer or rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(field + ": " + e.what());
  }
}

std::int64_t int_from_json(const Json& j, const std::string& field) {
  const Rational r = rational_from_json(j, field);
  if (!r.is_integer()) throw InputError(field + ": expected an integer");
  const Integer n = r.numerator();
  if (!n.fits_slong_p()) throw InputError(field + ": integer out of range");
  return n.get_si();
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field + ": expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw InputError(row_field + ": expected an array");
    if (j[i].size() != cols) throw InputError(row_field + ": ragged row");
    for (std::size_t k = 0; k < cols; ++k) {
      entries.push_back(rational_from_json(j[i][k], row_field + "[" + std::to_string(k) + "]"));
    }
  }
  if (rows > 0 && cols == 0) return QMatrix(rows, 0);
  return QMatrix(rows, cols, std::move(entries));
}

InstanceFile parse_instance(const Json& j) {
  InstanceFile out;
  out.kind = string_from_json(require_field(j, "kind", ""), "kind");
  out.source = j;
  if (out.kind == "curve") {
    out.curve = parse_curve(j);
  } else if (out.kind == "av") {
    out.av = parse_av(j);
  } else {
    throw InputError("kind: expected \"curve\" or \"av\", got '" + out.kind + "'");
  }
  return out;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_instance(j);
}

UniformizationData to_uniformization(const InstanceFile::Av& av) {
  UniformizationData u;
  u.p = av.p;
  u.f = av.f;
  u.torus_rank = av.torus_rank;
  u.gram = av.gram;
  u.b_frobenius = require_weil(av.b_frobenius, PrimePower{av.p, av.f});
  return u;
}

Json curve_instance_to_json(const CurveInstance& c) {
  Json j;
  j["kind"] = "curve";
  j["p"] = std::to_string(c.p);
  j["f"] = std::to_string(c.f);
  Json vs = Json::array();
  for (const auto& v : c.graph.vertices()) vs.push_back({{"id", v.id}, {"genus", std::to_string(v.genus)}});
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& e : c.graph.edges()) es.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  j["edges"] = std::move(es);
  Json cs = Json::object();
  for (const auto& [id, src] : c.components) cs[id] = component_to_json(src);
  j["components"] = std::move(cs);
  return j;
}

BuildOutcome build_report(const InstanceFile& instance) {
  BuildOutcome out;
  std::optional<bool> agreement;
  if (instance.curve) {
    out.module = build_from_curve(*instance.curve);
    agreement = modules_equal(out.module, build_from_av(jacobian_data(*instance.curve)));
  } else {
    out.module = build_from_av(to_uniformization(*instance.av));
  }
  const PhiNModule& m = out.module;

  const RelationReport relations = verify_relations(m);
  const bool duality = verify_monodromy_duality(m);
  std::optional<HodgeNewtonReport> hn;
  if (relations.passed("phi_invertible")) hn = hodge_newton(m);

  Json module;
  module["p"] = std::to_string(m.p);
  module["f"] = std::to_string(m.f);
  module["q"] = m.q().get_str();
  module["dims"] = {{"w0", std::to_string(m.dims.w0)},
                    {"w1", std::to_string(m.dims.w1)},
                    {"w2", std::to_string(m.dims.w2)}};
  module["fil1_dim"] = std::to_string(m.fil1_dim);
  if (hn) {
    module["t_N"] = rational_to_json(hn->t_newton);
    module["t_H"] = std::to_string(hn->t_hodge);
  }
  module["phi"] = matrix_to_json(m.phi);
  module["n"] = matrix_to_json(m.n);
  module["gram"] = matrix_to_json(m.gram);
  if (hn) {
    module["newton_slopes"] = polygon_to_json(hn->newton);
    module["hodge_slopes"] = polygon_to_json(hn->hodge);
  }

  Json checks;
  bool ok = true;
  for (const auto& c : relations.checks) {
    checks[c.name] = check_entry(c.passed);
    ok = ok && c.passed;
  }
  checks["monodromy_duality"] = check_entry(duality);
  ok = ok && duality;
  if (agreement) {
    checks["curve_jacobian_agreement"] = check_entry(*agreement);
    ok = ok && *agreement;
  }
  const bool endpoints = hn && hn->endpoints_equal;
  const bool above = hn && hn->newton_above_hodge;
  const bool symmetric = hn && hn->newton_symmetric;
  checks["t_N_equals_t_H"] = check_entry(endpoints);
  checks["newton_above_hodge"] = check_entry(above);
  checks["newton_symmetric"] = check_entry(symmetric);
  ok = ok && endpoints && above && symmetric;

  out.report["instance"] = instance.source;
  out.report["module"] = std::move(module);
  out.report["checks"] = std::move(checks);
  out.report["status"] = ok ? "pass" : "fail";
  out.all_passed = ok;
  return out;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

PhiNModule module_from_report(const Json& report) {
  const Json& m = require_field(report, "module", "");
  PhiNModule out;
  out.p = int_from_json(require_field(m, "p", "module"), "module.p");
  out.f = int_from_json(require_field(m, "f", "module"), "module.f");
  const Json& dims = require_field(m, "dims", "module");
  out.dims.w0 = static_cast<std::size_t>(int_from_json(require_field(dims, "w0", "module.dims"), "module.dims.w0"));
  out.dims.w1 = static_cast<std::size_t>(int_from_json(require_field(dims, "w1", "module.dims"), "module.dims.w1"));
  out.dims.w2 = static_cast<std::size_t>(int_from_json(require_field(dims, "w2", "module.dims"), "module.dims.w2"));
  out.fil1_dim = int_from_json(require_field(m, "fil1_dim", "module"), "module.fil1_dim");
  const std::size_t dim = out.dims.total();
  auto square = [&](const char* key, std::size_t n) {
    QMatrix mat = matrix_from_json(require_field(m, key, "module"), std::string("module.") + key);
    if (mat.rows() != n) throw InputError(std::string("module.") + key + ": wrong size");
    return mat.rows() == 0 ? QMatrix(n, n) : mat;
  };
  out.phi = square("phi", dim);
  out.n = square("n", dim);
  out.gram = square("gram", out.dims.w2);
  return out;
}

}  // namespace phin
