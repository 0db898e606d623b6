#include "proxpt/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "proxpt/errors.hpp"

namespace proxpt {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, const std::string& path, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) throw SchemaError(path.empty() ? "$" : path, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!obj.contains(k)) throw SchemaError(path.empty() ? k : path + "." + k, "missing field");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : obj.items())
    if (!known.contains(key)) throw SchemaError(path.empty() ? key : path + "." + key, "unexpected field");
}

double get_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  return v.get<double>();
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

std::vector<PointId> get_ids(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of ids");
  std::vector<PointId> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_string(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Knots get_knots(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of [t, value] pairs");
  Knots knots;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != 2) throw SchemaError(p, "expected [t, value]");
    knots.emplace_back(get_number(v[i][0], p + "[0]"), get_number(v[i][1], p + "[1]"));
  }
  return knots;
}

ThetaSpec parse_theta(const json& v) {
  require_keys(v, "theta", {"name"}, {"parameters"});
  const std::string name = get_string(v["name"], "theta.name");
  if (name == "tabulated") {
    if (!v.contains("parameters")) throw SchemaError("theta.parameters", "missing field");
    require_keys(v["parameters"], "theta.parameters", {"knots"});
    try {
      return ThetaSpec::tabulated(get_knots(v["parameters"]["knots"], "theta.parameters.knots"));
    } catch (const ParamError& e) {
      throw SchemaError("theta.parameters.knots", e.what());
    }
  }
  if (v.contains("parameters")) require_keys(v["parameters"], "theta.parameters", {});
  try {
    return ThetaSpec::from_name(name);
  } catch (const ParamError& e) {
    throw SchemaError("theta.name", e.what());
  }
}

PhiSpec parse_phi(const json& v) {
  require_keys(v, "phi", {"name"}, {"parameters"});
  const std::string name = get_string(v["name"], "phi.name");
  try {
    if (name == "pow") {
      double k = 0.5;
      if (v.contains("parameters")) {
        require_keys(v["parameters"], "phi.parameters", {}, {"k"});
        if (v["parameters"].contains("k")) k = get_number(v["parameters"]["k"], "phi.parameters.k");
      }
      return PhiSpec::pow(k);
    }
    if (name == "tabulated") {
      if (!v.contains("parameters")) throw SchemaError("phi.parameters", "missing field");
      require_keys(v["parameters"], "phi.parameters", {"knots"});
      return PhiSpec::tabulated(get_knots(v["parameters"]["knots"], "phi.parameters.knots"));
    }
  } catch (const ParamError& e) {
    throw SchemaError("phi.parameters", e.what());
  }
  throw SchemaError("phi.name", "unknown phi '" + name + "'");
}

json knots_json(const Knots& knots) {
  json arr = json::array();
  for (const auto& [t, v] : knots) arr.push_back(json::array({t, v}));
  return arr;
}

}  // namespace

InstanceFile parse_instance(const std::string& text, bool exact_int) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }
  require_keys(doc, "", {"format_version", "points", "metric", "A", "B", "T"},
               {"theta", "phi", "params", "tolerances"});

  if (!doc["format_version"].is_number_integer()) throw SchemaError("format_version", "expected an integer");
  if (doc["format_version"].get<int>() != kFormatVersion)
    throw SchemaError("format_version", "unsupported version " + doc["format_version"].dump());

  const json& jpoints = doc["points"];
  if (!jpoints.is_array() || jpoints.empty()) throw SchemaError("points", "expected a non-empty array");
  std::vector<Point> points;
  for (std::size_t i = 0; i < jpoints.size(); ++i) {
    const std::string path = "points[" + std::to_string(i) + "]";
    require_keys(jpoints[i], path, {"id", "value"});
    Point p;
    p.id = get_string(jpoints[i]["id"], path + ".id");
    const json& value = jpoints[i]["value"];
    if (value.is_number()) {
      p.coords.push_back(value.get<double>());
    } else if (value.is_array() && !value.empty()) {
      for (std::size_t k = 0; k < value.size(); ++k)
        p.coords.push_back(get_number(value[k], path + ".value[" + std::to_string(k) + "]"));
    } else {
      throw SchemaError(path + ".value", "expected a number or a non-empty array of numbers");
    }
    points.push_back(std::move(p));
  }

  const json& jmetric = doc["metric"];
  require_keys(jmetric, "metric", {"kind"}, {"matrix"});
  MetricSpec metric;
  try {
    metric.kind = metric_kind_from_string(get_string(jmetric["kind"], "metric.kind"));
  } catch (const ParamError& e) {
    throw SchemaError("metric.kind", e.what());
  }
  if (metric.kind == MetricKind::explicit_matrix) {
    if (!jmetric.contains("matrix")) throw SchemaError("metric.matrix", "missing field (required for explicit)");
    const json& m = jmetric["matrix"];
    if (!m.is_array()) throw SchemaError("metric.matrix", "expected an array of rows");
    if (m.size() != points.size())
      throw SchemaError("metric.matrix", "expected " + std::to_string(points.size()) + " rows, got " +
                                             std::to_string(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::string path = "metric.matrix[" + std::to_string(i) + "]";
      if (!m[i].is_array() || m[i].size() != points.size())
        throw SchemaError(path, "expected a row of " + std::to_string(points.size()) + " numbers");
      std::vector<double> row;
      for (std::size_t j = 0; j < m[i].size(); ++j)
        row.push_back(get_number(m[i][j], path + "[" + std::to_string(j) + "]"));
      metric.matrix.push_back(std::move(row));
    }
  } else if (jmetric.contains("matrix")) {
    throw SchemaError("metric.matrix", "only allowed for the explicit metric");
  }

  std::vector<PointId> a_ids = get_ids(doc["A"], "A");
  std::vector<PointId> b_ids = get_ids(doc["B"], "B");
  const json& jt = doc["T"];
  if (!jt.is_object()) throw SchemaError("T", "expected an object mapping A-ids to B-ids");
  std::vector<std::pair<PointId, PointId>> mapping;
  for (const auto& [from, to] : jt.items()) mapping.emplace_back(from, get_string(to, "T." + from));

  InstanceConfig config;
  if (doc.contains("theta")) config.theta = parse_theta(doc["theta"]);
  if (doc.contains("phi")) config.phi = parse_phi(doc["phi"]);
  if (doc.contains("params")) {
    const json& p = doc["params"];
    require_keys(p, "params", {"a", "b", "c", "h"});
    try {
      config.params = ContractionParams(get_number(p["a"], "params.a"), get_number(p["b"], "params.b"),
                                        get_number(p["c"], "params.c"), get_number(p["h"], "params.h"));
    } catch (const ParamError& e) {
      throw SchemaError("params", e.what());
    }
  }
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    require_keys(t, "tolerances", {}, {"tol", "eps_conv", "max_iter"});
    if (t.contains("tol")) config.tol = get_number(t["tol"], "tolerances.tol");
    if (t.contains("eps_conv")) config.eps_conv = get_number(t["eps_conv"], "tolerances.eps_conv");
    if (t.contains("max_iter")) {
      if (!t["max_iter"].is_number_unsigned()) throw SchemaError("tolerances.max_iter", "expected a non-negative integer");
      config.max_iter = t["max_iter"].get<std::size_t>();
    }
  }

  FiniteInstance inst(std::move(points), std::move(metric), std::move(a_ids), std::move(b_ids),
                      std::move(mapping), exact_int);
  const MetricAxiomReport axioms = validate_metric_axioms(inst, config.tol.value_or(kDefaultTol));
  if (const AxiomResult* bad = axioms.first_failure()) {
    std::string witness;
    for (const PointId& id : bad->witness) witness += (witness.empty() ? "" : ", ") + id;
    throw IntegrityError("metric violates " + bad->axiom + " at (" + witness + ")");
  }
  return InstanceFile{std::move(inst), std::move(config)};
}

InstanceFile load_instance_file(const std::string& path, bool exact_int) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), exact_int);
}

FiniteInstance load_instance(const std::string& path, bool exact_int) {
  return load_instance_file(path, exact_int).instance;
}

std::string serialize_instance(const FiniteInstance& inst, const InstanceConfig& config) {
  json doc;
  doc["format_version"] = kFormatVersion;
  json points = json::array();
  for (const Point& p : inst.points()) {
    json jp;
    jp["id"] = p.id;
    if (p.coords.size() == 1)
      jp["value"] = p.coords.front();
    else
      jp["value"] = p.coords;
    points.push_back(std::move(jp));
  }
  doc["points"] = std::move(points);
  json metric;
  metric["kind"] = to_string(inst.metric().kind);
  if (inst.metric().kind == MetricKind::explicit_matrix) metric["matrix"] = inst.metric().matrix;
  doc["metric"] = std::move(metric);

  json a = json::array(), b = json::array();
  for (std::size_t i : inst.a()) a.push_back(inst.id(i));
  for (std::size_t i : inst.b()) b.push_back(inst.id(i));
  doc["A"] = std::move(a);
  doc["B"] = std::move(b);
  json t = json::object();
  for (const auto& [from, to] : inst.mapping()) t[from] = to;
  doc["T"] = std::move(t);

  if (config.theta) {
    json th{{"name", config.theta->name()}, {"parameters", json::object()}};
    if (!config.theta->is_builtin()) th["parameters"]["knots"] = knots_json(config.theta->knots());
    doc["theta"] = std::move(th);
  }
  if (config.phi) {
    json ph{{"name", config.phi->name()}, {"parameters", json::object()}};
    if (config.phi->is_builtin())
      ph["parameters"]["k"] = config.phi->exponent();
    else
      ph["parameters"]["knots"] = knots_json(config.phi->knots());
    doc["phi"] = std::move(ph);
  }
  if (config.params)
    doc["params"] = {{"a", config.params->a()}, {"b", config.params->b()}, {"c", config.params->c()}, {"h", config.params->h()}};
  if (config.tol || config.eps_conv || config.max_iter) {
    json tol = json::object();
    if (config.tol) tol["tol"] = *config.tol;
    if (config.eps_conv) tol["eps_conv"] = *config.eps_conv;
    if (config.max_iter) tol["max_iter"] = *config.max_iter;
    doc["tolerances"] = std::move(tol);
  }
  return doc.dump(2) + "\n";
}

void save_instance(const std::string& path, const FiniteInstance& inst, const InstanceConfig& config) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_instance(inst, config);
}

FiniteInstance with_exact_int(const FiniteInstance& inst, bool exact_int) {
  std::vector<PointId> a, b;
  for (std::size_t i : inst.a()) a.push_back(inst.id(i));
  for (std::size_t i : inst.b()) b.push_back(inst.id(i));
  return FiniteInstance(inst.points(), inst.metric(), std::move(a), std::move(b), inst.mapping(), exact_int);
}

}  // namespace proxpt
