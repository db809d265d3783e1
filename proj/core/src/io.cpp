#include "mpr/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mpr {

namespace {

using ordered = nlohmann::ordered_json;

ordered estimate(const Estimate& e) { return ordered{{"value", e.value}, {"error", e.error}}; }

ordered lipatov_object(const LipatovConstants& c) {
  ordered j = ordered::object();
  const auto put = [&](const char* key, const std::optional<double>& v) {
    j[key] = v ? ordered(*v) : ordered(nullptr);
  };
  put("I1", c.I1);
  put("I4", c.I4);
  put("I6", c.I6);
  put("DL", c.DL);
  put("DT", c.DT);
  return j;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string matrix_to_json(const BalancedMatrix& f) {
  return ordered{{"q", f.q()}, {"rows", f.rows()}}.dump();
}

std::vector<BalancedMatrix> matrices_from_json(const std::string& text, int p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix file: ") + e.what());
  }
  const auto one = [p](const nlohmann::json& m) {
    if (!m.is_object() || !m.contains("rows")) throw std::invalid_argument("matrix file: expected {\"q\": ..., \"rows\": ...}");
    const auto rows = m.at("rows").get<std::vector<std::vector<int>>>();
    if (m.contains("q") && m.at("q").get<std::size_t>() != rows.size())
      throw std::invalid_argument("matrix file: q does not match the number of rows");
    return BalancedMatrix::from_rows(rows, p);
  };
  std::vector<BalancedMatrix> out;
  if (j.is_array())
    for (const auto& m : j) out.push_back(one(m));
  else
    out.push_back(one(j));
  return out;
}

std::string graph_to_json(const DirectedMultigraph& g) {
  ordered edges = ordered::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return ordered{{"inner", g.inner}, {"outer", g.outer()}, {"edges", edges}}.dump();
}

DirectedMultigraph graph_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  DirectedMultigraph g;
  g.inner = j.at("inner").get<int>();
  const auto outer = j.value("outer", std::vector<int>{});
  g.vertex_count = g.inner + static_cast<int>(outer.size());
  for (std::size_t k = 0; k < outer.size(); ++k)
    if (outer[k] != g.inner + static_cast<int>(k))
      throw std::invalid_argument("graph file: outer vertices must follow the inner ones");
  for (const auto& e : j.at("edges")) {
    const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count)
      throw std::invalid_argument("graph file: edge endpoint out of range");
    g.edges.emplace_back(a, b);
  }
  return g;
}

std::string report_to_json(const VerifyReport& report) {
  const VerifyConfig& c = report.config;
  ordered cfg{{"profile", c.profile},
              {"seed", c.seed},
              {"order", c.order},
              {"coeff_samples", c.coeff_samples},
              {"div_samples", c.div_samples},
              {"div_max_rel_stderr", c.div_max_rel_stderr},
              {"weights_max_r0", c.weights_max_r0},
              {"weights_max_r1", c.weights_max_r1},
              {"euler_max_edges", c.euler_max_edges},
              {"chi2_samples", c.chi2_samples},
              {"multiplicity_walks", c.multiplicity_walks},
              {"walk_n", c.walk_n},
              {"walk_batch", c.walk_batch},
              {"walk_n_third", c.walk_n_third},
              {"walk_batch_third", c.walk_batch_third},
              {"visit_convention", c.convention.describe()},
              {"lipatov", lipatov_object(c.lipatov)}};
  ordered checks = ordered::array();
  for (const CheckResult& r : report.checks) {
    ordered values = ordered::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    checks.push_back(ordered{{"id", r.id},
                             {"name", r.name},
                             {"pass", r.pass},
                             {"sigma", r.sigma ? ordered(*r.sigma) : ordered(nullptr)},
                             {"values", values},
                             {"notes", r.notes}});
  }
  ordered root{{"config", cfg}, {"checks", checks}, {"pass", report.all_pass()}};
  return root.dump(2) + "\n";
}

LipatovConstants lipatov_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("lipatov config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("lipatov config: expected a JSON object");
  LipatovConstants c;
  const auto get = [&](const char* key, std::optional<double>& v) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    if (!it->is_number()) throw std::invalid_argument(std::string("lipatov config: ") + key + " is not a number");
    const double x = it->get<double>();
    if (!(x > 0.0)) throw std::invalid_argument(std::string("lipatov config: ") + key + " must be positive");
    v = x;
  };
  get("I1", c.I1);
  get("I4", c.I4);
  get("I6", c.I6);
  get("DL", c.DL);
  get("DT", c.DT);
  c.provenance = "config";
  return c;
}

LipatovConstants load_lipatov(const std::string& path) {
  LipatovConstants c = lipatov_from_json(read_text_file(path));
  c.provenance = path;
  return c;
}

std::string lipatov_to_json(const LipatovConstants& c) { return lipatov_object(c).dump(2) + "\n"; }

std::string coefficient_table_to_json(const CoefficientTable& t) {
  ordered rows = ordered::array();
  for (const OrderCoefficients& r : t.rows)
    rows.push_back(ordered{{"r", r.r},
                           {"gamma0_r1", estimate(r.gamma0_r1)},
                           {"gamma0_r1_alt", estimate(r.gamma0_r1_alt)},
                           {"gC_r0", estimate(r.gC_r0)},
                           {"gC_r0_alt", estimate(r.gC_r0_alt)}});
  return ordered{{"order", t.order}, {"samples", t.samples}, {"seed", t.seed}, {"rows", rows}}.dump(2) + "\n";
}

std::string beta_stats_to_json(const BetaStats& b, const VisitConvention& c) {
  return ordered{{"kind", to_string(b.kind)},
                 {"n", b.n},
                 {"k", b.k},
                 {"batch", b.batch},
                 {"seed", b.seed},
                 {"convention", c.describe()},
                 {"scale", b.scale},
                 {"mean_count", b.raw_mean_count},
                 {"mean", {{"value", b.mean}, {"stderr", b.mean_stderr}}},
                 {"var", {{"value", b.var}, {"stderr", b.var_stderr}}},
                 {"m3", {{"value", b.m3}, {"stderr", b.m3_stderr}}}}
             .dump(2) +
         "\n";
}

}  // namespace mpr
