// Copyright 2026 The rsgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsgraph/report_json.hpp"

#include <string>

#include "rsgraph/rsg_format.hpp"

namespace rsgraph {
namespace {

using nlohmann::json;

json header(const char* kind) {
  return json{{"kind", kind}, {"schema_version", kReportSchemaVersion}};
}

void put_rational(json& j, const std::string& key, const Rational& q) {
  j[key] = to_string(q);
  j[key + "_approx"] = to_double(q);
}

}  // namespace

json to_json(const VerificationReport& report) {
  json j = header("verification");
  j["verdict"] = report.pass() ? "pass" : "fail";
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json item{{"invariant", v.invariant},
              {"witness", v.witness},
              {"count", v.count}};
    if (v.matching) item["matching"] = *v.matching;
    if (v.other_matching) item["other_matching"] = *v.other_matching;
    if (!v.detail.empty()) item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  const VerificationStats& s = report.stats;
  j["stats"] = {{"n", s.n},
                {"t", s.t},
                {"r", s.r},
                {"edges", s.num_edges},
                {"degree_histogram", s.degree_histogram},
                {"min_degree", s.min_degree},
                {"max_degree", s.max_degree},
                {"max_degree_sum", s.max_degree_sum},
                {"max_intersection", s.max_intersection},
                {"isolated_vertices", s.isolated_vertices}};
  if (report.pass()) {
    RSParameters p = RSParameters::of(s.n, s.r, s.t);
    put_rational(j["stats"], "c", p.c);
  }
  return j;
}

json to_json(const AuditReport& report) {
  json j = header("expansion-audit");
  j["verdict"] = report.pass() ? "pass" : "fail";
  j["n"] = report.n;
  j["r"] = report.r;
  j["t"] = report.t;
  j["double_covered"] = report.double_covered;
  j["quarter"] = report.quarter;
  j["E1"] = report.e1;
  j["E0"] = report.e0;
  j["E_neg"] = report.e_neg;
  j["E_over"] = report.e_over;
  j["edges"] = report.num_edges;
  j["excess_by_edges"] = report.excess_by_edges;
  j["excess_by_squares"] = report.excess_by_squares;
  put_rational(j, "s", report.s);
  put_rational(j, "s_prime", report.s_prime);
  j["F"] = {{"size", report.f_size},
            {"min_degree", report.f_min_degree},
            {"bfs_pairs_checked", report.bfs_pairs_checked},
            {"bfs_violations", report.bfs_violations}};
  json layers = json::array();
  for (const LayerRow& row : report.layers) {
    layers.push_back({{"distance", row.distance},
                      {"size", row.size},
                      {"binomial_bound", row.binomial_bound},
                      {"asserted", row.asserted},
                      {"sharpened_bound", row.sharpened_bound}});
  }
  j["layer_root"] = report.layer_root;
  j["layers"] = std::move(layers);
  json assertions = json::array();
  for (const AuditAssertion& a : report.assertions) {
    assertions.push_back({{"name", a.name},
                          {"status", std::string(to_string(a.status))},
                          {"detail", a.detail}});
  }
  j["assertions"] = std::move(assertions);
  return j;
}

json to_json(const BoundVerdict& v) {
  json j = header("bound-verdict");
  j["n"] = v.n;
  j["r"] = v.r;
  j["t"] = v.t;
  j["regime"] = std::string(to_string(v.regime));
  j["verdict"] = v.feasible ? "feasible" : "infeasible";
  j["tight"] = v.tight;
  if (v.hard_bound) put_rational(j, "hard_bound", *v.hard_bound);
  if (v.max_t_quarter) j["max_t_quarter"] = *v.max_t_quarter;
  if (v.epsilon) put_rational(j, "epsilon", *v.epsilon);
  if (v.proof_constant_k) put_rational(j, "proof_constant_K", *v.proof_constant_k);
  json advisory = json::array();
  for (const Advisory& a : v.advisory) {
    advisory.push_back({{"statement", a.statement}, {"source", a.source}});
  }
  j["advisory"] = std::move(advisory);
  j["reason"] = v.reason;
  return j;
}

json to_json(const DistanceCertificate& c) {
  json j = header("distance-certificate");
  j["verdict"] = c.pass() ? "pass" : "fail";
  j["n"] = c.n;
  j["r"] = c.r;
  j["t"] = c.t;
  j["min_distance"] = c.min_distance;
  j["min_pair"] = {c.min_pair_i, c.min_pair_j};
  j["distance_ok"] = c.distance_ok;
  j["lhs"] = c.lhs;
  j["pairwise_sum"] = c.pairwise_sum;
  j["coordinate_sum"] = c.coordinate_sum;
  j["rhs"] = c.rhs;
  j["lower_slack"] = c.lower_slack;
  j["upper_slack"] = c.upper_slack;
  j["max_r_binding"] = c.max_r_binding;
  return j;
}

json to_json(const SearchOutcome& o) {
  json j = header("search-outcome");
  j["verdict"] = std::string(to_string(o.verdict));
  j["nodes_explored"] = o.nodes_explored;
  j["wall_time_ms"] = o.wall_time.count();
  j["shortcut_fired"] = o.shortcut_fired;
  j["best_t"] = o.best_t;
  j["note"] = o.note;
  if (o.certificate) {
    j["certificate"] = emit_rsg(*o.certificate);
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

}  // namespace rsgraph
