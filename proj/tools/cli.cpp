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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rsgraph/bounds.hpp"
#include "rsgraph/constructions.hpp"
#include "rsgraph/error.hpp"
#include "rsgraph/expansion_audit.hpp"
#include "rsgraph/report_json.hpp"
#include "rsgraph/rsg_format.hpp"
#include "rsgraph/search.hpp"
#include "rsgraph/verify.hpp"

namespace rsgraph::cli {
namespace {

class NoInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NoInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MatchingDecomposition load(const std::string& path) {
  return parse_rsg(read_file(path));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NoInput("cannot write " + path);
  out << text;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "]";
}

std::vector<std::uint64_t> parse_set(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ParameterError("bad --set element '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void print_verification(const VerificationReport& report, std::ostream& out) {
  const VerificationStats& s = report.stats;
  out << "verdict: " << (report.pass() ? "pass" : "fail") << "\n";
  out << "n=" << s.n << " t=" << s.t << " r=" << s.r << " edges=" << s.num_edges;
  if (report.pass()) out << " c=" << to_string(RSParameters::of(s.n, s.r, s.t).c);
  out << "\n";
  out << "degree: min=" << s.min_degree << " max=" << s.max_degree
      << " max-degree-sum=" << s.max_degree_sum << " (t+1=" << s.t + 1 << ")"
      << " max-intersection=" << s.max_intersection << "\n";
  if (s.isolated_vertices > 0) {
    out << "note: " << s.isolated_vertices
        << " isolated vertices count toward n and c\n";
  }
  for (const Violation& v : report.violations) {
    out << "violation " << v.invariant << " x" << v.count;
    if (v.matching) out << " matching=" << *v.matching;
    if (v.other_matching) out << " other=" << *v.other_matching;
    if (!v.witness.empty()) out << " witness=" << join(v.witness);
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
  }
}

void print_verdict(const BoundVerdict& v, std::ostream& out) {
  out << "regime: " << to_string(v.regime) << "\n";
  out << "verdict: " << (v.feasible ? "feasible" : "infeasible")
      << (v.tight ? " (tight)" : "") << "\n";
  if (v.hard_bound) out << "max r = " << to_string(*v.hard_bound) << "\n";
  if (v.max_t_quarter) out << "max t (r = n/4) = " << *v.max_t_quarter << "\n";
  out << "reason: " << v.reason << "\n";
  for (const Advisory& a : v.advisory) {
    out << "advisory: " << a.statement << " [" << a.source << "]\n";
  }
}

void print_audit(const AuditReport& a, std::ostream& out) {
  out << "verdict: " << (a.pass() ? "pass" : "fail") << "\n";
  out << "n=" << a.n << " r=" << a.r << " t=" << a.t
      << (a.double_covered ? " (bipartite double cover)" : "") << "\n";
  out << "E1=" << a.e1 << " E0=" << a.e0 << " E_over=" << a.e_over << " E_neg=[";
  for (std::size_t j = 0; j < a.e_neg.size(); ++j) out << (j ? "," : "") << a.e_neg[j];
  out << "]\n";
  out << "s=(E1+E0)/n=" << to_string(a.s) << " s'=E1/n=" << to_string(a.s_prime) << "\n";
  out << "F: size=" << a.f_size << " min-degree=" << a.f_min_degree << "\n";
  for (const LayerRow& row : a.layers) {
    out << "layer " << row.distance << ": |N|=" << row.size
        << " C(s,i)=" << row.binomial_bound << (row.asserted ? " asserted" : " info")
        << "\n";
  }
  for (const AuditAssertion& as : a.assertions) {
    out << to_string(as.status) << " " << as.name << ": " << as.detail << "\n";
  }
}

void print_outcome(const SearchOutcome& o, std::ostream& out) {
  out << "verdict: " << to_string(o.verdict) << "\n";
  out << "nodes: " << o.nodes_explored << " time-ms: " << o.wall_time.count() << "\n";
  if (o.shortcut_fired) out << "refuted by the max-r bound\n";
  if (!o.note.empty()) out << "note: " << o.note << "\n";
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::kSat: return kExitOk;
    case Verdict::kUnsat: return kExitNegative;
    case Verdict::kIndeterminate: return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"RS-graph workbench: induced matching decompositions", "rsg"};
  app.require_subcommand(1);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "build an RS-graph family");
  std::string family_name;
  ConstructionSpec spec;
  std::string base_name = "kneser";
  std::string ap_method_name = "greedy-base3";
  std::optional<std::uint64_t> limit;
  std::string set_text;
  std::string input_path;
  std::string output_path;
  construct_cmd->add_option("family", family_name,
                            "kneser | hypercube | hypercube-augmented | "
                            "disjoint-union | double-cover | cayley-ap")
      ->required();
  construct_cmd->add_option("--k", spec.k, "order parameter k");
  construct_cmd->add_option("--copies", spec.copies, "disjoint-union copies");
  construct_cmd->add_option("--modulus", spec.modulus, "cayley-ap modulus N (odd)");
  construct_cmd->add_option("--apset-method", ap_method_name, "greedy-base3 | behrend");
  construct_cmd->add_option("--limit", limit, "AP-free set limit (default (N-1)/3)");
  construct_cmd->add_option("--set", set_text, "explicit difference set, e.g. 1,2,4");
  construct_cmd->add_option("--base", base_name, "base family for wrapper families");
  construct_cmd->add_option("--input", input_path, "base decomposition (.rsg) for wrapper families");
  construct_cmd->add_option("--vertex-budget", spec.vertex_budget, "maximum vertices");
  construct_cmd->add_option("-o,--output", output_path, "write the .rsg document here");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "certify an .rsg decomposition");
  std::string verify_path;
  bool verify_json = false;
  verify_cmd->add_option("file", verify_path)->required();
  verify_cmd->add_flag("--json", verify_json);

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "evaluate the extremal bounds");
  std::uint64_t bound_n = 0;
  std::uint64_t bound_t = 0;
  std::optional<std::uint64_t> bound_r;
  bool bound_json = false;
  bound_cmd->add_option("--n", bound_n)->required();
  bound_cmd->add_option("--t", bound_t)->required();
  bound_cmd->add_option("--r", bound_r);
  bound_cmd->add_flag("--json", bound_json);

  // search
  auto* search_cmd = app.add_subcommand("search", "decide existence of an (r,t)-RS graph");
  std::size_t search_n = 0;
  std::size_t search_r = 0;
  std::size_t search_t = 0;
  std::optional<std::uint64_t> timeout_s;
  std::optional<std::uint64_t> max_nodes;
  bool no_shortcut = false;
  unsigned jobs = 1;
  bool search_json = false;
  std::string search_output;
  search_cmd->add_option("--n", search_n)->required();
  search_cmd->add_option("--r", search_r)->required();
  search_cmd->add_option("--t", search_t)->required();
  search_cmd->add_option("--timeout", timeout_s, "seconds");
  search_cmd->add_option("--nodes", max_nodes, "node budget");
  search_cmd->add_flag("--no-eq1-shortcut,--no-max-r-shortcut", no_shortcut,
                       "do not refute via the max-r bound before searching");
  search_cmd->add_option("--jobs", jobs, "worker threads");
  search_cmd->add_flag("--json", search_json);
  search_cmd->add_option("-o,--output", search_output, "write the certificate here");

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "run the expansion audit");
  std::string audit_path;
  bool audit_json = false;
  audit_cmd->add_option("file", audit_path)->required();
  audit_cmd->add_flag("--json", audit_json);

  // distance
  auto* distance_cmd =
      app.add_subcommand("distance", "characteristic-vector distance certificate");
  std::string distance_path;
  bool distance_json = false;
  distance_cmd->add_option("file", distance_path)->required();
  distance_cmd->add_flag("--json", distance_json);

  // max-t
  auto* maxt_cmd = app.add_subcommand(
      "max-t", "most edge-disjoint induced matchings of size r in a fixed graph");
  std::string maxt_path;
  std::size_t maxt_r = 0;
  bool exact_cover = false;
  bool maxt_json = false;
  maxt_cmd->add_option("file", maxt_path, "graph given as an .rsg document")->required();
  maxt_cmd->add_option("--r", maxt_r)->required();
  maxt_cmd->add_flag("--exact-cover", exact_cover);
  maxt_cmd->add_flag("--json", maxt_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct_cmd->parsed()) {
      auto family = parse_family(family_name);
      if (!family) throw ParameterError("unknown family '" + family_name + "'");
      auto method = parse_ap_method(ap_method_name);
      if (!method) throw ParameterError("unknown AP method '" + ap_method_name + "'");
      auto base = parse_family(base_name);
      if (!base) throw ParameterError("unknown base family '" + base_name + "'");
      spec.family = *family;
      spec.ap_method = *method;
      spec.limit = limit;
      spec.base = *base;
      if (!set_text.empty()) spec.set = parse_set(set_text);

      MatchingDecomposition dec;
      if (!input_path.empty()) {
        MatchingDecomposition inner = load(input_path);
        if (spec.family == Family::kDoubleCover) {
          dec = double_cover(inner);
        } else if (spec.family == Family::kDisjointUnion) {
          dec = disjoint_union(inner, spec.copies);
        } else {
          throw ParameterError("--input applies to disjoint-union and double-cover");
        }
      } else {
        dec = construct(spec);
      }
      std::string doc = emit_rsg(dec);
      if (output_path.empty()) {
        out << doc;
      } else {
        write_file(output_path, doc);
        out << "wrote " << output_path << ": n=" << dec.n() << " t=" << dec.t()
            << " r=" << dec.r() << "\n";
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      VerificationReport report = verify_decomposition(load(verify_path));
      if (verify_json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        print_verification(report, out);
      }
      return report.pass() ? kExitOk : kExitNegative;
    }

    if (bound_cmd->parsed()) {
      if (!bound_r) {
        Rational bound = max_r(bound_n, bound_t);
        if (bound_json) {
          nlohmann::json j{{"kind", "max-r"},
                           {"schema_version", kReportSchemaVersion},
                           {"n", bound_n},
                           {"t", bound_t},
                           {"max_r", to_string(bound)},
                           {"max_r_approx", to_double(bound)}};
          out << j.dump(2) << "\n";
        } else {
          out << "max r = " << to_string(bound) << "\n";
        }
        return kExitOk;
      }
      BoundVerdict verdict = feasibility_verdict(bound_n, *bound_r, bound_t);
      if (bound_json) {
        out << to_json(verdict).dump(2) << "\n";
      } else {
        print_verdict(verdict, out);
      }
      return verdict.feasible ? kExitOk : kExitNegative;
    }

    if (search_cmd->parsed()) {
      SearchOptions options;
      options.budget = SearchBudget::from_environment();
      if (timeout_s) options.budget.max_time = std::chrono::seconds(*timeout_s);
      if (max_nodes) options.budget.max_nodes = *max_nodes;
      options.max_r_shortcut = !no_shortcut;
      options.jobs = jobs;
      SearchOutcome outcome = exists_rs(search_n, search_r, search_t, options);
      if (search_json) {
        out << to_json(outcome).dump(2) << "\n";
      } else {
        print_outcome(outcome, out);
        if (outcome.certificate && search_output.empty()) {
          out << emit_rsg(*outcome.certificate);
        }
      }
      if (outcome.certificate && !search_output.empty()) {
        write_file(search_output, emit_rsg(*outcome.certificate));
      }
      return verdict_exit(outcome.verdict);
    }

    if (audit_cmd->parsed()) {
      MatchingDecomposition dec = load(audit_path);
      VerificationReport check = verify_decomposition(dec);
      if (!check.pass()) {
        err << "audit: input does not verify\n";
        print_verification(check, err);
        return kExitNegative;
      }
      AuditReport report = expansion_audit(dec);
      if (audit_json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        print_audit(report, out);
      }
      return report.pass() ? kExitOk : kExitNegative;
    }

    if (distance_cmd->parsed()) {
      MatchingDecomposition dec = load(distance_path);
      if (!verify_decomposition(dec).pass()) {
        err << "distance: input does not verify\n";
        return kExitNegative;
      }
      DistanceCertificate cert = distance_certificate(dec);
      if (distance_json) {
        out << to_json(cert).dump(2) << "\n";
      } else {
        out << "verdict: " << (cert.pass() ? "pass" : "fail") << "\n"
            << "min distance = " << cert.min_distance << " (2r = " << 2 * cert.r
            << ")\n"
            << "double count: " << cert.lhs << " <= " << cert.pairwise_sum
            << " = " << cert.coordinate_sum << " <= " << cert.rhs << "\n";
      }
      return cert.pass() ? kExitOk : kExitNegative;
    }

    if (maxt_cmd->parsed()) {
      MatchingDecomposition dec = load(maxt_path);
      SearchOptions options;
      options.budget = SearchBudget::from_environment();
      SearchOutcome outcome = max_t_on_graph(dec.graph(), maxt_r, exact_cover, options);
      if (maxt_json) {
        out << to_json(outcome).dump(2) << "\n";
      } else {
        print_outcome(outcome, out);
        out << "t = " << outcome.best_t << "\n";
      }
      return verdict_exit(outcome.verdict);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NoInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::invalid_argument& e) {
    // ParameterError, MalformedInputError
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rsgraph::cli
