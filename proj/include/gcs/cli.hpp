#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcs/decomp.hpp"
#include "gcs/fixtures.hpp"
#include "gcs/henneberg.hpp"
#include "gcs/io.hpp"
#include "gcs/plan.hpp"
#include "gcs/plan_exec.hpp"
#include "gcs/render.hpp"
#include "gcs/rigidity.hpp"

namespace gcs::cli {

// Exit codes: success, input or system error, well-formed negative verdict.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kVerdict = 2;

inline double default_tolerance() {
  if (const char* env = std::getenv("GCS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-9;
}

namespace detail {

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot read '" + path + "'", path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline json failure(const Error& e) {
  json j{{"status", "failed"}, {"reason", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (!e.subject().empty()) j["entity"] = e.subject();
  return j;
}

inline std::vector<int> parse_branches(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadValue, "bad branch list '" + text + "'");
    }
  }
  return out;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. JSON, DOT or
/// SVG goes to `out`; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric constraint graph toolkit"};
  app.require_subcommand(1);

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "structural diagnosis (well / under / over constrained)");
  analyze->add_option("path", path, "graph file, or - for stdin")->required();

  auto* classify_cmd = app.add_subcommand("classify", "bottom-up decomposition and reducibility class");
  classify_cmd->add_option("path", path, "graph file, or - for stdin")->required();

  std::string branch_text;
  bool all = false, emit_plan = false;
  int limit = 16;
  std::optional<double> tol;
  auto* solve = app.add_subcommand("solve", "ruler-and-compass construction of a fully reducible graph");
  solve->add_option("path", path, "graph file, or - for stdin")->required();
  solve->add_option("--branch", branch_text, "comma separated branch choices");
  solve->add_flag("--all", all, "enumerate solution branches");
  solve->add_option("--limit", limit, "maximum number of solutions with --all");
  solve->add_option("--tol", tol, "residual tolerance");
  solve->add_flag("--emit-plan", emit_plan, "include the construction plan");

  int n = 0;
  std::uint64_t seed = 0;
  double p_h2 = 0.5;
  auto* generate = app.add_subcommand("generate", "random minimally rigid graph by Henneberg steps");
  generate->add_option("--n", n, "number of points")->required();
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--p-h2", p_h2, "probability of an H2 step");

  std::string name;
  auto* fixture_cmd = app.add_subcommand("fixture", "print a named fixture graph");
  fixture_cmd->add_option("name", name, "fixture name")->required();

  std::string format = "dot", solution_path;
  auto* render = app.add_subcommand("render", "DOT view of a graph or SVG drawing of a solution");
  render->add_option("path", path, "graph file, or - for stdin")->required();
  render->add_option("--format", format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}));
  render->add_option("--solution", solution_path, "solution file (required for svg)");
  render->add_option("--tol", tol, "residual tolerance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (analyze->parsed()) {
      const ConstraintGraph g = parse(detail::read_source(path, in));
      const Diagnosis d = diagnose_pebble(g);
      out << to_json(d).dump() << "\n";
      return d.verdict == Verdict::Well ? kOk : kVerdict;
    }

    if (classify_cmd->parsed()) {
      const ConstraintGraph g = parse(detail::read_source(path, in));
      const DecompositionResult r = decompose(g);
      out << to_json(r).dump() << "\n";
      return r.cls.kind == Reducibility::Fully ? kOk : kVerdict;
    }

    if (generate->parsed()) {
      out << serialize(random_laman(n, seed, p_h2)) << "\n";
      return kOk;
    }

    if (fixture_cmd->parsed()) {
      out << serialize(fixture(name)) << "\n";
      return kOk;
    }

    if (solve->parsed()) {
      const ConstraintGraph g = parse(detail::read_source(path, in));
      ExecOptions opts;
      opts.tol = tol.value_or(default_tolerance());
      const BranchSelector branches = detail::parse_branches(branch_text);
      if (limit < 1) throw Error(ErrorCode::BadValue, "--limit must be at least 1");

      const Diagnosis d = diagnose_pebble(g);
      if (d.verdict != Verdict::Well) {
        json j = to_json(d);
        j["status"] = "failed";
        j["reason"] = d.verdict == Verdict::Under ? "under_constrained" : "over_constrained";
        out << j.dump() << "\n";
        return kVerdict;
      }

      std::optional<Plan> plan;
      try {
        plan = extract_plan(decompose(g), g);
        std::vector<Solution> solutions;
        if (all) solutions = enumerate_solutions(*plan, g, limit, opts);
        else solutions.push_back(execute(*plan, g, branches, opts));
        json list = json::array();
        for (const auto& s : solutions) {
          json j = to_json(s);
          j["max_residual"] = verify(g, s, opts.tol).max_abs;
          list.push_back(std::move(j));
        }
        json doc{{"status", "ok"}, {"solutions", std::move(list)}};
        if (emit_plan) doc["plan"] = to_json(*plan);
        out << doc.dump() << "\n";
        return kOk;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BadBranch) throw;
        json j = detail::failure(e);
        if (emit_plan && plan) j["plan"] = to_json(*plan);
        out << j.dump() << "\n";
        err << "solve: " << e.what() << "\n";
        return kVerdict;
      }
    }

    if (render->parsed()) {
      const ConstraintGraph g = parse(detail::read_source(path, in));
      if (format == "dot") {
        out << render_dot(g);
        return kOk;
      }
      if (solution_path.empty()) throw Error(ErrorCode::BadValue, "svg output needs --solution");
      json doc = json::parse(detail::read_source(solution_path, in), nullptr, false);
      if (doc.is_discarded()) throw Error(ErrorCode::SyntaxError, "solution file is not valid JSON");
      if (doc.contains("solutions")) {
        if (!doc["solutions"].is_array() || doc["solutions"].empty())
          throw Error(ErrorCode::SyntaxError, "solution file holds no solutions");
        doc = doc["solutions"][0];
      }
      const Solution s = solution_from_json(doc);
      const ResidualReport rep = verify(g, s, tol.value_or(default_tolerance()));
      if (!rep.pass) {
        out << json{{"status", "failed"}, {"reason", "verify_failed"}, {"max_residual", rep.max_abs}}.dump() << "\n";
        err << "render: solution does not satisfy the constraints\n";
        return kVerdict;
      }
      out << render_svg(g, s);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace gcs::cli
