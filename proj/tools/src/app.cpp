// Copyright 2026 The ffsi Authors
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

#include "ffsi/cli/app.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ffsi/cli/output.hpp"
#include "ffsi/cli/parse.hpp"
#include "ffsi/cli/suites.hpp"
#include "ffsi/interval.hpp"
#include "ffsi/lfunc.hpp"
#include "ffsi/report.hpp"
#include "ffsi/variety.hpp"

namespace ffsi::cli {
namespace {

struct OutputFlags {
  std::string format;
  std::string path;
};

struct FieldFlags {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
};

void add_output(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--out", o.format, "Machine output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--path", o.path, "Write machine output here, with a manifest alongside");
}

void add_field(CLI::App* cmd, FieldFlags& f) {
  cmd->add_option("--p", f.p, "Characteristic")->required();
  cmd->add_option("--e", f.e, "Extension degree")->capture_default_str();
}

std::string scalar_text(const nlohmann::json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Aligned key/value listing of a report's top-level fields.
std::string human_table(const nlohmann::json& report) {
  std::size_t wide = 0;
  for (const auto& [key, value] : report.items()) wide = std::max(wide, key.size());
  std::ostringstream s;
  for (const auto& [key, value] : report.items())
    s << std::left << std::setw(static_cast<int>(wide)) << key << "  " << scalar_text(value) << "\n";
  return s.str();
}

std::string flat_csv(const nlohmann::json& report) {
  std::vector<std::string> keys;
  std::vector<std::string> values;
  for (const auto& [key, value] : report.items()) {
    keys.push_back(key);
    values.push_back(scalar_text(value));
  }
  return csv_row(keys) + csv_row(values);
}

// Routes the payload: file plus manifest with --path, stdout with --out alone,
// otherwise the human rendering.
void emit(const OutputFlags& o, const std::string& command, const nlohmann::json& params,
          const std::string& machine_json, const std::string& machine_csv, const std::string& human,
          std::ostream& out) {
  const std::string& payload = o.format == "csv" ? machine_csv : machine_json;
  if (!o.path.empty()) {
    atomic_write(o.path, payload);
    nlohmann::json p = params;
    p["out"] = o.format.empty() ? "json" : o.format;
    atomic_write(manifest_path(o.path), make_manifest(command, p).dump(2) + "\n");
    out << human << "wrote " << o.path << "\n";
  } else if (!o.format.empty()) {
    out << payload;
  } else {
    out << human;
  }
}

std::string c_text(const FieldSpec& F, const std::vector<FieldElement>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ';';
    const auto co = F.coeffs(c[i]);
    for (std::size_t j = 0; j < co.size(); ++j) s += (j ? "," : "") + std::to_string(co[j]);
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short-interval statistics over F_q[T]", "ffsi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads, 0 for machine parallelism");

  // sum
  auto* sum = app.add_subcommand("sum", "Worst interval error of an arithmetic function against its bound");
  FieldFlags sum_field;
  int sum_n = 0;
  int sum_m = 0;
  std::string sum_fn;
  std::string sum_mode = "all";
  OutputFlags sum_out;
  add_field(sum, sum_field);
  sum->add_option("--n", sum_n, "Degree")->required();
  sum->add_option("--m", sum_m, "Number of fixed coefficients")->required();
  sum->add_option("--fn", sum_fn, "dk:K, dkr:n1,..,nk, mobius, lambda or fpi:<rep>")->required();
  sum->add_option("--mode", sum_mode, "all or sample:N:SEED")->capture_default_str();
  sum->add_option("--threads", threads, "Worker threads, 0 for machine parallelism");
  add_output(sum, sum_out);

  // points
  auto* points = app.add_subcommand("points", "Point counts of the interval variety and its relatives");
  FieldFlags pt_field;
  int pt_n = 0;
  int pt_m = 0;
  std::string pt_c;
  int pt_ext = 3;
  std::string pt_target = "X";
  OutputFlags pt_out;
  add_field(points, pt_field);
  points->add_option("--n", pt_n, "Degree")->required();
  points->add_option("--m", pt_m, "Number of fixed coefficients")->required();
  points->add_option("--c", pt_c, "Coefficients c_1..c_m; ';' between elements, ',' between coordinates");
  points->add_option("--ext-max", pt_ext, "Count over F_{q^r} for r = 1..R")->capture_default_str();
  points->add_option("--target", pt_target, "X, rcone, quotient:full or quotient:n1,..,nk")->capture_default_str();
  add_output(points, pt_out);

  // moments
  auto* moments = app.add_subcommand("moments", "Shifted moments of L-functions over the even primitive family");
  FieldFlags mo_field;
  int mo_m = 0;
  std::optional<int> mo_r;
  std::string mo_alphas;
  int mo_twist = 0;
  double mo_soft = 16.0;
  OutputFlags mo_out;
  add_field(moments, mo_field);
  moments->add_option("--m", mo_m, "Conductor degree plus one")->required();
  moments->add_option("--r", mo_r, "Number of L-factors; defaults to the number of shifts");
  moments->add_option("--alphas", mo_alphas, "Shifts re,im;re,im;...");
  moments->add_option("--twist", mo_twist, "Twist exponent s")->capture_default_str();
  moments->add_option("--soft-constant", mo_soft, "Soft pass allowance C")->capture_default_str();
  moments->add_option("--threads", threads, "Worker threads, 0 for machine parallelism");
  add_output(moments, mo_out);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  OutputFlags ve_out;
  verify->add_option("--suite", suite, "identities, facfun-oracle, bounds, variety, lfunc or all")
      ->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads, 0 for machine parallelism");
  add_output(verify, ve_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitPass;
    const auto active = app.get_subcommands();
    err << (active.empty() ? app.help() : active.front()->help());
    return kExitUsage;
  }

  try {
    if (*sum) {
      const FieldSpec F = FieldSpec::make(sum_field.p, sum_field.e);
      const ArithFnSpec fn = parse_arith_fn(sum_fn, sum_n);
      const ScanMode mode = ScanMode::parse(sum_mode);
      ScanOptions options;
      if (threads) options.threads = threads;
      options.keep_per_c = sum_out.format == "csv";
      const BoundReport r = scan_worst_case(fn, F, sum_n, sum_m, mode, options);
      const nlohmann::json j = r.to_json();
      const nlohmann::json params{{"p", sum_field.p}, {"e", sum_field.e}, {"n", sum_n},        {"m", sum_m},
                                  {"fn", sum_fn},     {"mode", sum_mode}, {"budget", options.budget.limit}};
      emit(sum_out, "sum", params, j.dump(2) + "\n", r.to_csv(F), human_table(j), out);
      return r.pass ? kExitPass : kExitViolation;
    }
    if (*points) {
      const FieldSpec F = FieldSpec::make(pt_field.p, pt_field.e);
      const ShortIntervalSpec spec{F, pt_n, pt_m, parse_elements(pt_c, F)};
      spec.validate();
      const TargetSpec target = parse_target(pt_target, pt_n);
      const CountReport r = count_report(spec, target.kind, pt_ext, target.blocks);
      const nlohmann::json j = r.to_json();
      std::string csv = csv_row({"r", "count", "reference"});
      for (const auto& row : j.at("counts"))
        csv += csv_row({scalar_text(row.at("r")), scalar_text(row.at("count")), row.contains("reference") ? scalar_text(row.at("reference")) : ""});
      const nlohmann::json params{{"p", pt_field.p},   {"e", pt_field.e},         {"n", pt_n},
                                  {"m", pt_m},         {"c", c_text(F, spec.c)}, {"ext_max", pt_ext},
                                  {"target", pt_target}, {"budget", Budget::standard().limit}};
      emit(pt_out, "points", params, j.dump(2) + "\n", csv, human_table(j), out);
      return kExitPass;
    }
    if (*moments) {
      const FieldSpec F = FieldSpec::make(mo_field.p, mo_field.e);
      std::vector<Complex> alphas = parse_alphas(mo_alphas);
      if (mo_r) {
        if (*mo_r < 0) throw DomainError("--r must be non-negative");
        if (mo_alphas.empty()) alphas.assign(static_cast<std::size_t>(*mo_r), Complex{});
        if (alphas.size() != static_cast<std::size_t>(*mo_r)) throw DomainError("--r disagrees with --alphas");
      }
      const MomentReport r = moment(F, mo_m, alphas, mo_twist, mo_soft, Budget::standard(), threads);
      const nlohmann::json j = r.to_json();
      nlohmann::json shifts = nlohmann::json::array();
      for (auto a : alphas) shifts.push_back({a.real(), a.imag()});
      const nlohmann::json params{{"p", mo_field.p},   {"e", mo_field.e},          {"m", mo_m},
                                  {"r", alphas.size()}, {"alphas", shifts},          {"twist", mo_twist},
                                  {"soft_constant", mo_soft}, {"budget", Budget::standard().limit}};
      emit(mo_out, "moments", params, j.dump(2) + "\n", flat_csv(j), human_table(j), out);
      return r.verdict == MomentVerdict::kFail ? kExitViolation : kExitPass;
    }
    if (*verify) {
      if (!is_suite(suite)) {
        err << "unknown suite '" << suite << "'\n" << verify->help();
        return kExitUsage;
      }
      const auto results = run_suite(suite, SuiteOptions{threads});
      const nlohmann::json params{{"suite", suite}, {"budget", Budget::standard().limit}};
      emit(ve_out, "verify", params, results_json(suite, results).dump(2) + "\n", results_csv(results),
           results_table(results), out);
      return all_pass(results) ? kExitPass : kExitViolation;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "consistency check failed: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ffsi::cli
