// Copyright 2026 The cjkit Authors
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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cjkit/choi.hpp"
#include "cjkit/errors.hpp"
#include "cjkit/phase_covariant.hpp"
#include "cjkit/serialization.hpp"
#include "cjkit/symmetry.hpp"
#include "cjkit/tolerances.hpp"
#include "cjkit/transpose.hpp"

namespace {

using nlohmann::json;
using namespace cjkit;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

ReferenceState load_reference(const std::string& path) {
  return make_reference(DensityMatrix(matrix_from_json(read_file(path))));
}

Channel load_channel(const std::string& path) {
  return channel_from_json(read_file(path));
}

ChoiState load_choi(const std::string& path, const ReferenceState& r) {
  ChoiPayload payload = choi_from_json(read_file(path));
  if (payload.d_in != r.dimension())
    throw Error(ErrorCode::dimension_mismatch,
                "reference state dimension does not match the Choi object");
  return ChoiState(r, payload.d_out, std::move(payload.matrix));
}

struct ConvertOptions {
  std::string from;
  std::string to;
  std::string rho0_path;
  std::string input;
  std::string output;
};

int run_convert(const ConvertOptions& opt) {
  ReferenceState r = load_reference(opt.rho0_path);
  if (opt.from == "kraus") {
    Channel c = load_channel(opt.input);
    if (opt.to == "kraus") {
      write_file(opt.output, channel_to_json(c));
      return kExitOk;
    }
    ChoiState s = choi_from_channel(c, r);
    if (!s.margin_ok())
      throw Error(ErrorCode::margin_violation,
                  "channel is not unital: margin residual " +
                      std::to_string(s.margin_residual()));
    write_file(opt.output, choi_to_json(s));
    return kExitOk;
  }
  ChoiState s = load_choi(opt.input, r);
  if (opt.to == "choi") {
    write_file(opt.output, choi_to_json(s));
    return kExitOk;
  }
  write_file(opt.output, channel_to_json(channel_from_choi(s)));
  return kExitOk;
}

struct CheckOptions {
  bool cp = false;
  bool unital = false;
  std::vector<std::string> covariant;  // rep_a, rep_b
  std::string rho0_path;
  std::string modular_path;
  double tol = 0.0;  // 0: use the documented defaults
  std::string input;
};

int run_check(const CheckOptions& opt) {
  Channel c = load_channel(opt.input);
  std::optional<ReferenceState> r;
  if (!opt.rho0_path.empty()) r = load_reference(opt.rho0_path);

  json checks = json::object();
  bool all_pass = true;
  const auto decide = [&](double fallback) {
    return opt.tol > 0.0 ? opt.tol : tol::scaled(fallback);
  };

  if (opt.cp) {
    // complete positivity == PSD Choi matrix; the uniform reference serves
    // when none is given
    ReferenceState ref = r ? *r
                           : make_reference(DensityMatrix(
                                 (1.0 / static_cast<double>(c.d_in())) *
                                 ComplexMatrix::identity(c.d_in())));
    HermitianEig eig = herm_eig(choi_from_channel(c, ref).matrix());
    const double top = std::max(eig.eigenvalues.back(), 0.0);
    const double residual = std::max(0.0, -eig.eigenvalues.front());
    const bool pass = residual <= decide(tol::kChoiPsd) * std::max(1.0, top);
    checks["cp"] = {{"pass", pass}, {"residual", residual}};
    all_pass = all_pass && pass;
  }

  if (opt.unital) {
    UnitalityReport report = c.is_unital();
    const bool pass = report.residual <= decide(tol::kUnital);
    checks["unital"] = {{"pass", pass}, {"residual", report.residual}};
    all_pass = all_pass && pass;
  }

  if (!opt.covariant.empty()) {
    if (!r) throw Error(ErrorCode::invalid_argument, "--covariant requires --rho0");
    Representation rep_a = representation_from_json(read_file(opt.covariant[0]));
    Representation rep_b = representation_from_json(read_file(opt.covariant[1]));
    CovarianceReport report = check_covariance(c, rep_a, rep_b, *r);
    const bool pass = report.residual <= decide(tol::kCovariant);
    checks["covariant"] = {{"pass", pass},
                           {"residual", report.residual},
                           {"elements_tested", report.elements_tested}};
    all_pass = all_pass && pass;
  }

  if (!opt.modular_path.empty()) {
    if (!r) throw Error(ErrorCode::invalid_argument, "--modular requires --rho0");
    ComplexMatrix h = matrix_from_json(read_file(opt.modular_path));
    CovarianceReport report = check_modular_covariance(c, *r, h);
    const bool pass = report.residual <= decide(tol::kCovariant);
    checks["modular"] = {{"pass", pass}, {"residual", report.residual}};
    all_pass = all_pass && pass;
  }

  json report{{"checks", checks}, {"pass", all_pass}};
  std::cout << report.dump(2) << "\n";
  return all_pass ? kExitOk : kExitCheckFailed;
}

struct TwirlOptions {
  std::string rep_a_path;
  std::string rep_b_path;
  std::string rho0_path;
  std::string input;
  std::string output;
};

int run_twirl(const TwirlOptions& opt) {
  ReferenceState r = load_reference(opt.rho0_path);
  Representation rep_a = representation_from_json(read_file(opt.rep_a_path));
  Representation rep_b = representation_from_json(read_file(opt.rep_b_path));
  const std::string text = read_file(opt.input);
  switch (classify_json(text)) {
    case PayloadKind::channel: {
      Channel twirled = twirl(channel_from_json(text), rep_a, rep_b, r);
      write_file(opt.output, channel_to_json(twirled));
      return kExitOk;
    }
    case PayloadKind::choi: {
      ChoiPayload payload = choi_from_json(text);
      ChoiState s(r, payload.d_out, std::move(payload.matrix));
      write_file(opt.output, choi_to_json(twirl(s, rep_a, rep_b)));
      return kExitOk;
    }
    default:
      throw ParseError("twirl input must be a channel or a choi object");
  }
}

struct TransposeOptions {
  std::string rho0_path;
  std::string input;
  std::string output;
};

int run_transpose(const TransposeOptions& opt) {
  ReferenceState r = load_reference(opt.rho0_path);
  TransposePair pair = transpose_channel(load_channel(opt.input), r);
  write_file(opt.output, channel_to_json(pair.transposed));
  return kExitOk;
}

struct PhaseFamilyOptions {
  std::string mode;  // build | extract
  std::string rho0_path;
  std::string input;
  std::string output;
};

int run_phase_family(const PhaseFamilyOptions& opt) {
  if (opt.mode == "build") {
    TauFamily tf = tau_from_json(read_file(opt.input));
    write_file(opt.output, channel_to_json(build_channel(tf)));
    return kExitOk;
  }
  if (opt.rho0_path.empty())
    throw Error(ErrorCode::invalid_argument, "extract requires --rho0");
  ReferenceState r = load_reference(opt.rho0_path);
  TauFamily tf = extract_tau(load_channel(opt.input), r);
  write_file(opt.output, tau_to_json(tf));
  return kExitOk;
}

int run_info(const std::string& input) {
  const std::string text = read_file(input);
  json info;
  switch (classify_json(text)) {
    case PayloadKind::channel: {
      Channel c = channel_from_json(text);
      UnitalityReport unital = c.is_unital();
      info = {{"kind", "channel"},
              {"d_in", c.d_in()},
              {"d_out", c.d_out()},
              {"kraus_count", c.kraus().size()},
              {"unital", unital.unital},
              {"unital_residual", unital.residual},
              {"minimal_kraus", c.is_minimal_kraus()}};
      break;
    }
    case PayloadKind::choi: {
      ChoiPayload payload = choi_from_json(text);
      HermitianEig eig = herm_eig(payload.matrix);
      info = {{"kind", "choi"},
              {"d_in", payload.d_in},
              {"d_out", payload.d_out},
              {"trace", payload.matrix.trace().real()},
              {"min_eigenvalue", eig.eigenvalues.front()},
              {"max_eigenvalue", eig.eigenvalues.back()}};
      break;
    }
    case PayloadKind::matrix: {
      ComplexMatrix m = matrix_from_json(text);
      info = {{"kind", "matrix"},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"frobenius_norm", m.frobenius_norm()}};
      break;
    }
    case PayloadKind::representation: {
      Representation rep = representation_from_json(text);
      const char* kind = rep.kind() == Representation::Kind::finite  ? "finite"
                         : rep.kind() == Representation::Kind::phase ? "phase"
                                                                     : "spin";
      info = {{"kind", "representation"}, {"group", kind}, {"dim", rep.dim()}};
      break;
    }
    case PayloadKind::tau: {
      TauFamily tf = tau_from_json(text);
      info = {{"kind", "tau"}, {"d", tf.dimension()}, {"entries", tf.entries().size()}};
      break;
    }
    default:
      throw ParseError("unrecognized object");
  }
  std::cout << info.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cjkit: channel/Choi conversions, transposes and covariance tools"};
  app.require_subcommand(1);

  ConvertOptions convert_opt;
  CLI::App* convert =
      app.add_subcommand("convert", "Convert between Kraus and Choi representations");
  convert->add_option("--from", convert_opt.from, "Input kind")
      ->required()
      ->check(CLI::IsMember({"kraus", "choi"}));
  convert->add_option("--to", convert_opt.to, "Output kind")
      ->required()
      ->check(CLI::IsMember({"kraus", "choi"}));
  convert->add_option("--rho0", convert_opt.rho0_path, "Reference state JSON file")
      ->required();
  convert->add_option("input", convert_opt.input, "Input file")->required();
  convert->add_option("output", convert_opt.output, "Output file")->required();

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "Validate channel properties");
  check->add_flag("--cp", check_opt.cp, "Complete positivity (PSD Choi)");
  check->add_flag("--unital", check_opt.unital, "Heisenberg unitality");
  check->add_option("--covariant", check_opt.covariant,
                    "Covariance under REP_A REP_B (two JSON files)")
      ->expected(2);
  check->add_option("--rho0", check_opt.rho0_path, "Reference state JSON file");
  check->add_option("--modular", check_opt.modular_path,
                    "Modular covariance against this output Hamiltonian");
  check->add_option("--tol", check_opt.tol, "Decision tolerance override");
  check->add_option("input", check_opt.input, "Channel JSON file")->required();

  TwirlOptions twirl_opt;
  CLI::App* twirl_cmd =
      app.add_subcommand("twirl", "Group-average a channel or Choi state");
  twirl_cmd->add_option("--rep-a", twirl_opt.rep_a_path, "Input-side representation")
      ->required();
  twirl_cmd->add_option("--rep-b", twirl_opt.rep_b_path, "Output-side representation")
      ->required();
  twirl_cmd->add_option("--rho0", twirl_opt.rho0_path, "Reference state JSON file")
      ->required();
  twirl_cmd->add_option("input", twirl_opt.input, "Input file")->required();
  twirl_cmd->add_option("output", twirl_opt.output, "Output file")->required();

  TransposeOptions transpose_opt;
  CLI::App* transpose_cmd =
      app.add_subcommand("transpose", "Reference-state transpose of a channel");
  transpose_cmd->add_option("--rho0", transpose_opt.rho0_path, "Reference state JSON")
      ->required();
  transpose_cmd->add_option("input", transpose_opt.input, "Channel JSON file")
      ->required();
  transpose_cmd->add_option("output", transpose_opt.output, "Output file")->required();

  PhaseFamilyOptions phase_opt;
  CLI::App* phase_cmd =
      app.add_subcommand("phase-family", "Build or extract phase-covariant tau tables");
  phase_cmd->add_option("mode", phase_opt.mode, "build or extract")
      ->required()
      ->check(CLI::IsMember({"build", "extract"}));
  phase_cmd->add_option("--rho0", phase_opt.rho0_path,
                        "Reference state JSON (extract only)");
  phase_cmd->add_option("input", phase_opt.input, "Input file")->required();
  phase_cmd->add_option("output", phase_opt.output, "Output file")->required();

  std::string info_input;
  CLI::App* info_cmd = app.add_subcommand("info", "Summarize a cjkit JSON object");
  info_cmd->add_option("input", info_input, "Input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitParse;
  }

  try {
    if (convert->parsed()) return run_convert(convert_opt);
    if (check->parsed()) return run_check(check_opt);
    if (twirl_cmd->parsed()) return run_twirl(twirl_opt);
    if (transpose_cmd->parsed()) return run_transpose(transpose_opt);
    if (phase_cmd->parsed()) return run_phase_family(phase_opt);
    if (info_cmd->parsed()) return run_info(info_input);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitParse;
}
