#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "angle_expr.hpp"
#include "bellbox/errors.hpp"
#include "commands.hpp"
#include "report.hpp"

namespace {

using namespace bellbox;
using namespace bellbox::cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw CLI::ValidationError("--format", "expected table, json or csv");
}

Model parse_model(const std::string& name) {
  if (name == "qm") return Model::Quantum;
  if (name == "classical") return Model::Classical;
  throw CLI::ValidationError("--model", "expected qm or classical");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::stringstream stream(text);
  while (std::getline(stream, part, ',')) parts.push_back(part);
  if (!text.empty() && text.back() == ',') parts.push_back("");
  return parts;
}

std::array<AnglePair, 4> configs_from_option(const std::string& text) {
  const std::vector<std::string> parts = split_csv(text);
  if (parts.size() != 8) {
    throw AngleParseError("--configs expects 8 comma-separated angles, got " +
                              std::to_string(parts.size()),
                          0);
  }
  std::array<AnglePair, 4> configs;
  for (int i = 0; i < 4; ++i) {
    configs[i].alpha = parse_angle(parts[2 * i]);
    configs[i].beta = parse_angle(parts[2 * i + 1]);
  }
  return configs;
}

std::array<double, 4> probs_from_option(const std::string& text) {
  const std::vector<std::string> parts = split_csv(text);
  if (parts.size() != 4) {
    throw AngleParseError("--probs expects 4 comma-separated probabilities",
                          0);
  }
  std::array<double, 4> probs{};
  for (int i = 0; i < 4; ++i) {
    const std::string& part = parts[i];
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), probs[i]);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw AngleParseError("invalid probability '" + part + "'", 0);
    }
  }
  const double sum = probs[0] + probs[1] + probs[2] + probs[3];
  if (std::abs(sum - 1.0) > 1e-6) {
    throw AngleParseError("probabilities must sum to 1 within 1e-6, got " +
                              std::to_string(sum),
                          0);
  }
  return probs;
}

struct GlobalOptions {
  std::string format = "table";
  double tol = 0.0;
  bool tol_set = false;
};

void emit(const nlohmann::json& report, const GlobalOptions& options) {
  std::cout << render(report, parse_format(options.format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-experiment simulator: closed-form quantum and classical "
               "event probabilities, inequality batteries, quasi-probability "
               "statistical operators, and a seeded marble Monte Carlo"};
  app.name("bellbox");
  app.set_version_flag("--version", std::string("bellbox ") + kToolVersion);
  app.require_subcommand(1);

  GlobalOptions options;
  app.add_option("--format", options.format,
                 "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--tol", options.tol,
                 "Comparison tolerance (discriminate templates, operator "
                 "independence flag)")
      ->each([&options](const std::string&) { options.tol_set = true; });

  std::string alpha_text;
  std::string beta_text = "0";
  std::string model_text = "qm";
  std::string configs_text;
  std::string probs_text;
  std::string config_path;
  std::string mode_text = "exact";
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int box_size = 20;
  bool swap_right = false;

  auto add_angles = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha_text, "Left polarizer angle (radians or "
                    "pi fraction, e.g. pi/8, 3pi/8, 0.3927)")
        ->required();
    cmd->add_option("--beta", beta_text, "Right polarizer angle")->required();
    cmd->fallthrough();
  };

  CLI::App* qm = app.add_subcommand(
      "qm", "Quantum event probabilities and correlation");
  add_angles(qm);
  qm->callback([&] {
    emit(qm_report(parse_angle(alpha_text), parse_angle(beta_text)), options);
  });

  CLI::App* classical = app.add_subcommand(
      "classical", "Classical event probabilities and correlation");
  add_angles(classical);
  classical->callback([&] {
    emit(classical_report(parse_angle(alpha_text), parse_angle(beta_text)),
         options);
  });

  CLI::App* chsh = app.add_subcommand(
      "chsh", "Four-configuration inequality battery");
  chsh->add_option("--model", model_text, "qm or classical")
      ->check(CLI::IsMember({"qm", "classical"}))
      ->required();
  chsh->add_option("--configs", configs_text,
                   "8 comma-separated angles a1,b1,...,a4,b4 "
                   "(default: the standard battery)");
  chsh->fallthrough();
  chsh->callback([&] {
    const auto configs = configs_text.empty() ? standard_battery()
                                              : configs_from_option(configs_text);
    emit(chsh_report(parse_model(model_text), configs), options);
  });

  CLI::App* op = app.add_subcommand(
      "operator", "Statistical operator: weights, states, Gram analysis");
  add_angles(op);
  op->add_option("--model", model_text, "qm or classical")
      ->check(CLI::IsMember({"qm", "classical"}))
      ->capture_default_str();
  op->callback([&] {
    const double tol = options.tol_set ? options.tol : 1e-12;
    emit(operator_report(parse_angle(alpha_text), parse_angle(beta_text),
                         parse_model(model_text), tol),
         options);
  });

  CLI::App* marbles = app.add_subcommand(
      "marbles", "Seeded Monte-Carlo marble experiment");
  add_angles(marbles);
  marbles->add_option("--trials", trials, "Number of single experiments")
      ->required();
  marbles->add_option("--seed", seed, "64-bit RNG seed (required: runs are "
                      "reproducible by construction)")
      ->required();
  marbles->add_option("--mode", mode_text, "exact or quantized")
      ->check(CLI::IsMember({"exact", "quantized"}))
      ->capture_default_str();
  marbles->add_option("--box-size", box_size, "Marbles per box in quantized mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  marbles->add_flag("--swap", swap_right,
                    "Exchange the right-hand boxes (complementary angle)");
  marbles->callback([&] {
    const MarbleProtocol protocol{
        parse_angle(alpha_text), parse_angle(beta_text),
        mode_text == "exact" ? MarbleMode::Exact : MarbleMode::Quantized,
        box_size, swap_right};
    emit(marbles_report(protocol, trials, seed), options);
  });

  CLI::App* mix = app.add_subcommand(
      "mixture", "Incoherent mixture of configurations from a JSON file");
  mix->add_option("--config", config_path,
                  "JSON array of {\"r\", \"alpha\", \"beta\"} objects")
      ->required();
  mix->fallthrough();
  mix->callback([&] {
    std::ifstream input(config_path);
    if (!input) {
      throw SchemaError("cannot open mixture config file: " + config_path);
    }
    nlohmann::json doc;
    input >> doc;
    emit(mixture_report(mixture_from_json(doc)), options);
  });

  CLI::App* disc = app.add_subcommand(
      "discriminate", "Classify measured probabilities at alpha = beta = pi/4");
  disc->add_option("--probs", probs_text,
                   "4 comma-separated probabilities w_yy,w_yn,w_ny,w_nn")
      ->required();
  disc->fallthrough();
  disc->callback([&] {
    const double tol = options.tol_set ? options.tol : 1e-6;
    emit(discriminate_report(probs_from_option(probs_text), tol), options);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AngleParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: mixture config is not valid JSON: " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    // InvalidWeights, ZeroTrials and friends: valid syntax, invalid values.
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
