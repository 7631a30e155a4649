#include "commands.hpp"

#include <cmath>

#include "angle_expr.hpp"
#include "bellbox/quantum.hpp"

namespace bellbox::cli {

namespace {

void put_probabilities(nlohmann::json& report, const EventProbabilities& p) {
  report["w_yy"] = p.w_yy;
  report["w_yn"] = p.w_yn;
  report["w_ny"] = p.w_ny;
  report["w_nn"] = p.w_nn;
}

nlohmann::json per_event(double yy, double yn, double ny, double nn) {
  return {{"yy", yy}, {"yn", yn}, {"ny", ny}, {"nn", nn}};
}

nlohmann::json probability_report(const char* command, Model model,
                                  double alpha, double beta) {
  const EventProbabilities p = model == Model::Quantum
                                   ? quantum_probabilities(alpha, beta)
                                   : classical_probabilities(alpha, beta);
  nlohmann::json report;
  report["command"] = command;
  report["version"] = kToolVersion;
  report["model"] = to_string(model);
  report["alpha_rad"] = alpha;
  report["beta_rad"] = beta;
  put_probabilities(report, p);
  report["correlation"] = correlation(p);
  return report;
}

}  // namespace

nlohmann::json qm_report(double alpha, double beta) {
  return probability_report("qm", Model::Quantum, alpha, beta);
}

nlohmann::json classical_report(double alpha, double beta) {
  return probability_report("classical", Model::Classical, alpha, beta);
}

nlohmann::json chsh_report(Model model,
                           const std::array<AnglePair, 4>& configs) {
  const BellBattery battery = run_battery(model, configs);
  nlohmann::json report;
  report["command"] = "chsh";
  report["version"] = kToolVersion;
  report["model"] = to_string(model);
  nlohmann::json config_list = nlohmann::json::array();
  for (const AnglePair& config : battery.configs) {
    config_list.push_back(
        {{"alpha_rad", config.alpha}, {"beta_rad", config.beta}});
  }
  report["configs"] = config_list;
  report["k"] = battery.k;
  report["lhs"] = battery.lhs;
  report["violated"] = battery.violated;
  return report;
}

nlohmann::json operator_report(double alpha, double beta, Model model,
                               double independence_tol) {
  const WeightedStateOperator op = model == Model::Quantum
                                       ? qbb_operator(alpha, beta)
                                       : classical_operator(alpha, beta);
  nlohmann::json report;
  report["command"] = "operator";
  report["version"] = kToolVersion;
  report["model"] = to_string(model);
  report["alpha_rad"] = alpha;
  report["beta_rad"] = beta;

  nlohmann::json weights = nlohmann::json::array();
  nlohmann::json states;
  int index = 0;
  for (const auto& term : op.terms) {
    weights.push_back(term.weight);
    const std::string name = "phi" + std::to_string(++index);
    states[name] = {term.state.c11, term.state.c12, term.state.c21,
                    term.state.c22};
  }
  report["weights"] = weights;
  report["tilde_states"] = states;
  report["gram_det"] = gram_determinant(alpha, beta);
  report["linearly_independent"] =
      linearly_independent(alpha, beta, independence_tol);

  const EventProbabilities p = operator_probabilities(op);
  put_probabilities(report, p);
  report["correlation"] = correlation(p);
  return report;
}

nlohmann::json marbles_report(const MarbleProtocol& protocol,
                              std::uint64_t trials, std::uint64_t seed) {
  const EstimationReport estimated = estimate(protocol, trials, seed);
  const EventProbabilities exact = exact_chain_probabilities(protocol);

  nlohmann::json report;
  report["command"] = "marbles";
  report["version"] = kToolVersion;
  report["alpha_rad"] = protocol.alpha;
  report["beta_rad"] = protocol.beta;
  report["mode"] = to_string(protocol.mode);
  report["box_size"] = protocol.box_size;
  report["swap_right"] = protocol.swap_right;
  report["trials"] = trials;
  report["seed"] = seed;
  report["counts"] = {{"yy", estimated.counts[0]},
                      {"yn", estimated.counts[1]},
                      {"ny", estimated.counts[2]},
                      {"nn", estimated.counts[3]}};
  put_probabilities(report, estimated.probabilities);
  report["stderr"] = per_event(estimated.std_error[0], estimated.std_error[1],
                               estimated.std_error[2], estimated.std_error[3]);
  report["correlation"] = estimated.correlation;
  report["exact"] = {{"w_yy", exact.w_yy},
                     {"w_yn", exact.w_yn},
                     {"w_ny", exact.w_ny},
                     {"w_nn", exact.w_nn}};

  const double n = static_cast<double>(trials);
  std::array<double, 4> z{};
  for (int e = 0; e < 4; ++e) {
    const Event event = kAllEvents[e];
    const double se = std::sqrt(exact[event] * (1.0 - exact[event]) / n);
    const double gap = estimated.probabilities[event] - exact[event];
    z[e] = se > 0.0 ? gap / se : 0.0;
  }
  report["z_scores"] = per_event(z[0], z[1], z[2], z[3]);
  return report;
}

nlohmann::json mixture_report(const MixtureConfig& config) {
  const WeightedStateOperator op = mixture(config);
  nlohmann::json report;
  report["command"] = "mixture";
  report["version"] = kToolVersion;
  nlohmann::json components = nlohmann::json::array();
  for (const auto& entry : config.entries) {
    components.push_back({{"r", entry.r},
                          {"alpha_rad", entry.alpha},
                          {"beta_rad", entry.beta}});
  }
  report["components"] = components;
  const EventProbabilities p = operator_probabilities(op);
  put_probabilities(report, p);
  report["correlation"] = correlation(p);
  return report;
}

nlohmann::json discriminate_report(const std::array<double, 4>& probs,
                                   double tol) {
  const EventProbabilities p{probs[0], probs[1], probs[2], probs[3]};
  nlohmann::json report;
  report["command"] = "discriminate";
  report["version"] = kToolVersion;
  report["probs"] = probs;
  report["tol"] = tol;
  report["verdict"] = to_string(discriminate(p, tol));
  return report;
}

namespace {

double angle_from_json(const nlohmann::json& value, const char* key) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    try {
      return parse_angle(value.get<std::string>());
    } catch (const AngleParseError& e) {
      throw SchemaError(std::string("mixture config: bad ") + key + ": " +
                        e.what());
    }
  }
  throw SchemaError(std::string("mixture config: '") + key +
                    "' must be a number or an angle expression");
}

}  // namespace

MixtureConfig mixture_from_json(const nlohmann::json& doc) {
  if (!doc.is_array() || doc.empty()) {
    throw SchemaError("mixture config: expected a non-empty JSON array");
  }
  MixtureConfig config;
  config.entries.reserve(doc.size());
  for (const auto& item : doc) {
    if (!item.is_object()) {
      throw SchemaError("mixture config: entries must be objects");
    }
    for (const char* key : {"r", "alpha", "beta"}) {
      if (!item.contains(key)) {
        throw SchemaError(std::string("mixture config: missing key '") + key +
                          "'");
      }
    }
    if (!item["r"].is_number()) {
      throw SchemaError("mixture config: 'r' must be a number");
    }
    config.entries.push_back({item["r"].get<double>(),
                              angle_from_json(item["alpha"], "alpha"),
                              angle_from_json(item["beta"], "beta")});
  }
  return config;
}

}  // namespace bellbox::cli
