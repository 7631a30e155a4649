#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bellbox/bell.hpp"
#include "bellbox/marbles.hpp"
#include "bellbox/operators.hpp"

namespace bellbox::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// A config document that does not match the expected shape (argument-class
/// error, CLI exit code 2, unlike weight-validation failures which are
/// domain errors).
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json qm_report(double alpha, double beta);
nlohmann::json classical_report(double alpha, double beta);
nlohmann::json chsh_report(Model model, const std::array<AnglePair, 4>& configs);
nlohmann::json operator_report(double alpha, double beta, Model model,
                               double independence_tol);
nlohmann::json marbles_report(const MarbleProtocol& protocol,
                              std::uint64_t trials, std::uint64_t seed);
nlohmann::json mixture_report(const MixtureConfig& config);
nlohmann::json discriminate_report(const std::array<double, 4>& probs,
                                   double tol);

/// Reads a mixture config from a JSON array of {"r", "alpha", "beta"}
/// objects; alpha/beta may be radian numbers or angle expressions. Throws
/// SchemaError on shape violations.
MixtureConfig mixture_from_json(const nlohmann::json& doc);

}  // namespace bellbox::cli
