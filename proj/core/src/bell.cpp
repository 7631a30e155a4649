#include "bellbox/bell.hpp"

#include <cmath>

#include "bellbox/quantum.hpp"

namespace bellbox {

double correlation(const EventProbabilities& p) {
  return p.w_yy + p.w_nn - p.w_yn - p.w_ny;
}

EventProbabilities classical_probabilities(double alpha, double beta) {
  const double ca2 = std::cos(alpha) * std::cos(alpha);
  const double sa2 = std::sin(alpha) * std::sin(alpha);
  const double cb2 = std::cos(beta) * std::cos(beta);
  const double sb2 = std::sin(beta) * std::sin(beta);
  const double same = 0.5 * (sa2 * cb2 + sb2 * ca2);
  const double diff = 0.5 * (ca2 * cb2 + sb2 * sa2);
  return EventProbabilities{same, diff, diff, same};
}

double bell_lhs(double k_ab, double k_abp, double k_apb, double k_apbp) {
  return std::abs(k_ab - k_abp) + std::abs(k_apb + k_apbp) - 2.0;
}

std::array<AnglePair, 4> battery_from_angles(double alpha, double alpha_prime,
                                             double beta, double beta_prime) {
  return {AnglePair{alpha, beta}, AnglePair{alpha, beta_prime},
          AnglePair{alpha_prime, beta}, AnglePair{alpha_prime, beta_prime}};
}

std::array<AnglePair, 4> standard_battery() {
  constexpr double pi = 3.14159265358979323846;
  return battery_from_angles(0.0, pi / 4.0, pi / 8.0, 3.0 * pi / 8.0);
}

BellBattery run_battery(Model model, const std::array<AnglePair, 4>& battery) {
  BellBattery out;
  out.model = model;
  out.configs = battery;
  for (int i = 0; i < 4; ++i) {
    const EventProbabilities p =
        model == Model::Quantum
            ? quantum_probabilities(battery[i].alpha, battery[i].beta)
            : classical_probabilities(battery[i].alpha, battery[i].beta);
    out.k[i] = correlation(p);
  }
  out.lhs = bell_lhs(out.k[0], out.k[1], out.k[2], out.k[3]);
  out.violated = out.lhs > kViolationThreshold;
  return out;
}

namespace {

bool within(const EventProbabilities& p, const EventProbabilities& tpl,
            double tol) {
  return std::abs(p.w_yy - tpl.w_yy) <= tol &&
         std::abs(p.w_yn - tpl.w_yn) <= tol &&
         std::abs(p.w_ny - tpl.w_ny) <= tol &&
         std::abs(p.w_nn - tpl.w_nn) <= tol;
}

}  // namespace

Verdict discriminate(const EventProbabilities& p, double tol) {
  const EventProbabilities quantum{0.0, 0.5, 0.5, 0.0};
  const EventProbabilities classical{0.25, 0.25, 0.25, 0.25};
  if (within(p, quantum, tol)) return Verdict::Quantum;
  if (within(p, classical, tol)) return Verdict::Classical;
  return Verdict::Inconclusive;
}

}  // namespace bellbox
