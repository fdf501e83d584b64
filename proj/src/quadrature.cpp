#include "c0ip/quadrature.hpp"

#include <cmath>

namespace c0ip {

const std::array<QuadraturePoint, 7>& triangle_rule_degree5() {
  static const std::array<QuadraturePoint, 7> rule = [] {
    const double s = std::sqrt(15.0);
    const double a = (6.0 - s) / 21.0;
    const double b = (6.0 + s) / 21.0;
    const double wa = (155.0 - s) / 1200.0;
    const double wb = (155.0 + s) / 1200.0;
    std::array<QuadraturePoint, 7> r{};
    r[0] = {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 9.0 / 40.0};
    r[1] = {{a, a, 1.0 - 2.0 * a}, wa};
    r[2] = {{a, 1.0 - 2.0 * a, a}, wa};
    r[3] = {{1.0 - 2.0 * a, a, a}, wa};
    r[4] = {{b, b, 1.0 - 2.0 * b}, wb};
    r[5] = {{b, 1.0 - 2.0 * b, b}, wb};
    r[6] = {{1.0 - 2.0 * b, b, b}, wb};
    return r;
  }();
  return rule;
}

const std::array<std::array<double, 2>, 2>& gauss_rule_2() {
  static const std::array<std::array<double, 2>, 2> rule = [] {
    const double off = 0.5 / std::sqrt(3.0);
    return std::array<std::array<double, 2>, 2>{{{0.5 - off, 0.5}, {0.5 + off, 0.5}}};
  }();
  return rule;
}

const std::array<std::array<double, 2>, 3>& gauss_rule_3() {
  static const std::array<std::array<double, 2>, 3> rule = [] {
    const double off = 0.5 * std::sqrt(3.0 / 5.0);
    return std::array<std::array<double, 2>, 3>{
        {{0.5 - off, 5.0 / 18.0}, {0.5, 8.0 / 18.0}, {0.5 + off, 5.0 / 18.0}}};
  }();
  return rule;
}

}  // namespace c0ip
