#include "c0ip/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace c0ip {

namespace {

// (i, j) exponent pair for each flat slot, matching Jet4::index.
constexpr std::array<std::array<int, 2>, Jet4::kSize> kExponents = {{
    {0, 0},
    {1, 0}, {0, 1},
    {2, 0}, {1, 1}, {0, 2},
    {3, 0}, {2, 1}, {1, 2}, {0, 3},
    {4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4},
}};

double factorial(int n) {
  static constexpr std::array<double, 5> table{1.0, 1.0, 2.0, 6.0, 24.0};
  return table[n];
}

}  // namespace

Jet4 Jet4::constant(double value) {
  Jet4 jet;
  jet.c_[0] = value;
  return jet;
}

Jet4 Jet4::variable_x(double x0) {
  Jet4 jet;
  jet.c_[0] = x0;
  jet.coeff(1, 0) = 1.0;
  return jet;
}

Jet4 Jet4::variable_y(double y0) {
  Jet4 jet;
  jet.c_[0] = y0;
  jet.coeff(0, 1) = 1.0;
  return jet;
}

Eigen::Vector2d Jet4::gradient() const { return {coeff(1, 0), coeff(0, 1)}; }

Eigen::Matrix2d Jet4::hessian() const {
  Eigen::Matrix2d h;
  h << 2.0 * coeff(2, 0), coeff(1, 1), coeff(1, 1), 2.0 * coeff(0, 2);
  return h;
}

double Jet4::bilaplacian() const {
  return 24.0 * coeff(4, 0) + 8.0 * coeff(2, 2) + 24.0 * coeff(0, 4);
}

double Jet4::derivative(int i, int j) const {
  return coeff(i, j) * factorial(i) * factorial(j);
}

Jet4 Jet4::operator-() const {
  Jet4 out;
  for (int k = 0; k < kSize; ++k) out.c_[k] = -c_[k];
  return out;
}

Jet4& Jet4::operator+=(const Jet4& o) {
  for (int k = 0; k < kSize; ++k) c_[k] += o.c_[k];
  return *this;
}

Jet4& Jet4::operator-=(const Jet4& o) {
  for (int k = 0; k < kSize; ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet4 operator*(const Jet4& a, const Jet4& b) {
  Jet4 out;
  for (int ka = 0; ka < Jet4::kSize; ++ka) {
    if (a.c_[ka] == 0.0) continue;
    const auto [ia, ja] = kExponents[ka];
    for (int kb = 0; kb < Jet4::kSize; ++kb) {
      if (b.c_[kb] == 0.0) continue;
      const auto [ib, jb] = kExponents[kb];
      const int i = ia + ib;
      const int j = ja + jb;
      if (i + j > Jet4::kOrder) continue;
      out.coeff(i, j) += a.c_[ka] * b.c_[kb];
    }
  }
  return out;
}

Jet4 operator*(double s, Jet4 a) {
  for (int k = 0; k < Jet4::kSize; ++k) a.c_[k] *= s;
  return a;
}

Jet4 operator+(Jet4 a, double s) {
  a.c_[0] += s;
  return a;
}

Jet4 operator+(double s, Jet4 a) {
  a.c_[0] += s;
  return a;
}

Jet4 operator-(Jet4 a, double s) {
  a.c_[0] -= s;
  return a;
}

Jet4 operator-(double s, const Jet4& a) {
  Jet4 out = -a;
  out.c_[0] += s;
  return out;
}

Jet4 compose(const std::array<double, 5>& f_derivs, const Jet4& g) {
  Jet4 h = g;
  h.c_[0] = 0.0;  // centered increment; powers of h terminate at order 4
  Jet4 out = Jet4::constant(f_derivs[0]);
  Jet4 h_power = Jet4::constant(1.0);
  for (int k = 1; k <= Jet4::kOrder; ++k) {
    h_power = h_power * h;
    out += (f_derivs[k] / factorial(k)) * h_power;
  }
  return out;
}

Jet4 pow(const Jet4& g, double exponent) {
  const double g0 = g.value();
  if (!(g0 > 0.0)) throw std::domain_error("jet pow requires a positive base value");
  std::array<double, 5> d;
  double coef = 1.0;
  for (int k = 0; k <= 4; ++k) {
    d[k] = coef * std::pow(g0, exponent - k);
    coef *= (exponent - k);
  }
  return compose(d, g);
}

Jet4 sin(const Jet4& g) {
  const double s = std::sin(g.value());
  const double c = std::cos(g.value());
  return compose({s, c, -s, -c, s}, g);
}

Jet4 cos(const Jet4& g) {
  const double s = std::sin(g.value());
  const double c = std::cos(g.value());
  return compose({c, -s, -c, s, c}, g);
}

Jet4 reciprocal(const Jet4& g) {
  const double g0 = g.value();
  if (g0 == 0.0) throw std::domain_error("jet reciprocal at zero");
  const double inv = 1.0 / g0;
  return compose({inv, -inv * inv, 2.0 * inv * inv * inv, -6.0 * inv * inv * inv * inv,
                  24.0 * inv * inv * inv * inv * inv},
                 g);
}

Jet4 atan(const Jet4& g) {
  const double t = g.value();
  const double q = 1.0 / (1.0 + t * t);
  const double q2 = q * q;
  const double q3 = q2 * q;
  const double q4 = q3 * q;
  return compose({std::atan(t), q, -2.0 * t * q2, (6.0 * t * t - 2.0) * q3,
                  (24.0 * t - 24.0 * t * t * t) * q4},
                 g);
}

Jet4 atan2(const Jet4& y, const Jet4& x) {
  const double x0 = x.value();
  const double y0 = y.value();
  if (x0 == 0.0 && y0 == 0.0) throw std::domain_error("jet atan2 at the origin");
  if (std::abs(x0) >= std::abs(y0)) {
    Jet4 angle = atan(y * reciprocal(x));
    angle.coeff(0, 0) += std::atan2(y0, x0) - std::atan(y0 / x0);
    return angle;
  }
  Jet4 angle = -atan(x * reciprocal(y));
  angle.coeff(0, 0) += std::atan2(y0, x0) + std::atan(x0 / y0);
  return angle;
}

}  // namespace c0ip
