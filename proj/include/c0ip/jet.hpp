#pragma once

#include <array>

#include <Eigen/Dense>

namespace c0ip {

/// Bivariate Taylor expansion truncated at total order 4. Coefficients are
/// stored against the monomials dx^i dy^j with i + j <= 4, so coeff(i, j)
/// equals the partial derivative d^{i+j} / (dx^i dy^j) divided by i! j!.
class Jet4 {
 public:
  static constexpr int kOrder = 4;
  static constexpr int kSize = 15;

  Jet4() { c_.fill(0.0); }

  static Jet4 constant(double value);
  static Jet4 variable_x(double x0);
  static Jet4 variable_y(double y0);

  static constexpr int index(int i, int j) {
    const int n = i + j;
    return n * (n + 1) / 2 + j;
  }

  double coeff(int i, int j) const { return c_[index(i, j)]; }
  double& coeff(int i, int j) { return c_[index(i, j)]; }

  double value() const { return c_[0]; }
  Eigen::Vector2d gradient() const;
  Eigen::Matrix2d hessian() const;
  /// dxxxx + 2 dxxyy + dyyyy, read off the order-4 coefficients.
  double bilaplacian() const;
  /// Arbitrary partial derivative of order i + j <= 4.
  double derivative(int i, int j) const;

  Jet4 operator-() const;
  Jet4& operator+=(const Jet4& o);
  Jet4& operator-=(const Jet4& o);
  friend Jet4 operator+(Jet4 a, const Jet4& b) { return a += b; }
  friend Jet4 operator-(Jet4 a, const Jet4& b) { return a -= b; }
  friend Jet4 operator*(const Jet4& a, const Jet4& b);
  friend Jet4 operator*(double s, Jet4 a);
  friend Jet4 operator+(Jet4 a, double s);
  friend Jet4 operator+(double s, Jet4 a);
  friend Jet4 operator-(Jet4 a, double s);
  friend Jet4 operator-(double s, const Jet4& a);

  /// Composition with a univariate function given its derivatives
  /// f(g0), f'(g0), ..., f''''(g0) at the inner value.
  friend Jet4 compose(const std::array<double, 5>& f_derivs, const Jet4& g);

 private:
  std::array<double, kSize> c_;
};

Jet4 pow(const Jet4& g, double exponent);  // requires g.value() > 0
Jet4 sin(const Jet4& g);
Jet4 cos(const Jet4& g);
Jet4 reciprocal(const Jet4& g);
Jet4 atan(const Jet4& g);
/// Quadrant-correct angle of (x, y); undefined at the origin.
Jet4 atan2(const Jet4& y, const Jet4& x);

}  // namespace c0ip
