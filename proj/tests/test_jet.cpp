#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "c0ip/jet.hpp"

using namespace c0ip;

namespace {

Jet4 eval_sample(double x0, double y0) {
  // f(x, y) = sin(x y) + (x^2 + y^2 + 1)^1.3 + atan2(y, x)
  const Jet4 x = Jet4::variable_x(x0);
  const Jet4 y = Jet4::variable_y(y0);
  return sin(x * y) + pow(x * x + y * y + 1.0, 1.3) + atan2(y, x);
}

double sample(double x, double y) {
  return std::sin(x * y) + std::pow(x * x + y * y + 1.0, 1.3) + std::atan2(y, x);
}

double fd4_raw(const std::function<double(double)>& f, double t, double h) {
  return (f(t - 2 * h) - 4 * f(t - h) + 6 * f(t) - 4 * f(t + h) + f(t + 2 * h)) / (h * h * h * h);
}

// Richardson extrapolation of the O(h^2) stencil error.
double fd4(const std::function<double(double)>& f, double t, double h) {
  return (4.0 * fd4_raw(f, t, 0.5 * h) - fd4_raw(f, t, h)) / 3.0;
}

}  // namespace

TEST_CASE("jet multiplication truncates consistently") {
  const Jet4 x = Jet4::variable_x(2.0);
  const Jet4 p = x * x * x;  // (2 + dx)^3
  CHECK(p.value() == doctest::Approx(8.0));
  CHECK(p.coeff(1, 0) == doctest::Approx(12.0));
  CHECK(p.coeff(2, 0) == doctest::Approx(6.0));
  CHECK(p.coeff(3, 0) == doctest::Approx(1.0));
  CHECK(p.coeff(4, 0) == doctest::Approx(0.0));
}

TEST_CASE("polynomial jets carry exact fourth derivatives") {
  const Jet4 x = Jet4::variable_x(1.5);
  const Jet4 y = Jet4::variable_y(-0.5);
  const Jet4 u = x * x * y * y;
  CHECK(u.derivative(2, 2) == doctest::Approx(4.0));
  CHECK(u.bilaplacian() == doctest::Approx(8.0));  // only the mixed term survives
  CHECK(u.derivative(4, 0) == 0.0);
  CHECK(u.gradient().x() == doctest::Approx(2.0 * 1.5 * 0.25));
}

TEST_CASE("gradient and hessian match finite differences") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> unif(0.3, 1.8);
  for (int trial = 0; trial < 25; ++trial) {
    const double x = unif(rng);
    const double y = unif(rng);
    const Jet4 jet = eval_sample(x, y);
    const double h = 1e-5;
    const double fdx = (sample(x + h, y) - sample(x - h, y)) / (2 * h);
    const double fdy = (sample(x, y + h) - sample(x, y - h)) / (2 * h);
    CHECK(jet.gradient().x() == doctest::Approx(fdx).epsilon(1e-8));
    CHECK(jet.gradient().y() == doctest::Approx(fdy).epsilon(1e-8));

    const double hs = 1e-4;
    const double fxx = (sample(x + hs, y) - 2 * sample(x, y) + sample(x - hs, y)) / (hs * hs);
    const double fxy = (sample(x + hs, y + hs) - sample(x + hs, y - hs) -
                        sample(x - hs, y + hs) + sample(x - hs, y - hs)) /
                       (4 * hs * hs);
    CHECK(jet.hessian()(0, 0) == doctest::Approx(fxx).epsilon(1e-5));
    CHECK(jet.hessian()(0, 1) == doctest::Approx(fxy).epsilon(1e-5));
  }
}

TEST_CASE("fourth-order derivatives match nested stencils") {
  const double x = 0.9, y = 0.7;
  const Jet4 jet = eval_sample(x, y);
  const double fxxxx = fd4([&](double t) { return sample(t, y); }, x, 2e-2);
  const double fyyyy = fd4([&](double t) { return sample(x, t); }, y, 2e-2);
  CHECK(jet.derivative(4, 0) == doctest::Approx(fxxxx).epsilon(1e-4));
  CHECK(jet.derivative(0, 4) == doctest::Approx(fyyyy).epsilon(1e-4));

  // Mixed term via second differences of second differences.
  const double h = 1e-2;
  auto dyy = [&](double t) {
    return (sample(t, y + h) - 2 * sample(t, y) + sample(t, y - h)) / (h * h);
  };
  const double fxxyy = (dyy(x + h) - 2 * dyy(x) + dyy(x - h)) / (h * h);
  CHECK(jet.derivative(2, 2) == doctest::Approx(fxxyy).epsilon(1e-3));
  CHECK(jet.bilaplacian() == doctest::Approx(fxxxx + 2 * fxxyy + fyyyy).epsilon(1e-3));
}

TEST_CASE("atan2 jets cover all quadrants and branch splits") {
  std::mt19937 rng(33);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = unif(rng);
    const double y = unif(rng);
    if (std::abs(x) < 0.05 && std::abs(y) < 0.05) continue;
    const Jet4 angle = atan2(Jet4::variable_y(y), Jet4::variable_x(x));
    CHECK(angle.value() == doctest::Approx(std::atan2(y, x)).epsilon(1e-14));
    const double r2 = x * x + y * y;
    CHECK(angle.gradient().x() == doctest::Approx(-y / r2).epsilon(1e-12));
    CHECK(angle.gradient().y() == doctest::Approx(x / r2).epsilon(1e-12));
  }
}

TEST_CASE("harmonic polar powers have vanishing laplacian and bilaplacian") {
  // r^m sin(m phi) is harmonic; check through the full composition chain.
  const double m = 2.5;
  auto field = [&](double x0, double y0) {
    const Jet4 x = Jet4::variable_x(x0);
    const Jet4 y = Jet4::variable_y(y0);
    const Jet4 r2 = x * x + y * y;
    return pow(r2, 0.5 * m) * sin(m * atan2(y, x));
  };
  for (const auto& [x, y] : {std::pair{0.8, 0.3}, {-0.5, 0.9}, {0.4, -1.1}}) {
    const Jet4 u = field(x, y);
    const Eigen::Matrix2d h = u.hessian();
    CHECK(h(0, 0) + h(1, 1) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(u.bilaplacian() == doctest::Approx(0.0).epsilon(1e-7));
  }
}

TEST_CASE("reciprocal and pow agree") {
  const Jet4 x = Jet4::variable_x(0.7);
  const Jet4 y = Jet4::variable_y(0.2);
  const Jet4 g = x * x + y + 1.0;
  const Jet4 a = reciprocal(g);
  const Jet4 b = pow(g, -1.0);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j)
      CHECK(a.coeff(i, j) == doctest::Approx(b.coeff(i, j)).epsilon(1e-12));
}

TEST_CASE("domain errors are reported") {
  CHECK_THROWS_AS(pow(Jet4::constant(-1.0), 0.5), std::domain_error);
  CHECK_THROWS_AS(atan2(Jet4::constant(0.0), Jet4::constant(0.0)), std::domain_error);
  CHECK_THROWS_AS(reciprocal(Jet4::constant(0.0)), std::domain_error);
}
