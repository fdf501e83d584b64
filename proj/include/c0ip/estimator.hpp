#pragma once

#include <functional>
#include <vector>

#include "c0ip/assembly.hpp"

namespace c0ip {

struct EstimatorField {
  std::vector<double> eta2;  // per triangle
  double eta_total = 0.0;    // sqrt of the sum
};

/// Residual error indicator for the quadratic discretization. Per triangle:
/// a volume load term |T|^2 (|T|/3) sum_E f(mid(E))^2 with the local mesh
/// size realized as |T|^(1/2); per edge the squared-weight gradient-jump
/// penalty sigma^2/h ||[grad u . nu]||^2; and on interior edges the binormal
/// Hessian jump h ||[nu . D2u . nu]||^2. Piecewise Hessians are constant
/// here, so the bilaplacian volume residual and third-derivative jumps
/// vanish identically.
EstimatorField estimate(const Mesh& mesh, const EdgeTopology& topo, const Geometry& geom,
                        const PenaltyField& sigma, const DofMap& dofs,
                        const Eigen::VectorXd& coefficients,
                        const std::function<double(const Vec2&)>& f);

/// Minimal bulk-criterion subset: smallest set of triangles whose indicators
/// sum to at least theta times the total, ties at the cut resolved toward
/// the smaller triangle index.
std::vector<int> dorfler_mark(const std::vector<double>& eta2, double theta);

}  // namespace c0ip
