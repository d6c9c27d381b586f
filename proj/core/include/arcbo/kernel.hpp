#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "arcbo/space.hpp"

namespace arcbo {

/// Distance-based base covariance families. Each maps a Euclidean distance
/// delta to a covariance value scaled by a single global amplitude.
enum class BaseKind { ExpQuadratic, RationalQuadratic, Matern52 };

std::string to_string(BaseKind kind);
BaseKind base_kind_from_string(const std::string& name);

/// Arc kernel hyperparameters. One (omega, rho) pair per input coordinate,
/// depth coordinate included at index 0. omega_i sets the per-coordinate
/// length scale (the radius of the embedded semicircle); rho_i in [0,1]
/// controls how much differing in a coordinate's value can contribute to the
/// distance relative to differing in its relevance. rho_i = 0 is allowed and
/// collapses all relevant values of coordinate i to distance zero.
struct ArcParams {
  Eigen::VectorXd omega;
  Eigen::VectorXd rho;
  double amplitude = 1.0;
  BaseKind base = BaseKind::Matern52;
  double alpha = 1.0;  // RationalQuadratic exponent; ignored otherwise

  int dims() const { return static_cast<int>(omega.size()); }

  /// Throws std::invalid_argument if any invariant is violated
  /// (omega_i > 0, rho_i in [0,1], amplitude > 0, alpha > 0 for RQ).
  void validate() const;

  /// {"omega":[...], "rho":[...], "amplitude":..., "base":"matern52"|
  /// "expquad"|"rq", "alpha":...}. alpha is emitted only for "rq".
  static ArcParams from_json(const std::string& text);
  std::string to_json() const;
};

/// Embeds a point into R^(2M), M = space.num_coords(). Coordinate i occupies
/// entries (2i, 2i+1): [0,0] when irrelevant, omega_i * [sin a, cos a] with
/// a = pi * rho_i * normalized value otherwise. The norm of each pair is
/// therefore 0 or omega_i.
Eigen::VectorXd embed(const ParameterSpace& space, const ArcParams& params,
                      const Point& point);

/// Distance between two points in the embedded space, computed per
/// coordinate in closed form:
///   0                                   both irrelevant
///   omega_i                             relevance differs
///   2*omega_i*|sin(pi*rho_i*dx/2)|      both relevant, dx = normalized gap
/// The both-relevant case equals omega_i*sqrt(2)*sqrt(1-cos(pi*rho_i*dx));
/// the half-angle form avoids cancellation for small gaps.
double arc_distance(const ParameterSpace& space, const ArcParams& params,
                    const Point& a, const Point& b);

/// Base covariance as a function of distance:
///   ExpQuadratic       amp * exp(-delta^2 / 2)
///   RationalQuadratic  amp * (1 + delta^2/(2*alpha))^(-alpha)
///   Matern52           amp * (1 + sqrt(5)*delta + 5*delta^2/3)
///                          * exp(-sqrt(5)*delta)
/// Throws std::invalid_argument for negative delta.
double base_kappa(BaseKind kind, double delta, double amplitude,
                  double alpha = 1.0);

/// base_kappa applied to arc_distance. Symmetric in its point arguments.
double arc_kernel(const ParameterSpace& space, const ArcParams& params,
                  const Point& a, const Point& b);

/// Baseline kernel that treats every coordinate as relevant: base_kappa
/// applied to sqrt(sum_i omega_i^2 (v_i - w_i)^2) over normalized
/// coordinate vectors. rho entries of `params` are ignored.
double plain_kernel(const ArcParams& params, const Eigen::VectorXd& v,
                    const Eigen::VectorXd& w);

/// n x n symmetric Gram matrix of arc_kernel over `points`. Empty input
/// yields a 0 x 0 matrix.
Eigen::MatrixXd gram(const ParameterSpace& space, const ArcParams& params,
                     const std::vector<Point>& points);

/// Gram matrix of plain_kernel over normalized coordinate vectors.
Eigen::MatrixXd gram_plain(const ArcParams& params,
                           const std::vector<Eigen::VectorXd>& vectors);

}  // namespace arcbo
