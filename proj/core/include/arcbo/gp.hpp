#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arcbo/kernel.hpp"
#include "arcbo/space.hpp"

namespace arcbo {

/// Thrown when the kernel matrix cannot be factorized even at the largest
/// jitter level.
struct SingularKernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Output-space transform applied to raw targets before conditioning.
enum class Warp { Identity, Log };

Eigen::VectorXd warp_targets(Warp warp, const Eigen::VectorXd& raw);

struct PredictResult {
  double mean = 0.0;
  double variance = 0.0;
};

/// Exact Gaussian-process regressor over an arbitrary input type. The kernel
/// is supplied as a callable so the same machinery serves conditional points
/// (arc kernel) and plain coordinate vectors (baselines).
///
/// The factorization is L L^T = K + (noise + jitter) I with jitter escalated
/// through {0, 1e-10, 1e-8, 1e-6, 1e-4} * trace(K)/n until the Cholesky
/// succeeds. Predictions and the marginal likelihood are reported in warped
/// space; with Warp::Log the likelihood includes the -sum(log y) change of
/// variables so values are comparable across warps.
template <typename Input>
class GpModel {
 public:
  using KernelFn = std::function<double(const Input&, const Input&)>;

  static GpModel fit(KernelFn kernel, std::vector<Input> inputs,
                     const Eigen::VectorXd& raw_targets, double noise_var,
                     std::optional<double> mean_const, Warp warp) {
    const Eigen::Index n = static_cast<Eigen::Index>(inputs.size());
    if (n < 1) {
      throw std::invalid_argument("need at least one observation");
    }
    if (raw_targets.size() != n) {
      throw std::invalid_argument("targets/inputs length mismatch");
    }
    if (!(noise_var > 0.0)) {
      throw std::invalid_argument("noise variance must be > 0");
    }
    if (!raw_targets.allFinite()) {
      throw std::invalid_argument("targets must be finite");
    }

    GpModel m;
    m.kernel_ = std::move(kernel);
    m.inputs_ = std::move(inputs);
    m.warp_ = warp;
    m.noise_var_ = noise_var;
    m.targets_ = warp_targets(warp, raw_targets);
    m.mean_const_ = mean_const.value_or(m.targets_.mean());
    m.log_jacobian_ =
        warp == Warp::Log ? -raw_targets.array().log().sum() : 0.0;

    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        const double v = m.kernel_(m.inputs_[static_cast<size_t>(i)],
                                   m.inputs_[static_cast<size_t>(j)]);
        k(i, j) = v;
        k(j, i) = v;
      }
    }

    const double scale = k.trace() / static_cast<double>(n);
    bool ok = false;
    for (double factor : kJitterLadder) {
      m.jitter_ = factor * scale;
      Eigen::MatrixXd a = k;
      a.diagonal().array() += noise_var + m.jitter_;
      Eigen::LLT<Eigen::MatrixXd> llt(a);
      if (llt.info() == Eigen::Success) {
        m.chol_ = llt.matrixL();
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw SingularKernelError(
          "kernel matrix is singular at the maximum jitter level");
    }

    const Eigen::VectorXd centered =
        m.targets_.array() - m.mean_const_;
    m.alpha_ = m.chol_.template triangularView<Eigen::Lower>().solve(centered);
    m.chol_.template triangularView<Eigen::Lower>().transpose().solveInPlace(
        m.alpha_);
    return m;
  }

  PredictResult predict(const Input& x) const {
    const Eigen::Index n = static_cast<Eigen::Index>(inputs_.size());
    Eigen::VectorXd kstar(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      kstar[i] = kernel_(inputs_[static_cast<size_t>(i)], x);
    }
    PredictResult r;
    r.mean = mean_const_ + kstar.dot(alpha_);
    const Eigen::VectorXd v =
        chol_.template triangularView<Eigen::Lower>().solve(kstar);
    r.variance = std::max(0.0, kernel_(x, x) - v.squaredNorm());
    return r;
  }

  double log_marginal_likelihood() const {
    const double n = static_cast<double>(inputs_.size());
    const Eigen::VectorXd centered = targets_.array() - mean_const_;
    return -0.5 * centered.dot(alpha_) -
           chol_.diagonal().array().log().sum() -
           0.5 * n * std::log(2.0 * std::numbers::pi) + log_jacobian_;
  }

  const std::vector<Input>& inputs() const { return inputs_; }
  const Eigen::VectorXd& targets() const { return targets_; }
  double mean_const() const { return mean_const_; }
  double noise_var() const { return noise_var_; }
  double jitter() const { return jitter_; }
  Warp warp() const { return warp_; }
  const Eigen::MatrixXd& chol() const { return chol_; }

  static constexpr std::array<double, 5> kJitterLadder = {0.0, 1e-10, 1e-8,
                                                          1e-6, 1e-4};

 private:
  GpModel() = default;

  KernelFn kernel_;
  std::vector<Input> inputs_;
  Eigen::VectorXd targets_;  // warped
  Warp warp_ = Warp::Identity;
  double noise_var_ = 0.0;
  double mean_const_ = 0.0;
  double jitter_ = 0.0;
  double log_jacobian_ = 0.0;
  Eigen::MatrixXd chol_;   // lower triangular factor
  Eigen::VectorXd alpha_;  // (K + (noise+jitter) I)^-1 (y - mean)
};

/// Arc-kernel GP over conditional points.
GpModel<Point> fit_arc_gp(const ParameterSpace& space, const ArcParams& params,
                          std::vector<Point> points,
                          const Eigen::VectorXd& raw_targets, double noise_var,
                          std::optional<double> mean_const = std::nullopt,
                          Warp warp = Warp::Identity);

/// Plain-kernel GP over normalized coordinate vectors.
GpModel<Eigen::VectorXd> fit_plain_gp(
    const ArcParams& params, std::vector<Eigen::VectorXd> vectors,
    const Eigen::VectorXd& raw_targets, double noise_var,
    std::optional<double> mean_const = std::nullopt,
    Warp warp = Warp::Identity);

}  // namespace arcbo
