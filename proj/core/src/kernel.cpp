#include "arcbo/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace arcbo {

namespace {
constexpr double kSqrt5 = 2.23606797749978969640917366873;
}

std::string to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::ExpQuadratic: return "expquad";
    case BaseKind::RationalQuadratic: return "rq";
    case BaseKind::Matern52: return "matern52";
  }
  throw std::invalid_argument("unknown base kind");
}

BaseKind base_kind_from_string(const std::string& name) {
  if (name == "expquad") return BaseKind::ExpQuadratic;
  if (name == "rq") return BaseKind::RationalQuadratic;
  if (name == "matern52") return BaseKind::Matern52;
  throw std::invalid_argument("unknown base covariance '" + name + "'");
}

void ArcParams::validate() const {
  if (omega.size() != rho.size()) {
    throw std::invalid_argument("omega and rho must have equal length");
  }
  for (Eigen::Index i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0.0)) {
      throw std::invalid_argument("omega entries must be > 0");
    }
    if (!(rho[i] >= 0.0 && rho[i] <= 1.0)) {
      throw std::invalid_argument("rho entries must lie in [0,1]");
    }
  }
  if (!(amplitude > 0.0)) {
    throw std::invalid_argument("amplitude must be > 0");
  }
  if (base == BaseKind::RationalQuadratic && !(alpha > 0.0)) {
    throw std::invalid_argument("alpha must be > 0 for rq");
  }
}

ArcParams ArcParams::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("params config: ") + e.what());
  }
  try {
    ArcParams p;
    const auto& omega = doc.at("omega");
    const auto& rho = doc.at("rho");
    p.omega.resize(static_cast<Eigen::Index>(omega.size()));
    p.rho.resize(static_cast<Eigen::Index>(rho.size()));
    for (size_t i = 0; i < omega.size(); ++i) {
      p.omega[static_cast<Eigen::Index>(i)] = omega[i].get<double>();
    }
    for (size_t i = 0; i < rho.size(); ++i) {
      p.rho[static_cast<Eigen::Index>(i)] = rho[i].get<double>();
    }
    p.amplitude = doc.at("amplitude").get<double>();
    p.base = base_kind_from_string(doc.at("base").get<std::string>());
    if (doc.contains("alpha")) {
      p.alpha = doc.at("alpha").get<double>();
    }
    p.validate();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("params config: ") + e.what());
  }
}

std::string ArcParams::to_json() const {
  nlohmann::json doc;
  doc["omega"] = std::vector<double>(omega.data(), omega.data() + omega.size());
  doc["rho"] = std::vector<double>(rho.data(), rho.data() + rho.size());
  doc["amplitude"] = amplitude;
  doc["base"] = to_string(base);
  if (base == BaseKind::RationalQuadratic) {
    doc["alpha"] = alpha;
  }
  return doc.dump(2);
}

namespace {

void check_dims(const ParameterSpace& space, const ArcParams& params) {
  if (params.dims() != space.num_coords()) {
    throw std::invalid_argument(
        "params dimensioned for " + std::to_string(params.dims()) +
        " coordinates, space has " + std::to_string(space.num_coords()));
  }
}

}  // namespace

Eigen::VectorXd embed(const ParameterSpace& space, const ArcParams& params,
                      const Point& point) {
  check_dims(space, params);
  const Eigen::VectorXd coords = normalized_coords(space, point);
  const std::vector<bool> mask = full_mask(space, point);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * space.num_coords());
  for (int i = 0; i < space.num_coords(); ++i) {
    if (!mask[static_cast<size_t>(i)]) continue;
    const double angle = std::numbers::pi * params.rho[i] * coords[i];
    out[2 * i] = params.omega[i] * std::sin(angle);
    out[2 * i + 1] = params.omega[i] * std::cos(angle);
  }
  return out;
}

double arc_distance(const ParameterSpace& space, const ArcParams& params,
                    const Point& a, const Point& b) {
  check_dims(space, params);
  const Eigen::VectorXd ca = normalized_coords(space, a);
  const Eigen::VectorXd cb = normalized_coords(space, b);
  const std::vector<bool> ma = full_mask(space, a);
  const std::vector<bool> mb = full_mask(space, b);
  double sq = 0.0;
  for (int i = 0; i < space.num_coords(); ++i) {
    const bool ra = ma[static_cast<size_t>(i)];
    const bool rb = mb[static_cast<size_t>(i)];
    if (!ra && !rb) continue;
    if (ra != rb) {
      sq += params.omega[i] * params.omega[i];
      continue;
    }
    const double half_angle =
        0.5 * std::numbers::pi * params.rho[i] * (ca[i] - cb[i]);
    const double d = 2.0 * params.omega[i] * std::sin(half_angle);
    sq += d * d;
  }
  return std::sqrt(sq);
}

double base_kappa(BaseKind kind, double delta, double amplitude,
                  double alpha) {
  if (delta < 0.0) {
    throw std::invalid_argument("distance must be nonnegative");
  }
  switch (kind) {
    case BaseKind::ExpQuadratic:
      return amplitude * std::exp(-0.5 * delta * delta);
    case BaseKind::RationalQuadratic:
      return amplitude * std::pow(1.0 + delta * delta / (2.0 * alpha), -alpha);
    case BaseKind::Matern52: {
      const double t = kSqrt5 * delta;
      return amplitude * (1.0 + t + 5.0 * delta * delta / 3.0) * std::exp(-t);
    }
  }
  throw std::invalid_argument("unknown base kind");
}

double arc_kernel(const ParameterSpace& space, const ArcParams& params,
                  const Point& a, const Point& b) {
  return base_kappa(params.base, arc_distance(space, params, a, b),
                    params.amplitude, params.alpha);
}

double plain_kernel(const ArcParams& params, const Eigen::VectorXd& v,
                    const Eigen::VectorXd& w) {
  if (v.size() != params.omega.size() || w.size() != params.omega.size()) {
    throw std::invalid_argument("vector length does not match params");
  }
  const double sq = (params.omega.array() * (v - w).array()).square().sum();
  return base_kappa(params.base, std::sqrt(sq), params.amplitude,
                    params.alpha);
}

Eigen::MatrixXd gram(const ParameterSpace& space, const ArcParams& params,
                     const std::vector<Point>& points) {
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double k = arc_kernel(space, params, points[static_cast<size_t>(i)],
                                  points[static_cast<size_t>(j)]);
      g(i, j) = k;
      g(j, i) = k;
    }
  }
  return g;
}

Eigen::MatrixXd gram_plain(const ArcParams& params,
                           const std::vector<Eigen::VectorXd>& vectors) {
  const Eigen::Index n = static_cast<Eigen::Index>(vectors.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double k = plain_kernel(params, vectors[static_cast<size_t>(i)],
                                    vectors[static_cast<size_t>(j)]);
      g(i, j) = k;
      g(j, i) = k;
    }
  }
  return g;
}

}  // namespace arcbo
