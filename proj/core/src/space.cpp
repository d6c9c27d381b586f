#include "arcbo/space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace arcbo {

namespace {

void validate(int max_depth, const std::vector<Dimension>& dims) {
  if (max_depth < 0) {
    throw std::invalid_argument("depth.max must be >= 0");
  }
  std::set<int> layers{0};  // the depth coordinate itself is layer 0
  for (const auto& d : dims) {
    if (!(d.lower < d.upper)) {
      throw std::invalid_argument("dimension '" + d.name +
                                  "': lower must be strictly below upper");
    }
    if (d.layer < 0) {
      throw std::invalid_argument("dimension '" + d.name +
                                  "': layer must be >= 0");
    }
    if (d.layer > max_depth) {
      throw std::invalid_argument("dimension '" + d.name +
                                  "': layer exceeds depth.max");
    }
    layers.insert(d.layer);
  }
  int expected = 0;
  for (int layer : layers) {
    if (layer != expected++) {
      throw std::invalid_argument("layer indices must form a contiguous range "
                                  "starting at 0");
    }
  }
}

}  // namespace

ParameterSpace::ParameterSpace(int max_depth, std::vector<Dimension> dims)
    : max_depth_(max_depth), dims_(std::move(dims)) {
  validate(max_depth_, dims_);
}

ParameterSpace ParameterSpace::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("space config: ") + e.what());
  }
  try {
    int max_depth = doc.at("depth").at("max").get<int>();
    std::vector<Dimension> dims;
    for (const auto& item : doc.at("dims")) {
      Dimension d;
      d.name = item.at("name").get<std::string>();
      d.lower = item.at("lower").get<double>();
      d.upper = item.at("upper").get<double>();
      d.layer = item.at("layer").get<int>();
      dims.push_back(std::move(d));
    }
    return ParameterSpace(max_depth, std::move(dims));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("space config: ") + e.what());
  }
}

std::string ParameterSpace::to_json() const {
  nlohmann::json doc;
  doc["depth"] = {{"max", max_depth_}};
  doc["dims"] = nlohmann::json::array();
  for (const auto& d : dims_) {
    doc["dims"].push_back({{"name", d.name},
                           {"lower", d.lower},
                           {"upper", d.upper},
                           {"layer", d.layer}});
  }
  return doc.dump(2);
}

std::vector<bool> relevance(const ParameterSpace& space,
                            const Eigen::VectorXd& raw) {
  if (raw.size() != space.num_coords()) {
    throw std::invalid_argument("raw vector has wrong length");
  }
  const double rounded = std::floor(raw[0] + 0.5);  // half-up
  if (rounded < 0.0 || rounded > space.max_depth()) {
    std::ostringstream msg;
    msg << "depth coordinate " << raw[0] << " outside [0, "
        << space.max_depth() << "]";
    throw std::invalid_argument(msg.str());
  }
  const int depth = static_cast<int>(rounded);
  std::vector<bool> mask(static_cast<size_t>(space.num_dims()));
  for (int i = 0; i < space.num_dims(); ++i) {
    mask[static_cast<size_t>(i)] = depth >= space.dims()[static_cast<size_t>(i)].layer;
  }
  return mask;
}

Point make_point(const ParameterSpace& space, const Eigen::VectorXd& raw) {
  Point p;
  p.mask = relevance(space, raw);
  p.depth = static_cast<int>(std::floor(raw[0] + 0.5));
  p.values = raw.tail(space.num_dims());
  for (int i = 0; i < space.num_dims(); ++i) {
    if (!p.relevant(i)) continue;
    const Dimension& d = space.dims()[static_cast<size_t>(i)];
    if (p.values[i] < d.lower || p.values[i] > d.upper) {
      std::ostringstream msg;
      msg << "dimension '" << d.name << "': value " << p.values[i]
          << " outside [" << d.lower << ", " << d.upper << "]";
      throw std::invalid_argument(msg.str());
    }
  }
  return p;
}

Eigen::VectorXd normalize(const ParameterSpace& space, const Point& point) {
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(space.num_dims());
  for (int i = 0; i < space.num_dims(); ++i) {
    if (!point.relevant(i)) continue;
    const Dimension& d = space.dims()[static_cast<size_t>(i)];
    unit[i] = (point.values[i] - d.lower) / (d.upper - d.lower);
  }
  return unit;
}

double denormalize(const ParameterSpace& space, int dim, double unit) {
  const Dimension& d = space.dims()[static_cast<size_t>(dim)];
  return d.lower + unit * (d.upper - d.lower);
}

Eigen::VectorXd normalized_coords(const ParameterSpace& space,
                                  const Point& point) {
  Eigen::VectorXd coords(space.num_coords());
  coords[0] = space.max_depth() > 0
                  ? static_cast<double>(point.depth) / space.max_depth()
                  : 0.0;
  coords.tail(space.num_dims()) = normalize(space, point);
  return coords;
}

std::vector<bool> full_mask(const ParameterSpace& space, const Point& point) {
  std::vector<bool> mask(static_cast<size_t>(space.num_coords()));
  mask[0] = true;
  for (int i = 0; i < space.num_dims(); ++i) {
    mask[static_cast<size_t>(i + 1)] = point.relevant(i);
  }
  return mask;
}

bool conditionally_equal(const Point& a, const Point& b) {
  if (a.depth != b.depth || a.mask != b.mask ||
      a.values.size() != b.values.size()) {
    return false;
  }
  for (Eigen::Index i = 0; i < a.values.size(); ++i) {
    if (a.mask[static_cast<size_t>(i)] && a.values[i] != b.values[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace arcbo
