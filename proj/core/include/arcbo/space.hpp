#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace arcbo {

/// One bounded real search dimension. `layer` groups dimensions by the depth
/// threshold at which they become relevant: layer 0 dimensions are always
/// relevant, layer k dimensions only when the depth coordinate is >= k.
struct Dimension {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  int layer = 0;
};

/// A conditional parameter space: a distinguished integer depth coordinate in
/// [0, max_depth] followed by `dims().size()` bounded real dimensions.
///
/// Relevance is depth-threshold only: dimension i matters iff
/// depth >= dims()[i].layer. The depth coordinate itself is always relevant.
class ParameterSpace {
 public:
  ParameterSpace(int max_depth, std::vector<Dimension> dims);

  /// Parses {"depth": {"max": L}, "dims": [{"name","lower","upper","layer"}]}.
  /// Throws std::invalid_argument on malformed documents or invariant
  /// violations (lower >= upper, non-contiguous layers, ...).
  static ParameterSpace from_json(const std::string& text);
  std::string to_json() const;

  int max_depth() const { return max_depth_; }
  const std::vector<Dimension>& dims() const { return dims_; }

  /// Number of payload dimensions (excludes the depth coordinate).
  int num_dims() const { return static_cast<int>(dims_.size()); }

  /// Full input width: depth coordinate plus payload dimensions. This is the
  /// length of raw vectors, Sobol grid vectors and kernel parameter vectors.
  int num_coords() const { return num_dims() + 1; }

 private:
  int max_depth_;
  std::vector<Dimension> dims_;
};

/// A point in a conditional space: an integral depth, raw payload coordinates
/// and the derived relevance mask. Values at masked-out positions are
/// preserved but carry no meaning.
struct Point {
  int depth = 0;
  Eigen::VectorXd values;       // length num_dims()
  std::vector<bool> mask;       // length num_dims(), derived from depth

  bool relevant(int i) const { return mask[static_cast<size_t>(i)]; }
};

/// Derives the relevance mask from a full raw vector [depth, x_1, ..., x_D].
/// The depth entry is rounded half-up to an integer and must land in
/// [0, max_depth]. Throws std::invalid_argument otherwise.
std::vector<bool> relevance(const ParameterSpace& space,
                            const Eigen::VectorXd& raw);

/// Builds a Point from a full raw vector. Relevant coordinates are bound
/// checked; irrelevant ones are stored untouched and never checked.
Point make_point(const ParameterSpace& space, const Eigen::VectorXd& raw);

/// Maps relevant payload coordinates onto [0,1] via (x - lower)/(upper -
/// lower); irrelevant entries are set to 0 and must not be consumed.
Eigen::VectorXd normalize(const ParameterSpace& space, const Point& point);

/// Inverse of normalize for a single payload dimension.
double denormalize(const ParameterSpace& space, int dim, double unit);

/// Depth plus normalized payload as one vector of length num_coords(), with
/// the depth scaled onto [0,1] by max_depth (0 when max_depth is 0). Entry 0
/// is the depth; irrelevant entries are 0. This is the coordinate system the
/// kernels operate in.
Eigen::VectorXd normalized_coords(const ParameterSpace& space,
                                  const Point& point);

/// Relevance mask over all num_coords() coordinates; entry 0 (depth) is
/// always true.
std::vector<bool> full_mask(const ParameterSpace& space, const Point& point);

/// Equality that ignores irrelevant coordinates: same depth, same mask and
/// bitwise-equal values at relevant positions.
bool conditionally_equal(const Point& a, const Point& b);

}  // namespace arcbo
