#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "regent/errors.hpp"

namespace regent {

/// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct Rect {
  Eigen::Index x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  Eigen::Index width() const { return x1 - x0; }
  Eigen::Index height() const { return y1 - y0; }
  Eigen::Index pixel_count() const { return width() * height(); }
  bool contains(Eigen::Index x, Eigen::Index y) const {
    return x >= x0 && x < x1 && y >= y0 && y < y1;
  }
  bool contains(const Rect& o) const {
    return o.x0 >= x0 && o.x1 <= x1 && o.y0 >= y0 && o.y1 <= y1;
  }
  bool overlaps(const Rect& o) const {
    return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1;
  }
  bool operator==(const Rect& o) const = default;
};

/// Layer-n partition of a width x height pixel grid into 2^n x 2^n rectangular
/// regions. Cuts along an axis of length L sit at floor(i * L / 2^n), which
/// keeps regions within one pixel of equal size and makes each layer a strict
/// refinement of the one above it. Regions are indexed row-major.
class RegionGrid {
 public:
  RegionGrid(Eigen::Index width, Eigen::Index height, int layer)
      : layer_(layer), width_(width), height_(height) {
    if (width < 1 || height < 1) throw ArgumentError("RegionGrid: empty image");
    if (layer < 0) throw ArgumentError("RegionGrid: layer must be >= 0");
    int max = max_layer(width, height);
    if (layer > max)
      throw ArgumentError("RegionGrid: layer " + std::to_string(layer) +
                          " has empty regions for a " + std::to_string(width) + "x" +
                          std::to_string(height) + " image; maximum legal layer is " +
                          std::to_string(max));
    side_ = Eigen::Index{1} << layer;
    xcuts_ = cuts(width, side_);
    ycuts_ = cuts(height, side_);
  }

  int layer() const { return layer_; }
  Eigen::Index width() const { return width_; }
  Eigen::Index height() const { return height_; }
  Eigen::Index side() const { return side_; }  // regions per axis, 2^layer
  Eigen::Index region_count() const { return side_ * side_; }

  Rect region(Eigen::Index row, Eigen::Index col) const {
    if (row < 0 || row >= side_ || col < 0 || col >= side_)
      throw ArgumentError("RegionGrid::region: index out of range");
    return {xcuts_[static_cast<std::size_t>(col)], ycuts_[static_cast<std::size_t>(row)],
            xcuts_[static_cast<std::size_t>(col + 1)], ycuts_[static_cast<std::size_t>(row + 1)]};
  }
  Rect region(Eigen::Index index) const { return region(index / side_, index % side_); }

  Eigen::Index region_of_pixel(Eigen::Index x, Eigen::Index y) const {
    if (x < 0 || x >= width_ || y < 0 || y >= height_)
      throw ArgumentError("region_of_pixel: coordinate out of range");
    auto axis = [](const std::vector<Eigen::Index>& cuts, Eigen::Index v) {
      return std::upper_bound(cuts.begin(), cuts.end(), v) - cuts.begin() - 1;
    };
    return axis(ycuts_, y) * side_ + axis(xcuts_, x);
  }

  /// Largest n such that 2^n <= min(width, height), i.e. no region is empty.
  static int max_layer(Eigen::Index width, Eigen::Index height) {
    Eigen::Index m = std::min(width, height);
    int n = 0;
    while ((Eigen::Index{2} << n) <= m) ++n;
    return n;
  }

 private:
  static std::vector<Eigen::Index> cuts(Eigen::Index length, Eigen::Index parts) {
    std::vector<Eigen::Index> c(static_cast<std::size_t>(parts + 1));
    for (Eigen::Index i = 0; i <= parts; ++i)
      c[static_cast<std::size_t>(i)] = (i * length) / parts;
    return c;
  }

  int layer_;
  Eigen::Index width_, height_, side_;
  std::vector<Eigen::Index> xcuts_, ycuts_;
};

/// The four layer-(n+1) regions tiling one layer-n region, ordered
/// top-left, top-right, bottom-left, bottom-right.
inline std::array<Rect, 4> children_of(const RegionGrid& grid, Eigen::Index region_index) {
  if (region_index < 0 || region_index >= grid.region_count())
    throw ArgumentError("children_of: region index out of range");
  RegionGrid child(grid.width(), grid.height(), grid.layer() + 1);  // throws if illegal
  Eigen::Index r = region_index / grid.side(), c = region_index % grid.side();
  return {child.region(2 * r, 2 * c), child.region(2 * r, 2 * c + 1),
          child.region(2 * r + 1, 2 * c), child.region(2 * r + 1, 2 * c + 1)};
}

}  // namespace regent
