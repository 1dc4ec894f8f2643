#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <vector>

#include "regent/errors.hpp"
#include "regent/region_grid.hpp"
#include "regent/segmentation.hpp"

namespace regent {

/// Per-region Shannon entropies (bits) for one (layer, component size) pair,
/// indexed like the RegionGrid, plus their arithmetic mean.
struct EntropyMap {
  int layer = 0;
  double component_size = 0.0;
  Eigen::ArrayXXd values;  // (side x side), bits
  double mean = 0.0;

  Eigen::Index side() const { return values.rows(); }
  Eigen::Index region_count() const { return values.size(); }
  double value(Eigen::Index region_index) const {
    return values(region_index / values.cols(), region_index % values.cols());
  }
};

/// Clusters of an upper region that have pixels (within that region) in at
/// least two of its four children.
struct StraddleSet {
  Eigen::Index upper_region = -1;  // region index at the upper layer, -1 if built from raw rects
  std::vector<std::int32_t> clusters;  // ascending canonical labels
};

/// Shannon entropy (bits) of the cluster-membership distribution restricted
/// to `region`: -sum_k P(c_k) log2 P(c_k) with P(c_k) = pixels of c_k inside
/// the region / region pixel count.
double region_entropy(const Segmentation& seg, const Rect& region);

/// region_entropy over every region of a layer plus the layer mean.
EntropyMap layer_entropy_map(const Segmentation& seg, const RegionGrid& grid);

/// Expected child-region entropy conditioned on cluster, over the upper
/// region's pixel population (bits):
///   sum over straddling clusters c of P(c) * H(child | c),
/// with P(c) = cluster pixels in upper / upper pixel count and
/// P(child_j | c) = cluster pixels in child j / cluster pixels in upper.
/// Clusters wholly inside one child contribute exactly 0. Equals 0 iff the
/// labeling aligns with the child boundaries; bounded by the entropy of the
/// child pixel-count fractions (2 bits for equal quadrants).
double domain_interaction(const Segmentation& seg, const Rect& upper,
                          const std::array<Rect, 4>& children);
double domain_interaction(const Segmentation& seg, const RegionGrid& grid,
                          Eigen::Index region_index);

StraddleSet straddle_set(const Segmentation& seg, const Rect& upper,
                         const std::array<Rect, 4>& children);
StraddleSet straddle_set(const Segmentation& seg, const RegionGrid& grid,
                         Eigen::Index region_index);

}  // namespace regent
