#include "regent/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace regent {

namespace {

void require_inside(const Segmentation& seg, const Rect& r, const char* who) {
  if (r.x0 < 0 || r.y0 < 0 || r.x1 > seg.width() || r.y1 > seg.height() || r.x1 < r.x0 ||
      r.y1 < r.y0)
    throw ArgumentError(std::string(who) + ": region outside the segmented image");
}

void require_partition(const Segmentation& seg, const Rect& upper,
                       const std::array<Rect, 4>& children, const char* who) {
  require_inside(seg, upper, who);
  if (upper.pixel_count() == 0) throw ArgumentError(std::string(who) + ": empty upper region");
  Eigen::Index total = 0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].pixel_count() > 0 && !upper.contains(children[i]))
      throw ArgumentError(std::string(who) + ": child region outside its parent");
    for (std::size_t j = i + 1; j < children.size(); ++j)
      if (children[i].overlaps(children[j]))
        throw ArgumentError(std::string(who) + ": child regions overlap");
    total += children[i].pixel_count();
  }
  if (total != upper.pixel_count())
    throw ArgumentError(std::string(who) + ": children do not cover the upper region");
}

// Per-cluster pixel counts within each of the four children, gathered in one
// pass. `counts` is indexed by label and shared across calls; `touched` lists
// the labels used so only they are reset.
struct QuadCounts {
  std::vector<std::array<std::int64_t, 4>> counts;
  std::vector<std::int32_t> touched;

  explicit QuadCounts(Eigen::Index num_clusters)
      : counts(static_cast<std::size_t>(num_clusters), {0, 0, 0, 0}) {}

  void gather(const Segmentation& seg, const std::array<Rect, 4>& children) {
    for (int j = 0; j < 4; ++j) {
      const Rect& r = children[static_cast<std::size_t>(j)];
      for (Eigen::Index y = r.y0; y < r.y1; ++y)
        for (Eigen::Index x = r.x0; x < r.x1; ++x) {
          std::int32_t l = seg.labels(y, x);
          auto& c = counts[static_cast<std::size_t>(l)];
          if (c[0] + c[1] + c[2] + c[3] == 0) touched.push_back(l);
          ++c[static_cast<std::size_t>(j)];
        }
    }
    std::sort(touched.begin(), touched.end());
  }
};

double entropy_bits(const std::vector<std::int64_t>& counts, std::int64_t total) {
  double h = 0.0;
  for (std::int64_t c : counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

double region_entropy(const Segmentation& seg, const Rect& region) {
  require_inside(seg, region, "region_entropy");
  if (region.pixel_count() == 0) throw ArgumentError("region_entropy: empty region");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(seg.num_clusters()), 0);
  for (Eigen::Index y = region.y0; y < region.y1; ++y)
    for (Eigen::Index x = region.x0; x < region.x1; ++x)
      ++counts[static_cast<std::size_t>(seg.labels(y, x))];
  return entropy_bits(counts, region.pixel_count());
}

EntropyMap layer_entropy_map(const Segmentation& seg, const RegionGrid& grid) {
  if (grid.width() != seg.width() || grid.height() != seg.height())
    throw ArgumentError("layer_entropy_map: grid dimensions do not match the segmentation");

  EntropyMap map;
  map.layer = grid.layer();
  map.component_size = seg.component_size;
  map.values.setZero(grid.side(), grid.side());

  std::vector<std::int64_t> counts(static_cast<std::size_t>(seg.num_clusters()), 0);
  std::vector<std::int32_t> touched;
  for (Eigen::Index row = 0; row < grid.side(); ++row)
    for (Eigen::Index col = 0; col < grid.side(); ++col) {
      const Rect r = grid.region(row, col);
      for (Eigen::Index y = r.y0; y < r.y1; ++y)
        for (Eigen::Index x = r.x0; x < r.x1; ++x) {
          std::int32_t l = seg.labels(y, x);
          if (counts[static_cast<std::size_t>(l)] == 0) touched.push_back(l);
          ++counts[static_cast<std::size_t>(l)];
        }
      double h = 0.0;
      const double total = static_cast<double>(r.pixel_count());
      for (std::int32_t l : touched) {
        double p = static_cast<double>(counts[static_cast<std::size_t>(l)]) / total;
        h -= p * std::log2(p);
        counts[static_cast<std::size_t>(l)] = 0;
      }
      touched.clear();
      map.values(row, col) = h;
    }
  map.mean = map.values.mean();
  return map;
}

double domain_interaction(const Segmentation& seg, const Rect& upper,
                          const std::array<Rect, 4>& children) {
  require_partition(seg, upper, children, "domain_interaction");

  QuadCounts q(seg.num_clusters());
  q.gather(seg, children);

  const double total = static_cast<double>(upper.pixel_count());
  double interaction = 0.0;
  for (std::int32_t l : q.touched) {
    const auto& c = q.counts[static_cast<std::size_t>(l)];
    int spread = (c[0] > 0) + (c[1] > 0) + (c[2] > 0) + (c[3] > 0);
    if (spread < 2) continue;  // non-straddling clusters contribute nothing
    std::int64_t in_upper = c[0] + c[1] + c[2] + c[3];
    double h = 0.0;
    for (int j = 0; j < 4; ++j) {
      if (c[static_cast<std::size_t>(j)] == 0) continue;
      double p = static_cast<double>(c[static_cast<std::size_t>(j)]) / static_cast<double>(in_upper);
      h -= p * std::log2(p);
    }
    interaction += (static_cast<double>(in_upper) / total) * h;
  }
  return interaction;
}

double domain_interaction(const Segmentation& seg, const RegionGrid& grid,
                          Eigen::Index region_index) {
  return domain_interaction(seg, grid.region(region_index), children_of(grid, region_index));
}

StraddleSet straddle_set(const Segmentation& seg, const Rect& upper,
                         const std::array<Rect, 4>& children) {
  require_partition(seg, upper, children, "straddle_set");
  QuadCounts q(seg.num_clusters());
  q.gather(seg, children);
  StraddleSet s;
  for (std::int32_t l : q.touched) {
    const auto& c = q.counts[static_cast<std::size_t>(l)];
    if (((c[0] > 0) + (c[1] > 0) + (c[2] > 0) + (c[3] > 0)) >= 2) s.clusters.push_back(l);
  }
  return s;
}

StraddleSet straddle_set(const Segmentation& seg, const RegionGrid& grid,
                         Eigen::Index region_index) {
  StraddleSet s = straddle_set(seg, grid.region(region_index), children_of(grid, region_index));
  s.upper_region = region_index;
  return s;
}

}  // namespace regent
