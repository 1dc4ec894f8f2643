#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "regent/errors.hpp"
#include "regent/image.hpp"

namespace regent {

/// One edge of the 8-connected pixel grid graph. `a` and `b` are row-major
/// pixel indices; `w` is the Euclidean RGB distance between their (smoothed)
/// colors.
struct WeightedEdge {
  double w;
  std::int32_t a;
  std::int32_t b;
};

/// The grid graph of an image with edges sorted ascending by weight.
/// Equal weights keep construction order (per pixel in row-major order,
/// neighbors E, S, SE, NE), so edge processing is fully deterministic.
/// Building the graph once and segmenting it at many component sizes is the
/// cheap path for parameter sweeps.
struct EdgeGraph {
  Eigen::Index width = 0;
  Eigen::Index height = 0;
  std::vector<WeightedEdge> edges;
};

/// A full labeling of the image pixels into connected clusters.
/// Labels are canonical: 0..num_clusters()-1 in order of each cluster's first
/// pixel in row-major scan order.
struct Segmentation {
  Eigen::ArrayXXi labels;  // (height rows x width cols)
  std::vector<std::int64_t> cluster_sizes;  // indexed by label
  double component_size = 0.0;

  Eigen::Index num_clusters() const { return static_cast<Eigen::Index>(cluster_sizes.size()); }
  Eigen::Index width() const { return labels.cols(); }
  Eigen::Index height() const { return labels.rows(); }
  Eigen::Index pixel_count() const { return labels.size(); }
};

/// Number of union-find segmentation passes executed so far (process-wide).
/// Lets sweep tests observe that each component size segments exactly once.
std::uint64_t segmentation_run_count();
void reset_segmentation_run_count();

template <typename Scalar>
EdgeGraph build_edge_graph(const Image<Scalar>& img) {
  if (img.empty()) throw ArgumentError("build_edge_graph: empty image");
  const Eigen::Index w = img.width(), h = img.height();
  EdgeGraph g;
  g.width = w;
  g.height = h;
  g.edges.reserve(static_cast<std::size_t>(4 * w * h));

  auto weight = [&](Eigen::Index x0, Eigen::Index y0, Eigen::Index x1, Eigen::Index y1) {
    double dr = static_cast<double>(img.ch[0](y0, x0)) - static_cast<double>(img.ch[0](y1, x1));
    double dg = static_cast<double>(img.ch[1](y0, x0)) - static_cast<double>(img.ch[1](y1, x1));
    double db = static_cast<double>(img.ch[2](y0, x0)) - static_cast<double>(img.ch[2](y1, x1));
    return std::sqrt(dr * dr + dg * dg + db * db);
  };
  auto push = [&](Eigen::Index x0, Eigen::Index y0, Eigen::Index x1, Eigen::Index y1) {
    g.edges.push_back({weight(x0, y0, x1, y1), static_cast<std::int32_t>(y0 * w + x0),
                       static_cast<std::int32_t>(y1 * w + x1)});
  };

  for (Eigen::Index y = 0; y < h; ++y)
    for (Eigen::Index x = 0; x < w; ++x) {
      if (x + 1 < w) push(x, y, x + 1, y);                     // E
      if (y + 1 < h) push(x, y, x, y + 1);                     // S
      if (x + 1 < w && y + 1 < h) push(x, y, x + 1, y + 1);    // SE
      if (x + 1 < w && y > 0) push(x, y, x + 1, y - 1);        // NE
    }

  std::stable_sort(g.edges.begin(), g.edges.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) { return a.w < b.w; });
  return g;
}

/// Graph-based segmentation over a pre-built (sorted) grid graph.
///
/// Edges are processed ascending; components C1, C2 joined by weight w merge
/// iff w <= min(Int(C1) + k/|C1|, Int(C2) + k/|C2|), where k is the component
/// size, |C| the component's current pixel count, and Int(C) the largest
/// weight accepted inside C so far (0 for singletons). If min_size > 0, a
/// post-pass merges across any edge whose endpoints lie in components smaller
/// than min_size.
Segmentation segment_graph(const EdgeGraph& graph, double component_size,
                           std::int64_t min_size = 0);

template <typename Scalar>
Segmentation segment(const Image<Scalar>& img, double component_size, std::int64_t min_size = 0) {
  return segment_graph(build_edge_graph(img), component_size, min_size);
}

/// Diagnostic comparison of cluster counts at two component sizes. Larger
/// component sizes typically coarsen the labeling, but the algorithm does not
/// guarantee it, so this reports rather than asserts.
struct CoarseningReport {
  double k_fine = 0.0, k_coarse = 0.0;
  Eigen::Index clusters_fine = 0, clusters_coarse = 0;
  bool coarsened = false;  // clusters_coarse <= clusters_fine
};

template <typename Scalar>
CoarseningReport greater_component_size_coarsens(const Image<Scalar>& img, double k_fine,
                                                 double k_coarse, std::int64_t min_size = 0) {
  if (!(k_fine > 0.0) || !(k_coarse > 0.0))
    throw ArgumentError("greater_component_size_coarsens: component sizes must be > 0");
  if (!(k_fine < k_coarse))
    throw ArgumentError("greater_component_size_coarsens: expected k_fine < k_coarse");
  EdgeGraph g = build_edge_graph(img);
  CoarseningReport r;
  r.k_fine = k_fine;
  r.k_coarse = k_coarse;
  r.clusters_fine = segment_graph(g, k_fine, min_size).num_clusters();
  r.clusters_coarse = segment_graph(g, k_coarse, min_size).num_clusters();
  r.coarsened = r.clusters_coarse <= r.clusters_fine;
  return r;
}

}  // namespace regent
