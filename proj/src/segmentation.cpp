#include "regent/segmentation.hpp"

#include <atomic>
#include <numeric>

namespace regent {

namespace {

std::atomic<std::uint64_t> g_run_count{0};

// Union-find with path halving and union by size.
struct DisjointSet {
  std::vector<std::int32_t> parent;
  std::vector<std::int64_t> size;

  explicit DisjointSet(std::int64_t n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  std::int32_t merge(std::int32_t a, std::int32_t b) {
    if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    return a;
  }
};

}  // namespace

std::uint64_t segmentation_run_count() { return g_run_count.load(); }
void reset_segmentation_run_count() { g_run_count.store(0); }

Segmentation segment_graph(const EdgeGraph& graph, double component_size, std::int64_t min_size) {
  if (!(component_size > 0.0)) throw ArgumentError("segment: component_size must be > 0");
  if (min_size < 0) throw ArgumentError("segment: min_size must be >= 0");
  if (graph.width < 1 || graph.height < 1) throw ArgumentError("segment: empty image");

  const Eigen::Index n = graph.width * graph.height;
  DisjointSet ds(n);
  std::vector<double> internal(static_cast<std::size_t>(n), 0.0);  // Int(C), keyed by root

  const double k = component_size;
  for (const WeightedEdge& e : graph.edges) {
    std::int32_t ra = ds.find(e.a), rb = ds.find(e.b);
    if (ra == rb) continue;
    double ta = internal[static_cast<std::size_t>(ra)] + k / static_cast<double>(ds.size[static_cast<std::size_t>(ra)]);
    double tb = internal[static_cast<std::size_t>(rb)] + k / static_cast<double>(ds.size[static_cast<std::size_t>(rb)]);
    if (e.w <= std::min(ta, tb)) {
      std::int32_t r = ds.merge(ra, rb);
      internal[static_cast<std::size_t>(r)] = e.w;  // edges arrive ascending
    }
  }

  if (min_size > 0) {
    for (const WeightedEdge& e : graph.edges) {
      std::int32_t ra = ds.find(e.a), rb = ds.find(e.b);
      if (ra != rb && (ds.size[static_cast<std::size_t>(ra)] < min_size ||
                       ds.size[static_cast<std::size_t>(rb)] < min_size))
        ds.merge(ra, rb);
    }
  }

  // canonicalize labels by first pixel in row-major order
  Segmentation seg;
  seg.component_size = component_size;
  seg.labels.resize(graph.height, graph.width);
  std::vector<std::int32_t> canon(static_cast<std::size_t>(n), -1);
  std::int32_t next = 0;
  for (Eigen::Index y = 0; y < graph.height; ++y)
    for (Eigen::Index x = 0; x < graph.width; ++x) {
      std::int32_t root = ds.find(static_cast<std::int32_t>(y * graph.width + x));
      if (canon[static_cast<std::size_t>(root)] < 0) {
        canon[static_cast<std::size_t>(root)] = next++;
        seg.cluster_sizes.push_back(ds.size[static_cast<std::size_t>(root)]);
      }
      seg.labels(y, x) = canon[static_cast<std::size_t>(root)];
    }

  g_run_count.fetch_add(1, std::memory_order_relaxed);
  return seg;
}

}  // namespace regent
