#pragma once

#include <Eigen/Core>

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "regent/errors.hpp"
#include "regent/image.hpp"
#include "regent/metrics.hpp"
#include "regent/region_grid.hpp"
#include "regent/segmentation.hpp"

namespace regent {

/// The default 19-value component-size schedule: 100..900 step 100,
/// then 1000..10000 step 1000.
std::vector<double> default_component_sizes();

/// Grouping threshold for diff_component_size (diff < 500 -> group a).
inline constexpr double kDiffGroupThreshold = 500.0;

struct SweepConfig {
  double sigma = 2.0;
  std::vector<double> component_sizes;  // empty -> default schedule
  std::vector<int> layers;              // empty -> 0..6 clipped to the legal maximum
  int upper_layer = 1;                  // interaction is computed over this layer's regions
  std::int64_t min_size = 0;
  bool with_entropy = true;
  bool with_interaction = true;
  int threads = 0;  // 0 -> hardware concurrency
};

/// Domain interaction of one upper region as a function of component size.
struct InteractionCurve {
  Eigen::Index upper_region = 0;
  std::vector<std::pair<double, double>> points;  // (component_size, bits), ascending by size
};

struct SweepReport {
  std::vector<double> component_sizes;  // strictly increasing
  std::vector<int> layers;
  int upper_layer = -1;  // -1 when interaction was not requested
  std::vector<EntropyMap> entropy_maps;  // layer-major, then component size
  std::vector<InteractionCurve> curves;  // one per upper region
  std::vector<Eigen::Index> cluster_counts;  // per component size

  bool has_layer(int layer) const;
  const EntropyMap& entropy_map(int layer, double component_size) const;
};

/// Regions at `layer` whose entropy stays >= h_threshold at every swept
/// component size >= k_threshold: candidates for structure that resists
/// cluster integration.
std::vector<Eigen::Index> persistent_regions(const SweepReport& report, int layer,
                                             double k_threshold, double h_threshold);

/// Component size minimizing the unweighted mean interaction across curves;
/// ties go to the smallest size.
double select_component_size(const std::vector<InteractionCurve>& curves);

enum class DiffGroup { a, b };
struct ComponentSizeDiff {
  double diff = 0.0;
  DiffGroup group = DiffGroup::a;
};

/// |k_selected - k_reference|, grouped (a) below the 500 threshold, else (b).
ComponentSizeDiff diff_component_size(double k_selected, double k_reference);

namespace detail {
std::vector<double> normalize_component_sizes(std::vector<double> sizes);
std::vector<int> resolve_layers(const std::vector<int>& requested, Eigen::Index width,
                                Eigen::Index height);
}  // namespace detail

/// Smooth once, segment once per component size, and evaluate every requested
/// entropy layer and interaction region. Component sizes run concurrently
/// over the shared sorted edge graph; the report is assembled in
/// component-size order so the result is independent of scheduling.
template <typename Scalar>
SweepReport run_sweep(const Image<Scalar>& img, const SweepConfig& cfg) {
  if (img.empty()) throw ArgumentError("run_sweep: empty image");

  SweepReport rep;
  rep.component_sizes = detail::normalize_component_sizes(
      cfg.component_sizes.empty() ? default_component_sizes() : cfg.component_sizes);
  if (cfg.with_entropy)
    rep.layers = detail::resolve_layers(cfg.layers, img.width(), img.height());

  // validate everything up front, before any heavy work
  std::vector<RegionGrid> grids;
  for (int n : rep.layers) grids.emplace_back(img.width(), img.height(), n);
  std::vector<std::array<Rect, 4>> child_rects;
  std::vector<Rect> upper_rects;
  if (cfg.with_interaction) {
    RegionGrid upper(img.width(), img.height(), cfg.upper_layer);
    RegionGrid lower(img.width(), img.height(), cfg.upper_layer + 1);  // throws if illegal
    (void)lower;
    rep.upper_layer = cfg.upper_layer;
    for (Eigen::Index r = 0; r < upper.region_count(); ++r) {
      upper_rects.push_back(upper.region(r));
      child_rects.push_back(children_of(upper, r));
    }
  }

  const Image<Scalar> smoothed = gaussian_smooth(img, cfg.sigma);
  const EdgeGraph graph = build_edge_graph(smoothed);

  struct Entry {
    std::vector<EntropyMap> maps;        // one per layer
    std::vector<double> interactions;    // one per upper region
    Eigen::Index clusters = 0;
  };
  const std::size_t n_sizes = rep.component_sizes.size();
  std::vector<Entry> entries(n_sizes);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < n_sizes;) {
        Segmentation seg = segment_graph(graph, rep.component_sizes[i], cfg.min_size);
        Entry& e = entries[i];
        e.clusters = seg.num_clusters();
        for (const RegionGrid& grid : grids) e.maps.push_back(layer_entropy_map(seg, grid));
        for (std::size_t r = 0; r < upper_rects.size(); ++r)
          e.interactions.push_back(domain_interaction(seg, upper_rects[r], child_rects[r]));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  std::size_t n_threads = cfg.threads > 0 ? static_cast<std::size_t>(cfg.threads)
                                          : static_cast<std::size_t>(hw > 0 ? hw : 1);
  n_threads = std::min(n_threads, n_sizes);
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const Entry& e : entries) rep.cluster_counts.push_back(e.clusters);
  for (std::size_t li = 0; li < rep.layers.size(); ++li)
    for (const Entry& e : entries) rep.entropy_maps.push_back(e.maps[li]);
  for (std::size_t r = 0; r < upper_rects.size(); ++r) {
    InteractionCurve curve;
    curve.upper_region = static_cast<Eigen::Index>(r);
    for (std::size_t i = 0; i < n_sizes; ++i)
      curve.points.emplace_back(rep.component_sizes[i], entries[i].interactions[r]);
    rep.curves.push_back(std::move(curve));
  }
  return rep;
}

template <typename Scalar>
SweepReport entropy_sweep(const Image<Scalar>& img, const std::vector<double>& component_sizes,
                          const std::vector<int>& layers, double sigma = 2.0,
                          std::int64_t min_size = 0, int threads = 0) {
  if (component_sizes.empty()) throw ArgumentError("entropy_sweep: component size list is empty");
  if (layers.empty()) throw ArgumentError("entropy_sweep: layer list is empty");
  SweepConfig cfg;
  cfg.sigma = sigma;
  cfg.component_sizes = component_sizes;
  cfg.layers = layers;
  cfg.min_size = min_size;
  cfg.threads = threads;
  cfg.with_interaction = false;
  return run_sweep(img, cfg);
}

template <typename Scalar>
std::vector<InteractionCurve> interaction_sweep(const Image<Scalar>& img,
                                                const std::vector<double>& component_sizes,
                                                int upper_layer, double sigma = 2.0,
                                                std::int64_t min_size = 0, int threads = 0) {
  if (component_sizes.empty())
    throw ArgumentError("interaction_sweep: component size list is empty");
  SweepConfig cfg;
  cfg.sigma = sigma;
  cfg.component_sizes = component_sizes;
  cfg.upper_layer = upper_layer;
  cfg.min_size = min_size;
  cfg.threads = threads;
  cfg.with_entropy = false;
  return run_sweep(img, cfg).curves;
}

}  // namespace regent
