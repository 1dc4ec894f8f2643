#include "regent/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace regent {

std::vector<double> default_component_sizes() {
  std::vector<double> sizes;
  for (int k = 100; k <= 900; k += 100) sizes.push_back(k);
  for (int k = 1000; k <= 10000; k += 1000) sizes.push_back(k);
  return sizes;
}

namespace detail {

std::vector<double> normalize_component_sizes(std::vector<double> sizes) {
  if (sizes.empty()) throw ArgumentError("sweep: component size list is empty");
  for (double k : sizes)
    if (!(k > 0.0)) throw ArgumentError("sweep: component sizes must be > 0");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

std::vector<int> resolve_layers(const std::vector<int>& requested, Eigen::Index width,
                                Eigen::Index height) {
  const int max = RegionGrid::max_layer(width, height);
  std::vector<int> layers;
  if (requested.empty()) {
    for (int n = 0; n <= std::min(6, max); ++n) layers.push_back(n);
    return layers;
  }
  layers = requested;
  std::sort(layers.begin(), layers.end());
  layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
  for (int n : layers)
    if (n < 0 || n > max)
      throw ArgumentError("sweep: layer " + std::to_string(n) + " is illegal for a " +
                          std::to_string(width) + "x" + std::to_string(height) +
                          " image; maximum legal layer is " + std::to_string(max));
  return layers;
}

}  // namespace detail

bool SweepReport::has_layer(int layer) const {
  return std::find(layers.begin(), layers.end(), layer) != layers.end();
}

const EntropyMap& SweepReport::entropy_map(int layer, double component_size) const {
  for (const EntropyMap& m : entropy_maps)
    if (m.layer == layer && m.component_size == component_size) return m;
  throw ArgumentError("SweepReport: no entropy map for layer " + std::to_string(layer) +
                      ", component size " + std::to_string(component_size));
}

std::vector<Eigen::Index> persistent_regions(const SweepReport& report, int layer,
                                             double k_threshold, double h_threshold) {
  if (!report.has_layer(layer))
    throw ArgumentError("persistent_regions: the report holds no entropy maps at layer " +
                        std::to_string(layer));
  std::vector<double> sizes;
  for (double k : report.component_sizes)
    if (k >= k_threshold) sizes.push_back(k);
  if (sizes.empty())
    throw ArgumentError("persistent_regions: no swept component size >= " +
                        std::to_string(k_threshold));

  std::vector<const EntropyMap*> maps;
  for (double k : sizes) maps.push_back(&report.entropy_map(layer, k));

  std::vector<Eigen::Index> regions;
  const Eigen::Index count = maps.front()->region_count();
  for (Eigen::Index r = 0; r < count; ++r) {
    bool persistent = true;
    for (const EntropyMap* m : maps)
      if (m->value(r) < h_threshold) {
        persistent = false;
        break;
      }
    if (persistent) regions.push_back(r);
  }
  return regions;
}

double select_component_size(const std::vector<InteractionCurve>& curves) {
  if (curves.empty()) throw ArgumentError("select_component_size: no curves");
  const auto& axis = curves.front().points;
  if (axis.empty()) throw ArgumentError("select_component_size: empty curve");
  for (const InteractionCurve& c : curves) {
    if (c.points.size() != axis.size())
      throw ArgumentError("select_component_size: curves disagree on the component-size axis");
    for (std::size_t i = 0; i < axis.size(); ++i)
      if (c.points[i].first != axis[i].first)
        throw ArgumentError("select_component_size: curves disagree on the component-size axis");
  }

  double best_size = axis.front().first;
  double best_mean = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < axis.size(); ++i) {
    double sum = 0.0;
    for (const InteractionCurve& c : curves) sum += c.points[i].second;
    double mean = sum / static_cast<double>(curves.size());
    if (mean < best_mean) {  // strict: ties keep the smaller (earlier) size
      best_mean = mean;
      best_size = axis[i].first;
    }
  }
  return best_size;
}

ComponentSizeDiff diff_component_size(double k_selected, double k_reference) {
  if (!(k_selected > 0.0) || !(k_reference > 0.0))
    throw ArgumentError("diff_component_size: component sizes must be > 0");
  ComponentSizeDiff d;
  d.diff = std::abs(k_selected - k_reference);
  d.group = d.diff < kDiffGroupThreshold ? DiffGroup::a : DiffGroup::b;
  return d;
}

}  // namespace regent
