#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "regent/errors.hpp"

namespace regent {

/// Interleaved 8-bit RGB raster, row-major. Exchange format between the
/// codecs (PNG/JPEG/PPM), the renderers, and the floating-point image type.
struct Rgb8Image {
  Eigen::Index width = 0;
  Eigen::Index height = 0;
  std::vector<std::uint8_t> data;  // 3 * width * height bytes, RGB order

  Rgb8Image() = default;
  Rgb8Image(Eigen::Index w, Eigen::Index h)
      : width(w), height(h), data(static_cast<std::size_t>(3 * w * h), 0) {}

  std::uint8_t& at(Eigen::Index x, Eigen::Index y, int c) {
    return data[static_cast<std::size_t>(3 * (y * width + x) + c)];
  }
  std::uint8_t at(Eigen::Index x, Eigen::Index y, int c) const {
    return data[static_cast<std::size_t>(3 * (y * width + x) + c)];
  }
};

/// An RGB image held as three dense channel planes at floating precision.
/// Channel values live in [0, 255]; smoothing keeps them fractional instead
/// of re-quantizing, so downstream edge weights are not quantization
/// artifacts. Plane indexing is (row, col) == (y, x).
template <typename Scalar = double>
struct Image {
  using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  std::array<Plane, 3> ch;  // r, g, b

  Image() = default;
  Image(Eigen::Index width, Eigen::Index height) {
    for (auto& p : ch) p = Plane::Zero(height, width);
  }

  Eigen::Index width() const { return ch[0].cols(); }
  Eigen::Index height() const { return ch[0].rows(); }
  Eigen::Index pixel_count() const { return width() * height(); }
  bool empty() const { return pixel_count() == 0; }

  /// Row-major pixel index, the id used by the segmentation graph.
  Eigen::Index pixel_index(Eigen::Index x, Eigen::Index y) const { return y * width() + x; }

  static Image constant(Eigen::Index width, Eigen::Index height, Scalar r, Scalar g, Scalar b) {
    Image img;
    img.ch[0] = Plane::Constant(height, width, r);
    img.ch[1] = Plane::Constant(height, width, g);
    img.ch[2] = Plane::Constant(height, width, b);
    return img;
  }
};

template <typename Scalar = double>
Image<Scalar> to_image(const Rgb8Image& raw) {
  Image<Scalar> img(raw.width, raw.height);
  for (Eigen::Index y = 0; y < raw.height; ++y)
    for (Eigen::Index x = 0; x < raw.width; ++x)
      for (int c = 0; c < 3; ++c) img.ch[c](y, x) = static_cast<Scalar>(raw.at(x, y, c));
  return img;
}

/// Quantize back to 8-bit (round half away from zero, clamp to [0, 255]).
template <typename Scalar>
Rgb8Image to_rgb8(const Image<Scalar>& img) {
  Rgb8Image raw(img.width(), img.height());
  for (Eigen::Index y = 0; y < raw.height; ++y)
    for (Eigen::Index x = 0; x < raw.width; ++x)
      for (int c = 0; c < 3; ++c) {
        double v = std::round(static_cast<double>(img.ch[c](y, x)));
        raw.at(x, y, c) = static_cast<std::uint8_t>(v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v));
      }
  return raw;
}

/// One-sided Gaussian taps exp(-i^2 / (2 sigma^2)) for i in [-radius, radius],
/// radius = ceil(3 sigma), normalized to unit sum.
inline std::vector<double> gaussian_kernel(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    k[static_cast<std::size_t>(i + radius)] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

/// Separable Gaussian convolution, borders clamped to the nearest edge pixel.
/// sigma == 0 returns an identical copy. Accumulation is in double regardless
/// of the image scalar.
template <typename Scalar>
Image<Scalar> gaussian_smooth(const Image<Scalar>& img, double sigma) {
  if (!(sigma >= 0.0)) throw ArgumentError("gaussian_smooth: sigma must be >= 0");
  if (img.empty()) throw ArgumentError("gaussian_smooth: empty image");
  if (sigma == 0.0) return img;

  const std::vector<double> kernel = gaussian_kernel(sigma);
  const int radius = (static_cast<int>(kernel.size()) - 1) / 2;
  const Eigen::Index w = img.width(), h = img.height();

  auto clamp = [](Eigen::Index v, Eigen::Index hi) { return v < 0 ? 0 : (v >= hi ? hi - 1 : v); };

  Image<Scalar> out(w, h);
  Eigen::ArrayXXd tmp(h, w);
  for (int c = 0; c < 3; ++c) {
    // horizontal pass
    for (Eigen::Index y = 0; y < h; ++y)
      for (Eigen::Index x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int i = -radius; i <= radius; ++i)
          acc += kernel[static_cast<std::size_t>(i + radius)] *
                 static_cast<double>(img.ch[c](y, clamp(x + i, w)));
        tmp(y, x) = acc;
      }
    // vertical pass
    for (Eigen::Index y = 0; y < h; ++y)
      for (Eigen::Index x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int i = -radius; i <= radius; ++i)
          acc += kernel[static_cast<std::size_t>(i + radius)] * tmp(clamp(y + i, h), x);
        out.ch[c](y, x) = static_cast<Scalar>(acc);
      }
  }
  return out;
}

// --- codecs (implemented in src/image_io.cpp) ---

/// Decode a raster file; the format is sniffed from magic bytes
/// (PNG, JPEG, or binary PPM "P6").
Rgb8Image load_rgb8(const std::string& path);

void save_png(const std::string& path, const Rgb8Image& img);
void save_ppm(const std::string& path, const Rgb8Image& img);

template <typename Scalar = double>
Image<Scalar> load_image(const std::string& path) {
  return to_image<Scalar>(load_rgb8(path));
}

template <typename Scalar>
void save_image_png(const std::string& path, const Image<Scalar>& img) {
  save_png(path, to_rgb8(img));
}

template <typename Scalar>
void save_image_ppm(const std::string& path, const Image<Scalar>& img) {
  save_ppm(path, to_rgb8(img));
}

}  // namespace regent
