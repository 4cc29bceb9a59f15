#include "orewatch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace orewatch {

WavelengthGrid::WavelengthGrid(std::vector<double> nm) : nm_(std::move(nm)) {
  if (nm_.empty()) fail("wavelength grid: empty");
  double prev = 0.0;
  for (std::size_t i = 0; i < nm_.size(); ++i) {
    if (!std::isfinite(nm_[i]) || nm_[i] <= 0.0) {
      std::ostringstream os;
      os << "wavelength grid: band " << i << " is " << nm_[i] << " (must be finite and > 0)";
      fail(os.str());
    }
    if (i > 0 && nm_[i] <= prev) {
      std::ostringstream os;
      os << "wavelength grid: not strictly increasing at band " << i << " (" << prev
         << " -> " << nm_[i] << ")";
      fail(os.str());
    }
    prev = nm_[i];
  }
}

WavelengthGrid WavelengthGrid::linspace(double lo, double hi, std::size_t n) {
  if (n < 2) fail("wavelength grid: linspace needs at least 2 bands");
  std::vector<double> nm(n);
  for (std::size_t i = 0; i < n; ++i)
    nm[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return WavelengthGrid(std::move(nm));
}

WavelengthGrid WavelengthGrid::stepped(double lo, double hi, double step) {
  if (step <= 0.0) fail("wavelength grid: step must be > 0");
  std::vector<double> nm;
  for (double w = lo; w <= hi + 1e-9; w += step) nm.push_back(w);
  return WavelengthGrid(std::move(nm));
}

HyperspectralCube::HyperspectralCube(std::size_t height, std::size_t width, GridPtr grid)
    : height_(height), width_(width), grid_(std::move(grid)) {
  if (!grid_) fail("cube: null wavelength grid");
  data_.assign(height_ * width_ * grid_->size(), 0.0f);
}

HyperspectralCube::HyperspectralCube(std::size_t height, std::size_t width, GridPtr grid,
                                     std::vector<float> data)
    : height_(height), width_(width), grid_(std::move(grid)), data_(std::move(data)) {
  if (!grid_) fail("cube: null wavelength grid");
  if (data_.size() != height_ * width_ * grid_->size()) {
    std::ostringstream os;
    os << "cube: data length " << data_.size() << " != " << height_ << "*" << width_ << "*"
       << grid_->size();
    fail(os.str());
  }
}

Spectrum HyperspectralCube::pixel_spectrum(std::size_t row, std::size_t col) const {
  Spectrum s;
  s.grid = grid_;
  s.values.resize(bands());
  gather_pixel(row * width_ + col, s.values);
  return s;
}

void HyperspectralCube::gather_pixel(std::size_t p, std::span<float> out) const {
  const std::size_t plane = pixels();
  const float* base = data_.data() + p;
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = base[b * plane];
}

void HyperspectralCube::set_pixel(std::size_t p, std::span<const float> values) {
  const std::size_t plane = pixels();
  float* base = data_.data() + p;
  for (std::size_t b = 0; b < values.size(); ++b) base[b * plane] = values[b];
}

HyperspectralCube calibrate(const HyperspectralCube& raw, const Rect& panel_region,
                            double panel_reflectance) {
  if (panel_region.height == 0 || panel_region.width == 0 ||
      panel_region.row + panel_region.height > raw.height() ||
      panel_region.col + panel_region.width > raw.width())
    fail("calibrate: panel region outside raster");
  if (panel_reflectance <= 0.0) fail("calibrate: panel reflectance must be > 0");

  const std::size_t count = panel_region.height * panel_region.width;
  HyperspectralCube out(raw.height(), raw.width(), raw.grid_ptr());
  for (std::size_t b = 0; b < raw.bands(); ++b) {
    double sum = 0.0;
    for (std::size_t r = 0; r < panel_region.height; ++r)
      for (std::size_t c = 0; c < panel_region.width; ++c)
        sum += raw.at(panel_region.row + r, panel_region.col + c, b);
    const double mean = sum / static_cast<double>(count);
    if (mean <= 0.0) {
      std::ostringstream os;
      os << "calibrate: non-positive panel mean " << mean << " in band " << b;
      fail(os.str());
    }
    const double scale = panel_reflectance / mean;
    auto src = raw.band_plane(b);
    auto dst = out.band_plane(b);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const double v = src[i] * scale;
      dst[i] = v < 0.0 ? 0.0f : static_cast<float>(v);
    }
  }
  return out;
}

LinearResampler::LinearResampler(const WavelengthGrid& source, const WavelengthGrid& target)
    : source_bands_(source.size()) {
  if (target.front() < source.front() || target.back() > source.back()) {
    std::ostringstream os;
    os << "resample: target range [" << target.front() << ", " << target.back()
       << "] nm outside source range [" << source.front() << ", " << source.back() << "] nm";
    fail(os.str());
  }
  lo_index_.resize(target.size());
  frac_.resize(target.size());
  std::size_t i = 0;
  for (std::size_t j = 0; j < target.size(); ++j) {
    const double t = target[j];
    while (i + 2 < source.size() && source[i + 1] <= t) ++i;
    lo_index_[j] = static_cast<std::uint32_t>(i);
    frac_[j] = (t - source[i]) / (source[i + 1] - source[i]);
  }
}

void LinearResampler::apply(std::span<const float> in, std::span<float> out) const {
  if (in.size() != source_bands_ || out.size() != lo_index_.size())
    fail("resample: value length does not match grids");
  for (std::size_t j = 0; j < out.size(); ++j) {
    const std::size_t i = lo_index_[j];
    const double f = frac_[j];
    out[j] = static_cast<float>((1.0 - f) * in[i] + f * in[i + 1]);
  }
}

Spectrum resample_spectrum(const Spectrum& s, GridPtr target) {
  if (!s.grid || !target) fail("resample: null grid");
  if (s.values.size() != s.grid->size()) fail("resample: spectrum length != grid length");
  LinearResampler r(*s.grid, *target);
  Spectrum out;
  out.grid = std::move(target);
  out.values.resize(r.target_bands());
  r.apply(s.values, out.values);
  return out;
}

void mean_offset_values(std::span<float> values) {
  if (values.empty()) return;
  double sum = 0.0;
  for (float v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double residual = 0.0;
  for (float& v : values) {
    const double w = v - mean;
    residual += w;
    v = static_cast<float>(w);
  }
  // Second pass removes the accumulated rounding of the first.
  const double correction = residual / static_cast<double>(values.size());
  for (float& v : values) v = static_cast<float>(v - correction);
}

Spectrum mean_offset(const Spectrum& s) {
  Spectrum out = s;
  mean_offset_values(out.values);
  return out;
}

namespace {

// Kahan's angle formula: theta = 2*atan2(|b|a - |a|b, |b|a + |a|b).
// Exactly parallel inputs give ~1e-16 instead of the ~1e-7 floor of
// acos(clamped cosine).
template <typename T>
double angle_impl(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) fail("spectral_angle: length mismatch");
  if (a.empty()) fail("spectral_angle: empty input");
  double na2 = 0.0, nb2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na2 += static_cast<double>(a[i]) * static_cast<double>(a[i]);
    nb2 += static_cast<double>(b[i]) * static_cast<double>(b[i]);
  }
  if (na2 == 0.0 || nb2 == 0.0) fail("spectral_angle: zero-norm input vector");
  const double na = std::sqrt(na2), nb = std::sqrt(nb2);
  double diff2 = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double u = nb * static_cast<double>(a[i]);
    const double v = na * static_cast<double>(b[i]);
    diff2 += (u - v) * (u - v);
    sum2 += (u + v) * (u + v);
  }
  return 2.0 * std::atan2(std::sqrt(diff2), std::sqrt(sum2));
}

}  // namespace

double spectral_angle(std::span<const float> a, std::span<const float> b) {
  return angle_impl(a, b);
}

double spectral_angle(std::span<const double> a, std::span<const double> b) {
  return angle_impl(a, b);
}

}  // namespace orewatch
