#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "orewatch/error.hpp"

namespace orewatch {

inline constexpr std::uint8_t kUnlabelled = 255;

// Strictly increasing band-center wavelengths in nanometres.
class WavelengthGrid {
 public:
  WavelengthGrid() = default;
  explicit WavelengthGrid(std::vector<double> nm);

  std::size_t size() const { return nm_.size(); }
  double operator[](std::size_t i) const { return nm_[i]; }
  const std::vector<double>& values() const { return nm_; }
  double front() const { return nm_.front(); }
  double back() const { return nm_.back(); }
  bool operator==(const WavelengthGrid& other) const { return nm_ == other.nm_; }

  static WavelengthGrid linspace(double lo, double hi, std::size_t n);
  // Inclusive arithmetic grid lo, lo+step, ... while <= hi + 1e-9.
  static WavelengthGrid stepped(double lo, double hi, double step);

 private:
  std::vector<double> nm_;
};

using GridPtr = std::shared_ptr<const WavelengthGrid>;

inline GridPtr make_grid(std::vector<double> nm) {
  return std::make_shared<const WavelengthGrid>(std::move(nm));
}

struct Spectrum {
  std::vector<float> values;
  GridPtr grid;

  std::size_t bands() const { return values.size(); }
};

// Band-sequential raster: data[band*H*W + row*W + col].
class HyperspectralCube {
 public:
  HyperspectralCube() = default;
  HyperspectralCube(std::size_t height, std::size_t width, GridPtr grid);
  HyperspectralCube(std::size_t height, std::size_t width, GridPtr grid, std::vector<float> data);

  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t bands() const { return grid_ ? grid_->size() : 0; }
  std::size_t pixels() const { return height_ * width_; }

  float at(std::size_t row, std::size_t col, std::size_t band) const {
    return data_[band * height_ * width_ + row * width_ + col];
  }
  float& at(std::size_t row, std::size_t col, std::size_t band) {
    return data_[band * height_ * width_ + row * width_ + col];
  }

  std::span<const float> band_plane(std::size_t band) const {
    return {data_.data() + band * pixels(), pixels()};
  }
  std::span<float> band_plane(std::size_t band) {
    return {data_.data() + band * pixels(), pixels()};
  }

  Spectrum pixel_spectrum(std::size_t row, std::size_t col) const;
  // Gathers the spectrum of flat pixel index p (row-major) into out.
  void gather_pixel(std::size_t p, std::span<float> out) const;
  void set_pixel(std::size_t p, std::span<const float> values);

  const std::vector<float>& data() const { return data_; }
  std::vector<float>& data() { return data_; }
  const WavelengthGrid& grid() const { return *grid_; }
  GridPtr grid_ptr() const { return grid_; }

 private:
  std::size_t height_ = 0, width_ = 0;
  GridPtr grid_;
  std::vector<float> data_;
};

struct LabelRaster {
  std::size_t height = 0, width = 0;
  std::vector<std::uint8_t> labels;

  LabelRaster() = default;
  LabelRaster(std::size_t h, std::size_t w, std::uint8_t fill = kUnlabelled)
      : height(h), width(w), labels(h * w, fill) {}

  std::uint8_t at(std::size_t row, std::size_t col) const { return labels[row * width + col]; }
  std::uint8_t& at(std::size_t row, std::size_t col) { return labels[row * width + col]; }
  std::size_t pixels() const { return height * width; }
};

struct Rect {
  std::size_t row = 0, col = 0, height = 0, width = 0;
};

// Labelled spectra on a common grid (pretraining corpus, train/val/test sets).
struct LabelledSpectra {
  std::vector<std::vector<float>> rows;
  std::vector<int> labels;
  GridPtr grid;

  std::size_t size() const { return rows.size(); }
};

// Panel calibration to apparent reflectance: out = raw * panel_reflectance /
// mean(panel band). Negative results clamp to 0; values above 1 are kept.
HyperspectralCube calibrate(const HyperspectralCube& raw, const Rect& panel_region,
                            double panel_reflectance);

// Piecewise-linear resampling onto a target grid. Target range must lie
// within the source range (no extrapolation).
class LinearResampler {
 public:
  LinearResampler(const WavelengthGrid& source, const WavelengthGrid& target);
  void apply(std::span<const float> in, std::span<float> out) const;
  std::size_t target_bands() const { return lo_index_.size(); }

 private:
  std::vector<std::uint32_t> lo_index_;
  std::vector<double> frac_;
  std::size_t source_bands_ = 0;
};

Spectrum resample_spectrum(const Spectrum& s, GridPtr target);

// Shifts values so the mean is zero (double accumulation, two passes).
Spectrum mean_offset(const Spectrum& s);
void mean_offset_values(std::span<float> values);

// Angle between spectra in radians: arccos of the cosine similarity,
// evaluated with Kahan's atan2 form so exactly parallel vectors give ~0
// instead of sqrt(rounding). Throws on a zero-norm input.
double spectral_angle(std::span<const float> a, std::span<const float> b);
double spectral_angle(std::span<const double> a, std::span<const double> b);

}  // namespace orewatch
