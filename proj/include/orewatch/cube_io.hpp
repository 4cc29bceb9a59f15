#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orewatch/spectral.hpp"

namespace orewatch {

// Ordered `key = value` text file. Used for cube/label headers, atmosphere
// curves, run configs and metadata sidecars. Values may be brace lists
// spanning multiple lines; '#' starts a comment.
class KvFile {
 public:
  KvFile() = default;
  static KvFile parse_file(const std::filesystem::path& path);
  static KvFile parse_text(const std::string& text, std::string origin = "<text>");

  bool has(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  const std::string& require(const std::string& key) const;
  long long require_int(const std::string& key) const;
  double require_double(const std::string& key) const;
  // Parses "{a, b, c}" (or a bare comma list) of doubles.
  std::vector<double> require_list(const std::string& key) const;

  void set(const std::string& key, const std::string& value);
  void set_int(const std::string& key, long long value);
  void set_double(const std::string& key, double value);
  void set_list(const std::string& key, std::span<const double> values);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  void save(const std::filesystem::path& path) const;
  std::string to_text() const;
  const std::string& origin() const { return origin_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::string origin_ = "<empty>";
};

// Cube files: `<path>` holds raw band-sequential little-endian float32 data,
// `<path>.hdr` a text header with samples/lines/bands/interleave/data type/
// byte order/wavelengths. read_cube accepts either the data or header path.
HyperspectralCube read_cube(const std::filesystem::path& path);
void write_cube(const HyperspectralCube& cube, const std::filesystem::path& path);

// Label rasters: raw uint8 data plus a text header; 255 = unlabelled.
LabelRaster read_labels(const std::filesystem::path& path);
void write_labels(const LabelRaster& labels, const std::filesystem::path& path);

// Labelled-spectra sets (pretraining corpus and friends): a small key=value
// preamble then one `label v0 v1 ...` line per spectrum.
LabelledSpectra read_labelled_spectra(const std::filesystem::path& path);
void write_labelled_spectra(const LabelledSpectra& set, const std::filesystem::path& path);

// 8-bit binary PGM (P5) / PPM (P6) writers for rendered maps.
void write_pgm(const std::filesystem::path& path, std::size_t height, std::size_t width,
               std::span<const std::uint8_t> gray);
void write_ppm(const std::filesystem::path& path, std::size_t height, std::size_t width,
               std::span<const std::uint8_t> rgb);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// FNV-1a 64 hash of a file's bytes as "fnv1a:<hex>".
std::string hash_file(const std::filesystem::path& path);

}  // namespace orewatch
