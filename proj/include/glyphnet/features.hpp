#ifndef GLYPHNET_FEATURES_HPP
#define GLYPHNET_FEATURES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "glyphnet/image.hpp"
#include "glyphnet/imaging.hpp"

namespace glyphnet {

struct GridSpec {
  std::size_t rows = 5;
  std::size_t cols = 5;
  /// A cell digitizes to 1 when it holds at least this many foreground pixels.
  std::size_t min_pixels = 1;

  std::size_t cells() const noexcept { return rows * cols; }
};

/// Row-major grid bits, top-left cell first. This order is part of the
/// feature-file and model contract.
struct FeatureVector {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::vector<double> as_reals() const;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
  friend auto operator<=>(const FeatureVector&, const FeatureVector&) = default;
};

struct PipelineConfig {
  std::uint8_t threshold = kDefaultThreshold;
  std::size_t standard_side = 50;
  GridSpec grid{};

  /// Throws InvalidArgument unless standard_side is divisible by the grid
  /// dimensions and min_pixels >= 1.
  void validate() const;
};

/// Splits a square image into rows x cols equal cells, row-major.
/// Throws IndivisibleSize for non-square or non-divisible images.
std::vector<BinaryImage> segment(const BinaryImage& img, const GridSpec& grid);

/// Throws CellCountMismatch when cells.size() != rows * cols.
FeatureVector digitize(std::span<const BinaryImage> cells, const GridSpec& grid);

/// binarize -> clean -> crop -> scale -> thin -> segment -> digitize.
/// Throws EmptyImage if nothing survives binarization and cleaning.
FeatureVector extract_features(const GrayImage& img, const PipelineConfig& config = {});

/// The same pipeline starting from an already binarized image.
FeatureVector extract_features(const BinaryImage& img, const PipelineConfig& config = {});

}  // namespace glyphnet

#endif  // GLYPHNET_FEATURES_HPP
