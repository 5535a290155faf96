#include "glyphnet/features.hpp"

#include <string>

#include "glyphnet/error.hpp"

namespace glyphnet {

std::vector<double> FeatureVector::as_reals() const {
  return {bits.begin(), bits.end()};
}

void PipelineConfig::validate() const {
  if (grid.rows == 0 || grid.cols == 0) {
    throw Error(ErrorKind::InvalidArgument, "grid dimensions must be positive");
  }
  if (grid.min_pixels == 0) {
    throw Error(ErrorKind::InvalidArgument, "min_pixels must be >= 1");
  }
  if (standard_side == 0 || standard_side % grid.rows != 0 || standard_side % grid.cols != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "standard side " + std::to_string(standard_side) +
                    " is not divisible by the grid");
  }
}

std::vector<BinaryImage> segment(const BinaryImage& img, const GridSpec& grid) {
  const std::size_t side = img.width();
  if (img.height() != side || grid.rows == 0 || grid.cols == 0 || side % grid.rows != 0 ||
      side % grid.cols != 0) {
    throw Error(ErrorKind::IndivisibleSize,
                std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                    " image cannot be split into a " + std::to_string(grid.rows) + "x" +
                    std::to_string(grid.cols) + " grid");
  }
  const std::size_t ch = side / grid.rows;
  const std::size_t cw = side / grid.cols;
  std::vector<BinaryImage> cells;
  cells.reserve(grid.cells());
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      BinaryImage cell(cw, ch);
      for (std::size_t y = 0; y < ch; ++y) {
        for (std::size_t x = 0; x < cw; ++x) {
          cell.put(x, y, img.get(c * cw + x, r * ch + y));
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

FeatureVector digitize(std::span<const BinaryImage> cells, const GridSpec& grid) {
  if (cells.size() != grid.cells()) {
    throw Error(ErrorKind::CellCountMismatch,
                "expected " + std::to_string(grid.cells()) + " cells, got " +
                    std::to_string(cells.size()));
  }
  FeatureVector fv;
  fv.bits.reserve(cells.size());
  for (const auto& cell : cells) {
    fv.bits.push_back(cell.count() >= grid.min_pixels ? 1 : 0);
  }
  return fv;
}

FeatureVector extract_features(const BinaryImage& img, const PipelineConfig& config) {
  config.validate();
  const auto cropped = crop_to_content(clean(img));
  const auto skeleton = thin(scale_to_standard(cropped.image, config.standard_side));
  const auto cells = segment(skeleton, config.grid);
  return digitize(cells, config.grid);
}

FeatureVector extract_features(const GrayImage& img, const PipelineConfig& config) {
  return extract_features(binarize(img, config.threshold), config);
}

}  // namespace glyphnet
