#ifndef GLYPHNET_IMAGING_HPP
#define GLYPHNET_IMAGING_HPP

#include <cstdint>

#include "glyphnet/image.hpp"

namespace glyphnet {

inline constexpr std::uint8_t kDefaultThreshold = 128;

/// Bit is set where intensity < threshold (dark ink).
BinaryImage binarize(const GrayImage& img, std::uint8_t threshold = kDefaultThreshold);

/// Single pass: clears foreground pixels without foreground 8-neighbours and
/// fills background pixels whose 8 neighbours are all foreground. Both rules
/// read the input image; pixels outside the image count as background.
BinaryImage clean(const BinaryImage& img);

/// Zhang-Suen thinning, iterated until a full iteration deletes nothing.
BinaryImage thin(const BinaryImage& img);

struct Cropped {
  BinaryImage image;
  BoundingBox box;
};

/// Tight crop around the foreground. Throws EmptyImage when there is none.
Cropped crop_to_content(const BinaryImage& img);

/// Nearest-neighbour resample to side x side, each axis independently:
/// src = floor(dst * src_dim / side).
BinaryImage scale_to_standard(const BinaryImage& img, std::size_t side);

}  // namespace glyphnet

#endif  // GLYPHNET_IMAGING_HPP
