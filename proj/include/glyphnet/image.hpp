#ifndef GLYPHNET_IMAGE_HPP
#define GLYPHNET_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace glyphnet {

/// Row-major raster with a fixed width and height. Construction validates
/// that the pixel buffer matches the dimensions.
template <typename Pixel>
class Raster {
 public:
  Raster(std::size_t width, std::size_t height, Pixel fill = Pixel{});
  Raster(std::size_t width, std::size_t height, std::vector<Pixel> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  Pixel at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
  void set(std::size_t x, std::size_t y, Pixel v) { pixels_[y * width_ + x] = v; }

  std::span<const Pixel> pixels() const noexcept { return pixels_; }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Pixel> pixels_;
};

/// Intensities 0-255; 0 is darkest ink, 255 is white paper.
class GrayImage : public Raster<std::uint8_t> {
 public:
  using Raster::Raster;
};

/// Bits are 1 for foreground ink and 0 for background.
class BinaryImage : public Raster<std::uint8_t> {
 public:
  BinaryImage(std::size_t width, std::size_t height, bool fill = false);
  /// Any nonzero entry is stored as 1.
  BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits);

  bool get(std::size_t x, std::size_t y) const { return at(x, y) != 0; }
  void put(std::size_t x, std::size_t y, bool on) { set(x, y, on ? 1 : 0); }

  /// Out-of-bounds reads return background.
  bool get_or_zero(std::ptrdiff_t x, std::ptrdiff_t y) const;

  std::size_t count() const noexcept;
};

/// Inclusive pixel rectangle.
struct BoundingBox {
  std::size_t x0 = 0;
  std::size_t y0 = 0;
  std::size_t x1 = 0;
  std::size_t y1 = 0;

  std::size_t width() const noexcept { return x1 - x0 + 1; }
  std::size_t height() const noexcept { return y1 - y0 + 1; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

}  // namespace glyphnet

#endif  // GLYPHNET_IMAGE_HPP
