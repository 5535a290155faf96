#include "glyphnet/imaging.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "glyphnet/error.hpp"

namespace glyphnet {

template <typename Pixel>
Raster<Pixel>::Raster(std::size_t width, std::size_t height, Pixel fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
  if (width == 0 || height == 0) {
    throw Error(ErrorKind::InvalidArgument, "raster dimensions must be positive");
  }
}

template <typename Pixel>
Raster<Pixel>::Raster(std::size_t width, std::size_t height, std::vector<Pixel> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) {
    throw Error(ErrorKind::InvalidArgument, "raster dimensions must be positive");
  }
  if (pixels_.size() != width * height) {
    throw Error(ErrorKind::DimensionMismatch,
                "pixel count " + std::to_string(pixels_.size()) + " != " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

template class Raster<std::uint8_t>;

namespace {

std::vector<std::uint8_t> normalized(std::vector<std::uint8_t> bits) {
  for (auto& b : bits) b = b != 0 ? 1 : 0;
  return bits;
}

// Neighbours P2..P9 of Zhang-Suen, clockwise from north.
constexpr std::array<std::array<int, 2>, 8> kRing = {{
    {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1},
}};

}  // namespace

BinaryImage::BinaryImage(std::size_t width, std::size_t height, bool fill)
    : Raster(width, height, static_cast<std::uint8_t>(fill ? 1 : 0)) {}

BinaryImage::BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits)
    : Raster(width, height, normalized(std::move(bits))) {}

bool BinaryImage::get_or_zero(std::ptrdiff_t x, std::ptrdiff_t y) const {
  if (x < 0 || y < 0 || x >= static_cast<std::ptrdiff_t>(width()) ||
      y >= static_cast<std::ptrdiff_t>(height())) {
    return false;
  }
  return get(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
}

std::size_t BinaryImage::count() const noexcept {
  return static_cast<std::size_t>(std::count(pixels().begin(), pixels().end(), 1));
}

BinaryImage binarize(const GrayImage& img, std::uint8_t threshold) {
  std::vector<std::uint8_t> bits(img.size());
  std::transform(img.pixels().begin(), img.pixels().end(), bits.begin(),
                 [threshold](std::uint8_t v) { return v < threshold ? 1 : 0; });
  return BinaryImage(img.width(), img.height(), std::move(bits));
}

BinaryImage clean(const BinaryImage& img) {
  BinaryImage out = img;
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      int neighbours = 0;
      for (const auto& [dx, dy] : kRing) {
        neighbours += img.get_or_zero(static_cast<std::ptrdiff_t>(x) + dx,
                                      static_cast<std::ptrdiff_t>(y) + dy);
      }
      if (img.get(x, y) && neighbours == 0) {
        out.put(x, y, false);
      } else if (!img.get(x, y) && neighbours == 8) {
        out.put(x, y, true);
      }
    }
  }
  return out;
}

namespace {

// One Zhang-Suen sub-pass. Deletions are decided on `img` and applied
// together; returns whether anything was removed.
bool thinning_subpass(BinaryImage& img, bool first) {
  std::vector<std::size_t> doomed;
  const auto w = img.width();
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (!img.get(x, y)) continue;
      std::array<bool, 8> p{};
      for (std::size_t k = 0; k < 8; ++k) {
        p[k] = img.get_or_zero(static_cast<std::ptrdiff_t>(x) + kRing[k][0],
                               static_cast<std::ptrdiff_t>(y) + kRing[k][1]);
      }
      const int b = static_cast<int>(std::count(p.begin(), p.end(), true));
      if (b < 2 || b > 6) continue;
      int a = 0;
      for (std::size_t k = 0; k < 8; ++k) {
        if (!p[k] && p[(k + 1) % 8]) ++a;
      }
      if (a != 1) continue;
      // p[0]=P2 (N), p[2]=P4 (E), p[4]=P6 (S), p[6]=P8 (W)
      const bool n = p[0], e = p[2], s = p[4], wst = p[6];
      const bool keep = first ? ((n && e && s) || (e && s && wst))
                              : ((n && e && wst) || (n && s && wst));
      if (keep) continue;
      doomed.push_back(y * w + x);
    }
  }
  for (auto idx : doomed) img.put(idx % w, idx / w, false);
  return !doomed.empty();
}

}  // namespace

BinaryImage thin(const BinaryImage& img) {
  BinaryImage out = img;
  bool changed = true;
  while (changed) {
    const bool a = thinning_subpass(out, true);
    const bool b = thinning_subpass(out, false);
    changed = a || b;
  }
  return out;
}

Cropped crop_to_content(const BinaryImage& img) {
  std::size_t x0 = img.width(), y0 = img.height(), x1 = 0, y1 = 0;
  bool any = false;
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (!img.get(x, y)) continue;
      any = true;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!any) throw Error(ErrorKind::EmptyImage, "no foreground pixels to crop");

  BoundingBox box{x0, y0, x1, y1};
  BinaryImage out(box.width(), box.height());
  for (std::size_t y = 0; y < box.height(); ++y) {
    for (std::size_t x = 0; x < box.width(); ++x) {
      out.put(x, y, img.get(x0 + x, y0 + y));
    }
  }
  return {std::move(out), box};
}

BinaryImage scale_to_standard(const BinaryImage& img, std::size_t side) {
  if (side == 0) throw Error(ErrorKind::InvalidArgument, "standard side must be >= 1");
  BinaryImage out(side, side);
  for (std::size_t y = 0; y < side; ++y) {
    const std::size_t sy = y * img.height() / side;
    for (std::size_t x = 0; x < side; ++x) {
      out.put(x, y, img.get(x * img.width() / side, sy));
    }
  }
  return out;
}

}  // namespace glyphnet
