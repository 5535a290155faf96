#include <gtest/gtest.h>

#include "glyphnet/error.hpp"
#include "glyphnet/imaging.hpp"
#include "glyphnet/persistence.hpp"
#include "test_support.hpp"

namespace glyphnet {
namespace {

BinaryImage glyph(const char* text) { return parse_glyph_text(text); }

TEST(Binarize, AllInkAndBlankPage) {
  EXPECT_EQ(binarize(GrayImage(2, 2, 0), 128), BinaryImage(2, 2, true));
  EXPECT_EQ(binarize(GrayImage(2, 2, 255), 128), BinaryImage(2, 2, false));
}

TEST(Binarize, StrictComparisonAtThreshold) {
  const GrayImage img(2, 2, {100, 200, 128, 127});
  EXPECT_EQ(binarize(img, 128), BinaryImage(2, 2, {1, 0, 0, 1}));
}

TEST(Binarize, MonotoneInThreshold) {
  DeterministicRng rng(3);
  std::vector<std::uint8_t> px(64);
  for (auto& p : px) p = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
  const GrayImage img(8, 8, px);
  for (int t = 0; t < 255; ++t) {
    const auto lo = binarize(img, static_cast<std::uint8_t>(t));
    const auto hi = binarize(img, static_cast<std::uint8_t>(t + 1));
    for (std::size_t i = 0; i < lo.size(); ++i) ASSERT_LE(lo.pixels()[i], hi.pixels()[i]);
  }
}

TEST(Clean, RemovesIsolatedPixel) {
  EXPECT_EQ(clean(glyph("...\n.#.\n...")), BinaryImage(3, 3, false));
}

TEST(Clean, FillsEnclosedHole) {
  EXPECT_EQ(clean(glyph("###\n#.#\n###")), BinaryImage(3, 3, true));
}

TEST(Clean, LeavesRowUntouched) {
  const auto row = glyph("#####");
  EXPECT_EQ(clean(row), row);
}

TEST(Clean, NoIsolatedForegroundRemains) {
  DeterministicRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto out = clean(test::random_binary(rng, 12, 9, 0.3));
    for (std::size_t y = 0; y < out.height(); ++y) {
      for (std::size_t x = 0; x < out.width(); ++x) {
        if (!out.get(x, y)) continue;
        int n = 0;
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx)
            if (dx || dy) n += out.get_or_zero(static_cast<std::ptrdiff_t>(x) + dx,
                                               static_cast<std::ptrdiff_t>(y) + dy);
        ASSERT_GT(n, 0) << "trial " << trial;
      }
    }
  }
}

TEST(Thin, SinglePixelUnchanged) {
  const auto dot = glyph("...\n.#.\n...");
  EXPECT_EQ(thin(dot), dot);
}

TEST(Thin, HorizontalLineUnchanged) {
  const auto line = glyph("#######");
  EXPECT_EQ(thin(line), line);
}

TEST(Thin, SolidBlockCollapsesToCentre) {
  // Frozen from an independent hand-written trace of Zhang-Suen.
  EXPECT_EQ(thin(BinaryImage(5, 5, true)), glyph(".....\n.....\n..#..\n.....\n....."));
  EXPECT_EQ(thin(BinaryImage(7, 3, true)), glyph(".......\n.####..\n......."));
}

TEST(Thin, TwoByTwoBlockVanishes) {
  EXPECT_EQ(thin(BinaryImage(2, 2, true)).count(), 0u);
}

TEST(Thin, MatchesReferenceTrace) {
  DeterministicRng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto img = test::random_binary(rng, 9 + trial % 7, 8 + trial % 5, 0.55);
    ASSERT_EQ(test::to_nested(thin(img)), test::reference_zhang_suen(test::to_nested(img)))
        << "trial " << trial;
  }
}

TEST(Thin, IdempotentAndShrinking) {
  DeterministicRng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto img = test::random_binary(rng, 16, 16, 0.6);
    const auto once = thin(img);
    ASSERT_EQ(thin(once), once);
    for (std::size_t i = 0; i < img.size(); ++i) ASSERT_LE(once.pixels()[i], img.pixels()[i]);
  }
}

TEST(Crop, SinglePixel) {
  BinaryImage img(5, 5);
  img.put(2, 3, true);
  const auto c = crop_to_content(img);
  EXPECT_EQ(c.image, BinaryImage(1, 1, true));
  EXPECT_EQ(c.box, (BoundingBox{2, 3, 2, 3}));
}

TEST(Crop, FullImage) {
  const BinaryImage img(3, 4, true);
  const auto c = crop_to_content(img);
  EXPECT_EQ(c.image, img);
  EXPECT_EQ(c.box, (BoundingBox{0, 0, 2, 3}));
}

TEST(Crop, EmptyImageThrows) {
  try {
    crop_to_content(BinaryImage(4, 4));
    FAIL() << "expected EmptyImage";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyImage);
  }
}

TEST(Crop, TightAndIdempotent) {
  DeterministicRng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto img = test::random_binary(rng, 14, 11, 0.05);
    if (img.count() == 0) continue;
    const auto c = crop_to_content(img);
    const auto& out = c.image;
    bool top = false, bottom = false, left = false, right = false;
    for (std::size_t x = 0; x < out.width(); ++x) {
      top |= out.get(x, 0);
      bottom |= out.get(x, out.height() - 1);
    }
    for (std::size_t y = 0; y < out.height(); ++y) {
      left |= out.get(0, y);
      right |= out.get(out.width() - 1, y);
    }
    ASSERT_TRUE(top && bottom && left && right);
    for (std::size_t y = 0; y < out.height(); ++y)
      for (std::size_t x = 0; x < out.width(); ++x)
        ASSERT_EQ(out.get(x, y), img.get(c.box.x0 + x, c.box.y0 + y));
    ASSERT_EQ(crop_to_content(out).image, out);
  }
}

TEST(Scale, IntegerRatioReplicatesBlocks) {
  DeterministicRng rng(29);
  const auto src = test::random_binary(rng, 10, 10, 0.5);
  const auto out = scale_to_standard(src, 50);
  ASSERT_EQ(out.width(), 50u);
  for (std::size_t y = 0; y < 50; ++y)
    for (std::size_t x = 0; x < 50; ++x) ASSERT_EQ(out.get(x, y), src.get(x / 5, y / 5));
}

TEST(Scale, IdentityAtStandardSize) {
  DeterministicRng rng(31);
  const auto src = test::random_binary(rng, 50, 50, 0.5);
  EXPECT_EQ(scale_to_standard(src, 50), src);
}

TEST(Scale, SinglePixelFillsTarget) {
  EXPECT_EQ(scale_to_standard(BinaryImage(1, 1, true), 50), BinaryImage(50, 50, true));
}

TEST(Scale, AnisotropicStretch) {
  // 1x2 column stretched to 4x4: top half from row 0, bottom from row 1.
  const auto out = scale_to_standard(glyph("#\n."), 4);
  EXPECT_EQ(out, glyph("####\n####\n....\n...."));
}

}  // namespace
}  // namespace glyphnet
