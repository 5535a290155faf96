#ifndef GLYPHNET_SYNTHGEN_HPP
#define GLYPHNET_SYNTHGEN_HPP

#include <cstddef>
#include <cstdint>

#include "glyphnet/dataset.hpp"
#include "glyphnet/image.hpp"
#include "glyphnet/letters.hpp"
#include "glyphnet/rng.hpp"

namespace glyphnet {

inline constexpr std::size_t kGlyphSide = 50;

/// Bounds of the random distortions applied to a template.
struct PerturbationParams {
  double rotation_max = 10.0;   ///< degrees
  double shear_max = 0.15;
  double scale_jitter = 0.10;   ///< per-axis scale drawn from [1 - j, 1 + j)
  double translate_max = 3.0;   ///< pixels
  std::size_t dilation_steps = 1;
  double pixel_noise_rate = 0.01;

  /// Throws InvalidArgument for negative bounds, more than two dilation
  /// steps, or a noise rate outside [0, 1).
  void validate() const;

  static PerturbationParams none() { return {0.0, 0.0, 0.0, 0.0, 0, 0.0}; }
};

struct CorpusSpec {
  std::size_t train_per_letter = 20;
  std::size_t test_per_letter = 5;
  std::uint64_t seed = 42;
  PerturbationParams params{};
};

/// Embedded 50x50 block-letter template.
const BinaryImage& reference_glyph(Letter letter);
/// Throws UnknownLetter outside a-z.
const BinaryImage& reference_glyph(char letter);

/// Random rotation, shear, per-axis scale and translation about the image
/// centre (inverse-mapped, nearest neighbour), then dilation, then per-pixel
/// flips. Draw order: rotation, shear, scale-x, scale-y, translate-x,
/// translate-y, then one draw per pixel in row-major order. Ink is written
/// as 0 and background as 255.
GrayImage perturb(const BinaryImage& tmpl, const PerturbationParams& params, DeterministicRng& rng);

/// Letter i draws from its own stream seeded with mix_seed(spec.seed, i):
/// train samples first, then test samples.
Corpus generate_corpus(const CorpusSpec& spec);

}  // namespace glyphnet

#endif  // GLYPHNET_SYNTHGEN_HPP
