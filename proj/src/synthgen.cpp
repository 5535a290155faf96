#include "glyphnet/synthgen.hpp"

#include <cmath>
#include <numbers>

#include "glyphnet/error.hpp"

namespace glyphnet {

void PerturbationParams::validate() const {
  const bool ok = rotation_max >= 0.0 && shear_max >= 0.0 && scale_jitter >= 0.0 &&
                  scale_jitter < 1.0 && translate_max >= 0.0 && dilation_steps <= 2 &&
                  pixel_noise_rate >= 0.0 && pixel_noise_rate < 1.0;
  if (!ok) throw Error(ErrorKind::InvalidArgument, "perturbation parameters out of range");
}

const BinaryImage& reference_glyph(char letter) {
  return reference_glyph(Letter::from_char(letter));
}

namespace {

BinaryImage dilate8(const BinaryImage& img) {
  BinaryImage out = img;
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (img.get(x, y)) continue;
      bool hit = false;
      for (int dy = -1; dy <= 1 && !hit; ++dy) {
        for (int dx = -1; dx <= 1 && !hit; ++dx) {
          hit = img.get_or_zero(static_cast<std::ptrdiff_t>(x) + dx, static_cast<std::ptrdiff_t>(y) + dy);
        }
      }
      if (hit) out.put(x, y, true);
    }
  }
  return out;
}

}  // namespace

GrayImage perturb(const BinaryImage& tmpl, const PerturbationParams& params, DeterministicRng& rng) {
  params.validate();
  const double angle = rng.uniform(-params.rotation_max, params.rotation_max) * std::numbers::pi / 180.0;
  const double shear = rng.uniform(-params.shear_max, params.shear_max);
  const double sx = rng.uniform(1.0 - params.scale_jitter, 1.0 + params.scale_jitter);
  const double sy = rng.uniform(1.0 - params.scale_jitter, 1.0 + params.scale_jitter);
  const double tx = rng.uniform(-params.translate_max, params.translate_max);
  const double ty = rng.uniform(-params.translate_max, params.translate_max);

  // Forward map on centred coordinates: rotation * shear * scale.
  const double c = std::cos(angle), s = std::sin(angle);
  const double a11 = c * sx, a12 = (c * shear - s) * sy;
  const double a21 = s * sx, a22 = (s * shear + c) * sy;
  const double det = a11 * a22 - a12 * a21;
  const double i11 = a22 / det, i12 = -a12 / det;
  const double i21 = -a21 / det, i22 = a11 / det;

  const std::size_t w = tmpl.width(), h = tmpl.height();
  const double cx = static_cast<double>(w) / 2.0, cy = static_cast<double>(h) / 2.0;
  BinaryImage warped(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double dx = static_cast<double>(x) + 0.5 - cx - tx;
      const double dy = static_cast<double>(y) + 0.5 - cy - ty;
      const double src_x = i11 * dx + i12 * dy + cx;
      const double src_y = i21 * dx + i22 * dy + cy;
      warped.put(x, y, tmpl.get_or_zero(static_cast<std::ptrdiff_t>(std::floor(src_x)),
                                        static_cast<std::ptrdiff_t>(std::floor(src_y))));
    }
  }
  for (std::size_t i = 0; i < params.dilation_steps; ++i) warped = dilate8(warped);

  std::vector<std::uint8_t> gray(w * h);
  for (std::size_t i = 0; i < gray.size(); ++i) {
    bool ink = warped.pixels()[i] != 0;
    if (rng.next_unit() < params.pixel_noise_rate) ink = !ink;
    gray[i] = ink ? 0 : 255;
  }
  return GrayImage(w, h, std::move(gray));
}

Corpus generate_corpus(const CorpusSpec& spec) {
  if (spec.train_per_letter == 0) {
    throw Error(ErrorKind::InvalidArgument, "train_per_letter must be >= 1");
  }
  spec.params.validate();
  Corpus corpus;
  corpus.samples.reserve(kLetterCount * (spec.train_per_letter + spec.test_per_letter));
  for (std::size_t i = 0; i < kLetterCount; ++i) {
    const Letter letter = Letter::from_index(i);
    const BinaryImage& tmpl = reference_glyph(letter);
    DeterministicRng rng(mix_seed(spec.seed, i));
    for (auto [split, count] : {std::pair{Split::Train, spec.train_per_letter},
                                std::pair{Split::Test, spec.test_per_letter}}) {
      for (std::size_t k = 0; k < count; ++k) {
        corpus.samples.push_back({perturb(tmpl, spec.params, rng), letter, split, k});
      }
    }
  }
  return corpus;
}

}  // namespace glyphnet
