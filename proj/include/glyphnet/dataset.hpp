#ifndef GLYPHNET_DATASET_HPP
#define GLYPHNET_DATASET_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "glyphnet/features.hpp"
#include "glyphnet/image.hpp"
#include "glyphnet/letters.hpp"

namespace glyphnet {

enum class Split { Train, Test };

std::string_view to_string(Split s) noexcept;
/// Throws InvalidArgument for anything other than "train"/"test".
Split parse_split(std::string_view text);

struct LabeledFeatures {
  Letter label;
  Split split = Split::Train;
  FeatureVector features;

  friend bool operator==(const LabeledFeatures&, const LabeledFeatures&) = default;
};

struct CorpusSample {
  GrayImage image;
  Letter label;
  Split split = Split::Train;
  std::size_t index = 0;

  /// "<letter>/<split>_<index>.pgm"
  std::string relative_path() const;
};

/// Samples ordered by letter, then split (train before test), then index.
struct Corpus {
  std::vector<CorpusSample> samples;
};

}  // namespace glyphnet

#endif  // GLYPHNET_DATASET_HPP
