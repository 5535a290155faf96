#ifndef GLYPHNET_PERSISTENCE_HPP
#define GLYPHNET_PERSISTENCE_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glyphnet/dataset.hpp"
#include "glyphnet/image.hpp"
#include "glyphnet/mlp.hpp"

namespace glyphnet {

// Images ---------------------------------------------------------------

/// Reads P2 or P5 graymaps with maxval <= 255. Samples are rescaled to
/// 0-255 when maxval is smaller.
GrayImage parse_pgm(std::string_view bytes);

/// Canonical P5: "P5\n<w> <h>\n255\n" followed by the raster bytes.
std::string write_pgm(const GrayImage& img);

/// '#' is ink, '.' is background, one row per line.
BinaryImage parse_glyph_text(std::string_view text);
std::string format_glyph_text(const BinaryImage& img);

// Models ---------------------------------------------------------------

inline constexpr std::string_view kModelMagic = "GLYPHNET-MLP 1";

/// Text format with every real written as its 16-hex-digit IEEE-754
/// binary64 bit pattern, so a load reproduces the network bit for bit.
std::string save_model(const Network& net);
Network load_model(std::string_view bytes);

/// One-vs-rest container: 26 blocks, each "letter <x>" followed by a model.
std::string save_letter_models(std::span<const Network> nets);
std::vector<Network> load_letter_models(std::string_view bytes);

/// True when the bytes hold a one-vs-rest container rather than one model.
bool is_letter_container(std::string_view bytes);

std::string encode_real(double v);
/// Throws MalformedHeader for anything but 16 hex digits.
double decode_real(std::string_view hex);

// Feature CSV ----------------------------------------------------------

/// Header "label,f00,...", or "split,label,f00,..." when with_split is set.
std::string write_features(std::span<const LabeledFeatures> rows, bool with_split = false);
/// Accepts both layouts; rows without a split column are marked Train.
std::vector<LabeledFeatures> read_features(std::string_view bytes);

// Corpus manifest ------------------------------------------------------

struct ManifestRow {
  std::string relative_path;
  Letter label;
  Split split = Split::Train;

  friend bool operator==(const ManifestRow&, const ManifestRow&) = default;
};

/// "relative_path,label,split" with a header row.
std::string write_manifest(std::span<const ManifestRow> rows);
std::vector<ManifestRow> read_manifest(std::string_view bytes);

/// Manifest rows for a corpus, in corpus order.
std::vector<ManifestRow> corpus_manifest(const Corpus& corpus);

/// Writes every sample as canonical PGM under dir plus dir/manifest.csv.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);

// Files ----------------------------------------------------------------

/// Both throw Error(Io) on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace glyphnet

#endif  // GLYPHNET_PERSISTENCE_HPP
