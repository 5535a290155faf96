#include "glyphnet/persistence.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "glyphnet/error.hpp"

namespace glyphnet {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

// Netpbm-style tokenizer: whitespace separated, '#' starts a comment that
// runs to the end of the line.
class PnmReader {
 public:
  explicit PnmReader(std::string_view bytes) : bytes_(bytes) {}

  bool next_token(std::string_view& tok) {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (is_space(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= bytes_.size()) return false;
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') ++pos_;
    tok = bytes_.substr(start, pos_ - start);
    return true;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::string_view bytes() const { return bytes_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

bool parse_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::uint64_t header_field(PnmReader& reader, const char* name) {
  std::string_view tok;
  std::uint64_t v = 0;
  if (!reader.next_token(tok)) {
    throw Error(ErrorKind::MalformedHeader, std::string("missing ") + name);
  }
  if (!parse_uint(tok, v)) {
    throw Error(ErrorKind::MalformedHeader, std::string("bad ") + name + " '" + std::string(tok) + "'");
  }
  return v;
}

std::uint8_t rescale(std::uint64_t v, std::uint64_t maxval) {
  if (v > maxval) throw Error(ErrorKind::MalformedHeader, "sample exceeds maxval");
  if (maxval == 255) return static_cast<std::uint8_t>(v);
  return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_on(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

Letter parse_label(std::string_view field) {
  if (field.size() != 1 || field[0] < 'a' || field[0] > 'z') {
    throw Error(ErrorKind::InvalidLabel, "bad label '" + std::string(field) + "'");
  }
  return Letter::from_char(field[0]);
}

}  // namespace

GrayImage parse_pgm(std::string_view bytes) {
  PnmReader reader(bytes);
  std::string_view magic;
  if (!reader.next_token(magic) || (magic != "P2" && magic != "P5")) {
    throw Error(ErrorKind::MalformedHeader, "expected P2 or P5 magic");
  }
  const auto width = header_field(reader, "width");
  const auto height = header_field(reader, "height");
  const auto maxval = header_field(reader, "maxval");
  if (width == 0 || height == 0) throw Error(ErrorKind::MalformedHeader, "zero dimension");
  if (maxval == 0 || maxval > 65535) throw Error(ErrorKind::MalformedHeader, "maxval out of range");
  if (maxval > 255) {
    throw Error(ErrorKind::UnsupportedMaxval, "maxval " + std::to_string(maxval) + " > 255");
  }
  if (width > (1u << 20) || height > (1u << 20)) {
    throw Error(ErrorKind::MalformedHeader, "image too large");
  }

  const std::size_t n = width * height;
  std::vector<std::uint8_t> pixels(n);
  if (magic == "P5") {
    // Exactly one whitespace byte separates maxval from the raster.
    if (reader.pos() >= bytes.size() || !is_space(bytes[reader.pos()])) {
      throw Error(ErrorKind::TruncatedData, "missing raster");
    }
    reader.advance(1);
    if (bytes.size() - reader.pos() < n) {
      throw Error(ErrorKind::TruncatedData,
                  "raster has " + std::to_string(bytes.size() - reader.pos()) + " of " +
                      std::to_string(n) + " bytes");
    }
    for (std::size_t i = 0; i < n; ++i) {
      pixels[i] = rescale(static_cast<unsigned char>(bytes[reader.pos() + i]), maxval);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::string_view tok;
      if (!reader.next_token(tok)) {
        throw Error(ErrorKind::TruncatedData,
                    "raster has " + std::to_string(i) + " of " + std::to_string(n) + " samples");
      }
      std::uint64_t v = 0;
      if (!parse_uint(tok, v)) throw Error(ErrorKind::MalformedHeader, "bad sample '" + std::string(tok) + "'");
      pixels[i] = rescale(v, maxval);
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

std::string write_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  out.append(img.pixels().begin(), img.pixels().end());
  return out;
}

BinaryImage parse_glyph_text(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorKind::EmptyInput, "no rows");
  const std::size_t width = lines.front().size();
  if (width == 0) throw Error(ErrorKind::EmptyInput, "empty first row");
  std::vector<std::uint8_t> bits;
  bits.reserve(width * lines.size());
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != width) {
      throw Error(ErrorKind::RaggedRows, "row " + std::to_string(r) + " has " +
                                             std::to_string(lines[r].size()) + " columns, expected " +
                                             std::to_string(width));
    }
    for (char c : lines[r]) {
      if (c == '#') {
        bits.push_back(1);
      } else if (c == '.') {
        bits.push_back(0);
      } else {
        throw Error(ErrorKind::InvalidCharacter, std::string("unexpected '") + c + "' in row " +
                                                     std::to_string(r));
      }
    }
  }
  return BinaryImage(width, lines.size(), std::move(bits));
}

std::string format_glyph_text(const BinaryImage& img) {
  std::string out;
  out.reserve((img.width() + 1) * img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) out.push_back(img.get(x, y) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

// Models -----------------------------------------------------------------

std::string encode_real(double v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llX",
                static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(v)));
  return std::string(buf, 16);
}

double decode_real(std::string_view hex) {
  std::uint64_t bits = 0;
  if (hex.size() != 16) throw Error(ErrorKind::MalformedHeader, "bad real '" + std::string(hex) + "'");
  const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), bits, 16);
  if (ec != std::errc() || ptr != hex.data() + hex.size()) {
    throw Error(ErrorKind::MalformedHeader, "bad real '" + std::string(hex) + "'");
  }
  return std::bit_cast<double>(bits);
}

namespace {

void append_values(std::string& out, const double* values, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out.push_back(' ');
    out += encode_real(values[i]);
  }
  out.push_back('\n');
}

void append_model(std::string& out, const Network& net) {
  const auto& layers = net.topology().layers();
  out += kModelMagic;
  out += "\nlayers " + std::to_string(layers.size()) + "\n";
  for (const auto& layer : layers) {
    out += std::to_string(layer.units) + " " + std::string(to_string(layer.activation)) + "\n";
  }
  for (std::size_t l = 0; l < net.params().size(); ++l) {
    const auto& p = net.params()[l];
    out += "weights " + std::to_string(l + 1) + " " + std::to_string(p.rows) + " " +
           std::to_string(p.cols) + "\n";
    for (std::size_t r = 0; r < p.rows; ++r) append_values(out, &p.weights[r * p.cols], p.cols);
    out += "biases " + std::to_string(l + 1) + " " + std::to_string(p.rows) + "\n";
    append_values(out, p.biases.data(), p.rows);
  }
}

// Line cursor over a model file.
class ModelReader {
 public:
  explicit ModelReader(std::string_view bytes) : lines_(split_lines(bytes)) {}

  bool done() const { return pos_ >= lines_.size(); }
  std::string_view peek() const { return done() ? std::string_view{} : lines_[pos_]; }

  std::string_view line(const char* what) {
    if (done()) throw Error(ErrorKind::TruncatedData, std::string("missing ") + what);
    return lines_[pos_++];
  }

  std::vector<std::string_view> fields(const char* what) {
    auto f = split_on(line(what), ' ');
    std::erase(f, std::string_view{});
    return f;
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

std::size_t count_field(std::string_view tok) {
  std::uint64_t v = 0;
  if (!parse_uint(tok, v)) throw Error(ErrorKind::MalformedHeader, "bad count '" + std::string(tok) + "'");
  return static_cast<std::size_t>(v);
}

void read_values(ModelReader& reader, double* out, std::size_t n, const char* what) {
  const auto f = reader.fields(what);
  if (f.size() != n) {
    throw Error(ErrorKind::TruncatedData, std::string(what) + ": expected " + std::to_string(n) +
                                              " values, found " + std::to_string(f.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = decode_real(f[i]);
    if (!std::isfinite(out[i])) throw Error(ErrorKind::NonFiniteValue, what);
  }
}

void expect_block_header(const std::vector<std::string_view>& f, std::string_view keyword,
                         std::size_t layer, std::size_t rows, std::size_t cols, bool with_cols) {
  const std::size_t arity = with_cols ? 4 : 3;
  if (f.size() != arity || f[0] != keyword) {
    throw Error(ErrorKind::MalformedHeader, "expected '" + std::string(keyword) + "' block header");
  }
  if (count_field(f[1]) != layer || count_field(f[2]) != rows ||
      (with_cols && count_field(f[3]) != cols)) {
    throw Error(ErrorKind::ShapeMismatch,
                std::string(keyword) + " block for layer " + std::to_string(layer) +
                    " does not match the header");
  }
}

Network read_model(ModelReader& reader) {
  if (reader.line("magic") != kModelMagic) throw Error(ErrorKind::BadMagic, "not a GLYPHNET-MLP 1 model");
  const auto count_line = reader.fields("layer count");
  if (count_line.size() != 2 || count_line[0] != "layers") {
    throw Error(ErrorKind::MalformedHeader, "expected 'layers <n>'");
  }
  const std::size_t n_layers = count_field(count_line[1]);
  if (n_layers < 2 || n_layers > 1024) throw Error(ErrorKind::ShapeMismatch, "bad layer count");

  std::vector<LayerSpec> specs;
  for (std::size_t l = 0; l < n_layers; ++l) {
    const auto f = reader.fields("layer spec");
    if (f.size() != 2) throw Error(ErrorKind::MalformedHeader, "expected '<units> <activation>'");
    LayerSpec spec{count_field(f[0]), Activation::Identity};
    try {
      spec.activation = parse_activation(f[1]);
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedHeader, e.what());
    }
    if (spec.units == 0 || spec.units > (1u << 16)) throw Error(ErrorKind::ShapeMismatch, "bad unit count");
    specs.push_back(spec);
  }
  std::optional<NetworkTopology> topology;
  try {
    topology.emplace(specs);
  } catch (const Error& e) {
    throw Error(ErrorKind::ShapeMismatch, e.what());
  }

  std::vector<LayerParams> params;
  for (std::size_t l = 1; l < n_layers; ++l) {
    LayerParams p(specs[l].units, specs[l - 1].units);
    expect_block_header(reader.fields("weights header"), "weights", l, p.rows, p.cols, true);
    for (std::size_t r = 0; r < p.rows; ++r) read_values(reader, &p.weights[r * p.cols], p.cols, "weights");
    expect_block_header(reader.fields("biases header"), "biases", l, p.rows, 0, false);
    read_values(reader, p.biases.data(), p.rows, "biases");
    params.push_back(std::move(p));
  }
  return Network(std::move(*topology), std::move(params));
}

}  // namespace

std::string save_model(const Network& net) {
  std::string out;
  append_model(out, net);
  return out;
}

Network load_model(std::string_view bytes) {
  ModelReader reader(bytes);
  Network net = read_model(reader);
  while (!reader.done()) {
    if (!reader.line("trailer").empty()) {
      throw Error(ErrorKind::MalformedHeader, "unexpected content after model");
    }
  }
  return net;
}

std::string save_letter_models(std::span<const Network> nets) {
  if (nets.size() != kLetterCount) {
    throw Error(ErrorKind::ShapeMismatch, "a letter container holds exactly 26 models");
  }
  std::string out;
  for (std::size_t i = 0; i < nets.size(); ++i) {
    out += "letter " + Letter::from_index(i).str() + "\n";
    append_model(out, nets[i]);
  }
  return out;
}

std::vector<Network> load_letter_models(std::string_view bytes) {
  ModelReader reader(bytes);
  std::vector<Network> nets;
  for (std::size_t i = 0; i < kLetterCount; ++i) {
    const std::string expected = "letter " + Letter::from_index(i).str();
    if (reader.line("letter tag") != expected) {
      throw Error(ErrorKind::BadMagic, "expected '" + expected + "'");
    }
    nets.push_back(read_model(reader));
  }
  while (!reader.done()) {
    if (!reader.line("trailer").empty()) {
      throw Error(ErrorKind::MalformedHeader, "unexpected content after container");
    }
  }
  return nets;
}

bool is_letter_container(std::string_view bytes) { return bytes.starts_with("letter "); }

// Feature CSV ------------------------------------------------------------

std::string write_features(std::span<const LabeledFeatures> rows, bool with_split) {
  const std::size_t width = rows.empty() ? 25 : rows.front().features.size();
  std::string out = with_split ? "split,label" : "label";
  char name[32];
  for (std::size_t i = 0; i < width; ++i) {
    std::snprintf(name, sizeof name, ",f%02zu", i);
    out += name;
  }
  out.push_back('\n');
  for (const auto& row : rows) {
    if (row.features.size() != width) {
      throw Error(ErrorKind::WrongArity, "feature vectors must share one length");
    }
    if (with_split) {
      out += to_string(row.split);
      out.push_back(',');
    }
    out.push_back(row.label.to_char());
    for (auto b : row.features.bits) {
      out.push_back(',');
      out.push_back(b ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<LabeledFeatures> read_features(std::string_view bytes) {
  auto lines = split_lines(bytes);
  if (lines.empty()) throw Error(ErrorKind::MalformedHeader, "missing feature header");
  const auto header = split_on(lines.front(), ',');
  const bool with_split = !header.empty() && header[0] == "split";
  const std::size_t lead = with_split ? 2 : 1;
  if (header.size() <= lead || header[lead - 1] != "label") {
    throw Error(ErrorKind::MalformedHeader, "feature header must start with 'label' or 'split,label'");
  }
  const std::size_t width = header.size() - lead;
  char name[32];
  for (std::size_t i = 0; i < width; ++i) {
    std::snprintf(name, sizeof name, "f%02zu", i);
    if (header[lead + i] != name) {
      throw Error(ErrorKind::MalformedHeader, "unexpected column '" + std::string(header[lead + i]) + "'");
    }
  }

  std::vector<LabeledFeatures> rows;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto f = split_on(lines[n], ',');
    if (f.size() != header.size()) {
      throw Error(ErrorKind::WrongArity, "line " + std::to_string(n + 1) + " has " +
                                             std::to_string(f.size()) + " fields, expected " +
                                             std::to_string(header.size()));
    }
    LabeledFeatures row;
    if (with_split) {
      try {
        row.split = parse_split(f[0]);
      } catch (const Error&) {
        throw Error(ErrorKind::InvalidLabel, "bad split '" + std::string(f[0]) + "' on line " +
                                                 std::to_string(n + 1));
      }
    }
    row.label = parse_label(f[lead - 1]);
    row.features.bits.reserve(width);
    for (std::size_t i = lead; i < f.size(); ++i) {
      if (f[i] != "0" && f[i] != "1") {
        throw Error(ErrorKind::InvalidBit, "bad bit '" + std::string(f[i]) + "' on line " +
                                               std::to_string(n + 1));
      }
      row.features.bits.push_back(f[i] == "1" ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Manifest ---------------------------------------------------------------

std::string write_manifest(std::span<const ManifestRow> rows) {
  std::string out = "relative_path,label,split\n";
  for (const auto& row : rows) {
    out += row.relative_path + "," + row.label.str() + "," + std::string(to_string(row.split)) + "\n";
  }
  return out;
}

std::vector<ManifestRow> read_manifest(std::string_view bytes) {
  auto lines = split_lines(bytes);
  if (lines.empty() || lines.front() != "relative_path,label,split") {
    throw Error(ErrorKind::MalformedHeader, "manifest header must be 'relative_path,label,split'");
  }
  std::vector<ManifestRow> rows;
  std::set<std::string, std::less<>> seen;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto f = split_on(lines[n], ',');
    if (f.size() != 3) throw Error(ErrorKind::WrongArity, "manifest line " + std::to_string(n + 1));
    ManifestRow row{std::string(f[0]), parse_label(f[1]), Split::Train};
    try {
      row.split = parse_split(f[2]);
    } catch (const Error&) {
      throw Error(ErrorKind::InvalidLabel, "bad split '" + std::string(f[2]) + "'");
    }
    if (!seen.insert(row.relative_path).second) {
      throw Error(ErrorKind::MalformedHeader, "duplicate path '" + row.relative_path + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ManifestRow> corpus_manifest(const Corpus& corpus) {
  std::vector<ManifestRow> rows;
  rows.reserve(corpus.samples.size());
  for (const auto& s : corpus.samples) rows.push_back({s.relative_path(), s.label, s.split});
  return rows;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
  for (const auto& s : corpus.samples) {
    const auto path = dir / s.relative_path();
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + path.parent_path().string());
    write_file(path, write_pgm(s.image));
  }
  write_file(dir / "manifest.csv", write_manifest(corpus_manifest(corpus)));
}

// Files ------------------------------------------------------------------

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot create " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
}

}  // namespace glyphnet
