#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "glyphnet/error.hpp"
#include "glyphnet/persistence.hpp"
#include "glyphnet/rng.hpp"
#include "glyphnet/synthgen.hpp"

namespace glyphnet {
namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Io;
}

// PGM ------------------------------------------------------------------

TEST(Pgm, PlainAllBlack) {
  const auto img = parse_pgm("P2 2 2 255 0 0 0 0");
  EXPECT_EQ(img.width(), 2u);
  EXPECT_EQ(img.height(), 2u);
  for (auto v : img.pixels()) EXPECT_EQ(v, 0);
}

TEST(Pgm, RawMatchesPlain) {
  std::string raw = "P5\n2 2\n255\n";
  raw += std::string("\x00\x10\x80\xff", 4);
  EXPECT_EQ(parse_pgm(raw), parse_pgm("P2\n2 2\n255\n0 16\n128 255\n"));
}

TEST(Pgm, CommentsAreSkipped) {
  const auto img = parse_pgm("P2\n# made by hand\n1 1 # width height\n255\n7\n");
  EXPECT_EQ(img.at(0, 0), 7);
}

TEST(Pgm, SmallMaxvalIsRescaled) {
  const auto img = parse_pgm("P2 3 1 1 0 1 1");
  EXPECT_EQ(img.at(0, 0), 0);
  EXPECT_EQ(img.at(1, 0), 255);
}

TEST(Pgm, Errors) {
  EXPECT_EQ(kind_of([] { parse_pgm("P2 1 1 65535 0"); }), ErrorKind::UnsupportedMaxval);
  EXPECT_EQ(kind_of([] { parse_pgm("P2 2 2 255 0 0 0"); }), ErrorKind::TruncatedData);
  EXPECT_EQ(kind_of([] { parse_pgm(std::string("P5\n2 2\n255\n\x00\x00", 13)); }), ErrorKind::TruncatedData);
  EXPECT_EQ(kind_of([] { parse_pgm("P3 1 1 255 0"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of([] { parse_pgm("P2 0 1 255"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of([] { parse_pgm("P2 1 1 15 16"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of([] { parse_pgm(""); }), ErrorKind::MalformedHeader);
}

TEST(Pgm, CanonicalBytes) {
  EXPECT_EQ(write_pgm(GrayImage(1, 1, std::vector<std::uint8_t>{0})), std::string("P5\n1 1\n255\n\0", 12));
  const auto two = write_pgm(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3, 4}));
  EXPECT_EQ(two.size(), 11u + 4u);
  EXPECT_EQ(two.substr(0, 11), "P5\n2 2\n255\n");
}

TEST(Pgm, RoundTripProperty) {
  DeterministicRng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto w = 1 + rng.next_u64() % 40, h = 1 + rng.next_u64() % 40;
    std::vector<std::uint8_t> px(w * h);
    for (auto& p : px) p = static_cast<std::uint8_t>(rng.next_u64());
    const GrayImage img(w, h, px);
    EXPECT_EQ(parse_pgm(write_pgm(img)), img);
  }
}

// Glyph text -----------------------------------------------------------

TEST(GlyphText, Examples) {
  const auto img = parse_glyph_text("#.\n.#");
  EXPECT_EQ(img.width(), 2u);
  EXPECT_EQ(std::vector<std::uint8_t>(img.pixels().begin(), img.pixels().end()),
            (std::vector<std::uint8_t>{1, 0, 0, 1}));
  EXPECT_EQ(kind_of([] { parse_glyph_text("##\n#"); }), ErrorKind::RaggedRows);
  EXPECT_EQ(kind_of([] { parse_glyph_text(""); }), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of([] { parse_glyph_text("#x"); }), ErrorKind::InvalidCharacter);
  EXPECT_EQ(parse_glyph_text(format_glyph_text(img)), img);
}

// Models ---------------------------------------------------------------

Network random_net(std::uint64_t seed) {
  TrainConfig cfg;
  cfg.seed = seed;
  return init_network(NetworkTopology::multiclass(), cfg);
}

TEST(Model, EncodeReal) {
  EXPECT_EQ(encode_real(1.0), "3FF0000000000000");
  EXPECT_EQ(encode_real(-0.0), "8000000000000000");
  EXPECT_EQ(decode_real("3FF0000000000000"), 1.0);
  EXPECT_TRUE(std::signbit(decode_real("8000000000000000")));
  EXPECT_EQ(kind_of([] { decode_real("3FF"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of([] { decode_real("3FF000000000000G"); }), ErrorKind::MalformedHeader);
}

TEST(Model, RoundTripIsBitExact) {
  auto net = random_net(3);
  auto& p = net.mutable_params();
  p[0].weights[0] = -0.0;
  p[0].weights[1] = std::numeric_limits<double>::denorm_min();
  p[0].weights[2] = -std::numeric_limits<double>::denorm_min() * 12345;
  p[1].biases[0] = std::numeric_limits<double>::max();
  const auto text = save_model(net);
  const auto back = load_model(text);
  EXPECT_TRUE(bit_identical(net, back));
  EXPECT_TRUE(std::signbit(back.params()[0].weights[0]));
  EXPECT_EQ(save_model(back), text);
  EXPECT_EQ(text.substr(0, kModelMagic.size() + 1), std::string(kModelMagic) + "\n");
}

TEST(Model, RoundTripProperty) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto net = random_net(s);
    EXPECT_TRUE(bit_identical(load_model(save_model(net)), net));
  }
}

TEST(Model, Errors) {
  const auto text = save_model(random_net(1));
  std::string bad = text;
  bad.replace(0, kModelMagic.size(), "GLYPHNET-MLP 9");
  EXPECT_EQ(kind_of([&] { load_model(bad); }), ErrorKind::BadMagic);

  EXPECT_EQ(kind_of([&] { load_model(text.substr(0, text.size() / 2)); }), ErrorKind::TruncatedData);

  // Declare a 24-unit hidden layer while the weight blocks still hold 25.
  bad = text;
  bad.replace(bad.find("\n25 logsig"), 10, "\n24 logsig");
  EXPECT_EQ(kind_of([&] { load_model(bad); }), ErrorKind::ShapeMismatch);

  bad = text;
  const auto w = bad.find("weights 1");
  const auto row = bad.find('\n', w) + 1;
  bad.replace(row, 16, encode_real(std::numeric_limits<double>::infinity()));
  EXPECT_EQ(kind_of([&] { load_model(bad); }), ErrorKind::NonFiniteValue);

  EXPECT_EQ(kind_of([&] { load_model(text + "junk\n"); }), ErrorKind::MalformedHeader);
}

TEST(Model, LetterContainerRoundTrip) {
  std::vector<Network> nets;
  for (std::uint64_t i = 0; i < kLetterCount; ++i) {
    TrainConfig cfg;
    cfg.seed = i;
    nets.push_back(init_network(NetworkTopology::one_vs_rest(), cfg));
  }
  const auto text = save_letter_models(nets);
  EXPECT_TRUE(is_letter_container(text));
  EXPECT_FALSE(is_letter_container(save_model(nets[0])));
  const auto back = load_letter_models(text);
  ASSERT_EQ(back.size(), kLetterCount);
  for (std::size_t i = 0; i < kLetterCount; ++i) EXPECT_TRUE(bit_identical(back[i], nets[i]));
  EXPECT_EQ(kind_of([&] { save_letter_models(std::span(nets).first(25)); }), ErrorKind::ShapeMismatch);
}

// Feature CSV ----------------------------------------------------------

std::string header() {
  std::string h = "label";
  for (int i = 0; i < 25; ++i) h += (i < 10 ? ",f0" : ",f") + std::to_string(i);
  return h + "\n";
}

TEST(FeatureCsv, ReadsRow) {
  std::string row = "a";
  for (int i = 0; i < 25; ++i) row += ",0";
  const auto rows = read_features(header() + row + "\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].label, Letter::from_char('a'));
  EXPECT_EQ(rows[0].split, Split::Train);
  EXPECT_EQ(rows[0].features.bits, std::vector<std::uint8_t>(25, 0));
}

TEST(FeatureCsv, Errors) {
  std::string short_row = "a";
  for (int i = 0; i < 24; ++i) short_row += ",0";
  EXPECT_EQ(kind_of([&] { read_features(header() + short_row + "\n"); }), ErrorKind::WrongArity);
  EXPECT_EQ(kind_of([&] { read_features(header() + short_row + ",2\n"); }), ErrorKind::InvalidBit);
  EXPECT_EQ(kind_of([&] { read_features(header() + "A" + short_row.substr(1) + ",1\n"); }),
            ErrorKind::InvalidLabel);
  EXPECT_EQ(kind_of([] { read_features(""); }), ErrorKind::MalformedHeader);
}

TEST(FeatureCsv, RoundTripProperty) {
  DeterministicRng rng(11);
  std::vector<LabeledFeatures> rows;
  for (int i = 0; i < 200; ++i) {
    LabeledFeatures r;
    r.label = Letter::from_index(rng.next_u64() % kLetterCount);
    r.split = rng.next_unit() < 0.5 ? Split::Train : Split::Test;
    r.features.bits.resize(25);
    for (auto& b : r.features.bits) b = rng.next_unit() < 0.5;
    rows.push_back(r);
  }
  EXPECT_EQ(read_features(write_features(rows, true)), rows);
  auto without = read_features(write_features(rows, false));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(without[i].label, rows[i].label);
    EXPECT_EQ(without[i].features, rows[i].features);
  }
  EXPECT_EQ(write_features(read_features(write_features(rows, true)), true), write_features(rows, true));
}

// Manifest -------------------------------------------------------------

TEST(Manifest, RoundTripAndDuplicates) {
  CorpusSpec spec;
  spec.train_per_letter = 2;
  spec.test_per_letter = 1;
  const auto rows = corpus_manifest(generate_corpus(spec));
  ASSERT_EQ(rows.size(), 78u);
  EXPECT_EQ(rows[0].relative_path, "a/train_0.pgm");
  EXPECT_EQ(rows[2].relative_path, "a/test_0.pgm");
  const auto text = write_manifest(rows);
  EXPECT_EQ(text.substr(0, text.find('\n')), "relative_path,label,split");
  EXPECT_EQ(read_manifest(text), rows);
  EXPECT_EQ(kind_of([&] { read_manifest(text + "a/train_0.pgm,a,train\n"); }), ErrorKind::MalformedHeader);
}

TEST(Files, MissingFileIsIoError) {
  EXPECT_EQ(kind_of([] { read_file("/nonexistent/dir/file"); }), ErrorKind::Io);
}

}  // namespace
}  // namespace glyphnet
