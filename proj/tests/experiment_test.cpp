#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "glyphnet/error.hpp"
#include "glyphnet/experiment.hpp"
#include "glyphnet/rng.hpp"
#include "glyphnet/synthgen.hpp"

namespace glyphnet {
namespace {

Letter L(char c) { return Letter::from_char(c); }

// Feature vectors that carry the letter index in their first five bits, so a
// stub can recover the true label from the features alone.
FeatureVector encode(std::size_t letter) {
  FeatureVector f;
  f.bits.assign(25, 0);
  for (std::size_t b = 0; b < 5; ++b) f.bits[b] = (letter >> b) & 1;
  return f;
}

std::size_t decode(const FeatureVector& f) {
  std::size_t v = 0;
  for (std::size_t b = 0; b < 5; ++b) v |= static_cast<std::size_t>(f.bits[b]) << b;
  return v;
}

std::vector<LabeledFeatures> coded_dataset(std::size_t n_train, std::size_t n_test) {
  std::vector<LabeledFeatures> rows;
  for (std::size_t i = 0; i < kLetterCount; ++i) {
    for (std::size_t k = 0; k < n_train; ++k) rows.push_back({Letter::from_index(i), Split::Train, encode(i)});
    for (std::size_t k = 0; k < n_test; ++k) rows.push_back({Letter::from_index(i), Split::Test, encode(i)});
  }
  return rows;
}

ClassifierTrainer stub(Predictor p, std::size_t epochs = 0) {
  return [p, epochs](std::span<const LabeledFeatures>, std::uint64_t, std::size_t) {
    TrainedClassifier clf;
    clf.predict = p;
    clf.epochs.fill(epochs);
    return clf;
  };
}

TEST(AverageAccuracy, PaperTableAveragesTo82Point5) {
  const std::vector<double> table{94, 83, 71, 88, 64, 85, 89, 92, 72, 73, 91, 71, 86,
                                  82, 94, 88, 82, 70, 88, 79, 80, 77, 94, 91, 71, 90};
  EXPECT_EQ(average_accuracy(table), 82.5);
}

TEST(AverageAccuracy, Extremes) {
  EXPECT_EQ(average_accuracy(std::vector<double>(26, 100.0)), 100.0);
  EXPECT_EQ(average_accuracy(std::vector<double>(26, 0.0)), 0.0);
}

TEST(AverageAccuracy, WrongRowCount) {
  try {
    average_accuracy(std::vector<double>(25, 1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongRowCount);
  }
}

TEST(ConfusionMatrixTest, Examples) {
  EXPECT_EQ(confusion_matrix({}).total(), 0u);
  const std::vector<PredictionPair> pairs{{L('a'), L('a')}, {L('a'), L('o')}, {L('c'), L('e')}};
  const auto m = confusion_matrix(pairs);
  EXPECT_EQ(m.at(L('a'), L('a')), 1u);
  EXPECT_EQ(m.at(L('a'), L('o')), 1u);
  EXPECT_EQ(m.at(L('c'), L('e')), 1u);
  EXPECT_EQ(m.total(), 3u);
  EXPECT_EQ(m.correct(), 1u);
  EXPECT_EQ(m.row_sum(L('a')), 2u);
}

TEST(Similarity, GroupsAreTheFixedDisjointSets) {
  const auto& g = similarity_groups();
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], (SimilarityGroup{L('c'), L('e')}));
  EXPECT_EQ(g[1], (SimilarityGroup{L('i'), L('j'), L('l'), L('r')}));
  EXPECT_EQ(g[2], (SimilarityGroup{L('u'), L('v')}));
}

TEST(Similarity, DiagonalMatrixHasZeroRates) {
  std::vector<PredictionPair> pairs;
  for (std::size_t i = 0; i < kLetterCount; ++i) pairs.push_back({Letter::from_index(i), Letter::from_index(i)});
  const auto r = similarity_report(confusion_matrix(pairs), similarity_groups());
  for (const auto& g : r.groups) EXPECT_EQ(g.rate, 0.0);
  EXPECT_EQ(r.overall_misclassification_rate, 0.0);
}

TEST(Similarity, OnlyCeErrors) {
  std::vector<PredictionPair> pairs;
  for (std::size_t i = 0; i < kLetterCount; ++i) pairs.push_back({Letter::from_index(i), Letter::from_index(i)});
  pairs.push_back({L('c'), L('e')});
  const auto r = similarity_report(confusion_matrix(pairs), similarity_groups());
  EXPECT_EQ(r.groups[0].in_group_errors, 1u);
  EXPECT_EQ(r.groups[0].samples, 3u);
  EXPECT_DOUBLE_EQ(r.groups[0].rate, 1.0 / 3.0);
  EXPECT_EQ(r.groups[1].rate, 0.0);
  EXPECT_EQ(r.groups[2].rate, 0.0);
  EXPECT_DOUBLE_EQ(r.overall_misclassification_rate, 1.0 / 27.0);
}

TEST(Similarity, OutOfGroupErrorsDoNotCount) {
  const std::vector<PredictionPair> pairs{{L('c'), L('o')}};
  const auto r = similarity_report(confusion_matrix(pairs), similarity_groups());
  EXPECT_EQ(r.groups[0].rate, 0.0);
  EXPECT_EQ(r.overall_misclassification_rate, 1.0);
}

TEST(RunExperiment, PerfectStub) {
  const auto data = coded_dataset(2, 5);
  const auto r = run_experiment(data, stub(decode), 1, 3);
  for (const auto& row : r.table.rows) {
    EXPECT_EQ(row.accuracy, 100.0);
    EXPECT_EQ(row.n_train, 2u);
    EXPECT_EQ(row.n_test, 5u);
  }
  EXPECT_EQ(r.table.average, 100.0);
  EXPECT_EQ(r.confusion.correct(), r.confusion.total());
  EXPECT_EQ(r.confusion.total(), 26u * 5u * 3u);
}

TEST(RunExperiment, AlwaysAStub) {
  const auto data = coded_dataset(2, 5);
  const auto r = run_experiment(data, stub([](const FeatureVector&) { return std::size_t{0}; }), 1, 1);
  EXPECT_EQ(r.table.rows[0].accuracy, 100.0);
  for (std::size_t i = 1; i < kLetterCount; ++i) EXPECT_EQ(r.table.rows[i].accuracy, 0.0);
  EXPECT_NEAR(r.table.average, 100.0 / 26.0, 1e-12);
  EXPECT_NEAR(r.table.average, 3.846, 1e-3);
}

TEST(RunExperiment, SeedsAndEpochRounding) {
  const auto data = coded_dataset(1, 1);
  std::vector<std::uint64_t> seeds;
  const ClassifierTrainer trainer = [&](std::span<const LabeledFeatures> train, std::uint64_t seed,
                                        std::size_t run) {
    EXPECT_EQ(train.size(), 26u);
    seeds.push_back(seed);
    TrainedClassifier clf;
    clf.predict = decode;
    clf.epochs.fill(run == 0 ? 1 : 2);  // mean 1.5 rounds half up to 2
    clf.epochs[3] = 10 + run;           // mean 10.5 -> 11
    clf.epochs[4] = run == 0 ? 4 : 5;   // mean 4.5 -> 5
    return clf;
  };
  const auto r = run_experiment(data, trainer, 99, 2);
  ASSERT_EQ(seeds.size(), 2u);
  EXPECT_EQ(seeds[0], mix_seed(99, 0));
  EXPECT_EQ(seeds[1], mix_seed(99, 1));
  EXPECT_EQ(r.table.rows[0].epochs, 2u);
  EXPECT_EQ(r.table.rows[3].epochs, 11u);
  EXPECT_EQ(r.table.rows[4].epochs, 5u);
}

TEST(RunExperiment, Errors) {
  EXPECT_THROW(run_experiment(std::vector<LabeledFeatures>{}, stub(decode), 1, 1), Error);
  auto data = coded_dataset(1, 1);
  std::erase_if(data, [](const LabeledFeatures& r) { return r.label == Letter::from_char('q') && r.split == Split::Test; });
  try {
    run_experiment(data, stub(decode), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingLetter);
  }
  EXPECT_THROW(run_experiment(coded_dataset(1, 1), stub(decode), 1, 0), Error);
}

Corpus small_corpus() {
  CorpusSpec spec;
  spec.train_per_letter = 3;
  spec.test_per_letter = 5;
  spec.seed = 7;
  return generate_corpus(spec);
}

TEST(RunExperiment, MulticlassNetworkInvariants) {
  TrainConfig cfg;
  cfg.max_epochs = 40;
  const auto corpus = small_corpus();
  const auto a = run_experiment(corpus, cfg, ExperimentMode::Multiclass, 1);
  const auto b = run_experiment(corpus, cfg, ExperimentMode::Multiclass, 1);
  std::vector<double> acc;
  for (const auto& row : a.table.rows) {
    // 5 test samples, one run: 20% granularity.
    EXPECT_EQ(std::fmod(row.accuracy, 20.0), 0.0);
    EXPECT_EQ(a.confusion.row_sum(row.letter), 5u);
    EXPECT_EQ(row.epochs, a.table.rows[0].epochs);
    acc.push_back(row.accuracy);
  }
  EXPECT_EQ(a.table.average, average_accuracy(acc));
  EXPECT_EQ(a.confusion, b.confusion);
  EXPECT_EQ(render_table_csv(a.table), render_table_csv(b.table));
}

TEST(RunExperiment, PerLetterModeUsesOwnEpochs) {
  TrainConfig cfg;
  cfg.max_epochs = 300;
  cfg.tolerance = 0.02;
  const auto r = run_experiment(small_corpus(), cfg, ExperimentMode::PerLetter, 2);
  std::set<std::size_t> epochs;
  for (const auto& row : r.table.rows) {
    epochs.insert(row.epochs);
    EXPECT_EQ(r.confusion.row_sum(row.letter), 10u);
  }
  EXPECT_GT(epochs.size(), 1u);
}

TEST(OneVsRest, SamplesAndDecoding) {
  const auto data = coded_dataset(1, 0);
  const auto samples = one_vs_rest_samples(data, L('d'));
  for (std::size_t i = 0; i < samples.size(); ++i) EXPECT_EQ(samples[i].target[0], i == 3 ? 1.0 : 0.0);
  const auto multi = multiclass_samples(data);
  EXPECT_EQ(multi[5].target[5], 1.0);
  EXPECT_EQ(std::accumulate(multi[5].target.begin(), multi[5].target.end(), 0.0), 1.0);

  std::vector<Network> nets;
  for (std::size_t i = 0; i < kLetterCount; ++i) {
    LayerParams h1(25, 25), h2(25, 25), out(1, 25);
    out.biases[0] = i == 7 ? 1.0 : 0.0;
    nets.emplace_back(NetworkTopology::one_vs_rest(), std::vector<LayerParams>{h1, h2, out});
  }
  EXPECT_EQ(predict_one_vs_rest(nets, encode(0)), 7u);
}

TEST(Render, TextAndCsvLayout) {
  const auto r = run_experiment(coded_dataset(20, 5), stub(decode, 294), 1, 10);
  const auto text = render_table_text(r.table, similarity_report(r.confusion, similarity_groups()));
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_GE(lines.size(), 28u);
  EXPECT_EQ(lines[1].substr(0, 1), "a");
  EXPECT_NE(lines[1].find("294"), std::string::npos);
  EXPECT_NE(lines[1].find("100.0"), std::string::npos);
  EXPECT_NE(lines[27].find("Average accuracy: 100.0%"), std::string::npos);
  EXPECT_NE(text.find("{i,j,l,r}"), std::string::npos);

  const auto csv = render_table_csv(r.table);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "alphabet,training_samples,testing_samples,epochs,accuracy");
  EXPECT_NE(csv.find("\na,20,5,294,100.0000\n"), std::string::npos);
  EXPECT_NE(csv.find("\naverage,,,,100.0000\n"), std::string::npos);
}

}  // namespace
}  // namespace glyphnet
