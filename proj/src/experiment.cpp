#include "glyphnet/experiment.hpp"

#include <cstdio>
#include <numeric>

#include "glyphnet/error.hpp"
#include "glyphnet/rng.hpp"

namespace glyphnet {

std::size_t ConfusionMatrix::row_sum(Letter truth) const {
  const auto& row = counts_[truth.index()];
  return std::accumulate(row.begin(), row.end(), std::size_t{0});
}

std::size_t ConfusionMatrix::total() const {
  std::size_t n = 0;
  for (const auto& row : counts_) n += std::accumulate(row.begin(), row.end(), std::size_t{0});
  return n;
}

std::size_t ConfusionMatrix::correct() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < kLetterCount; ++i) n += counts_[i][i];
  return n;
}

ConfusionMatrix confusion_matrix(std::span<const PredictionPair> pairs) {
  ConfusionMatrix m;
  for (const auto& p : pairs) m.add(p.truth, p.predicted);
  return m;
}

double average_accuracy(std::span<const double> accuracies) {
  if (accuracies.size() != kLetterCount) {
    throw Error(ErrorKind::WrongRowCount,
                "expected 26 accuracies, got " + std::to_string(accuracies.size()));
  }
  return std::accumulate(accuracies.begin(), accuracies.end(), 0.0) /
         static_cast<double>(kLetterCount);
}

const std::vector<SimilarityGroup>& similarity_groups() {
  static const std::vector<SimilarityGroup> groups = [] {
    std::vector<SimilarityGroup> g;
    for (const char* letters : {"ce", "ijlr", "uv"}) {
      SimilarityGroup group;
      for (const char* c = letters; *c; ++c) group.push_back(Letter::from_char(*c));
      g.push_back(std::move(group));
    }
    return g;
  }();
  return groups;
}

SimilarityReport similarity_report(const ConfusionMatrix& matrix,
                                   std::span<const SimilarityGroup> groups) {
  SimilarityReport report;
  for (const auto& group : groups) {
    GroupReport g{group, 0, 0, 0.0};
    for (Letter truth : group) {
      g.samples += matrix.row_sum(truth);
      for (Letter predicted : group) {
        if (predicted != truth) g.in_group_errors += matrix.at(truth, predicted);
      }
    }
    g.rate = g.samples == 0 ? 0.0
                            : static_cast<double>(g.in_group_errors) / static_cast<double>(g.samples);
    report.groups.push_back(std::move(g));
  }
  const std::size_t total = matrix.total();
  report.overall_misclassification_rate =
      total == 0 ? 0.0 : static_cast<double>(total - matrix.correct()) / static_cast<double>(total);
  return report;
}

ExperimentResult run_experiment(std::span<const LabeledFeatures> data,
                                const ClassifierTrainer& trainer, std::uint64_t base_seed,
                                std::size_t runs) {
  if (runs == 0) throw Error(ErrorKind::InvalidArgument, "runs must be >= 1");
  if (data.empty()) throw Error(ErrorKind::EmptyDataset, "no samples");

  std::vector<LabeledFeatures> train;
  std::vector<LabeledFeatures> test;
  std::array<std::size_t, kLetterCount> n_train{}, n_test{};
  for (const auto& row : data) {
    if (row.split == Split::Train) {
      train.push_back(row);
      ++n_train[row.label.index()];
    } else {
      test.push_back(row);
      ++n_test[row.label.index()];
    }
  }
  for (std::size_t i = 0; i < kLetterCount; ++i) {
    if (n_train[i] == 0 || n_test[i] == 0) {
      throw Error(ErrorKind::MissingLetter, "letter '" + Letter::from_index(i).str() +
                                                "' lacks train or test samples");
    }
  }

  ExperimentResult result;
  std::array<std::size_t, kLetterCount> epoch_sums{};
  for (std::size_t r = 0; r < runs; ++r) {
    const TrainedClassifier clf = trainer(train, mix_seed(base_seed, r), r);
    for (std::size_t i = 0; i < kLetterCount; ++i) epoch_sums[i] += clf.epochs[i];
    for (const auto& row : test) {
      result.confusion.add(row.label, Letter::from_index(clf.predict(row.features)));
    }
  }

  auto& table = result.table;
  table.runs = runs;
  std::vector<double> accuracies;
  for (std::size_t i = 0; i < kLetterCount; ++i) {
    const Letter letter = Letter::from_index(i);
    PerLetterResult row;
    row.letter = letter;
    row.n_train = n_train[i];
    row.n_test = n_test[i];
    row.epochs = (2 * epoch_sums[i] + runs) / (2 * runs);
    row.accuracy = 100.0 * static_cast<double>(result.confusion.at(letter, letter)) /
                   static_cast<double>(n_test[i] * runs);
    accuracies.push_back(row.accuracy);
    table.rows.push_back(row);
  }
  table.average = average_accuracy(accuracies);
  return result;
}

std::vector<Sample> multiclass_samples(std::span<const LabeledFeatures> rows) {
  std::vector<Sample> samples;
  samples.reserve(rows.size());
  for (const auto& row : rows) {
    Sample s{row.features.as_reals(), std::vector<double>(kLetterCount, 0.0)};
    s.target[row.label.index()] = 1.0;
    samples.push_back(std::move(s));
  }
  return samples;
}

std::vector<Sample> one_vs_rest_samples(std::span<const LabeledFeatures> rows, Letter letter) {
  std::vector<Sample> samples;
  samples.reserve(rows.size());
  for (const auto& row : rows) {
    samples.push_back({row.features.as_reals(), {row.label == letter ? 1.0 : 0.0}});
  }
  return samples;
}

namespace {

std::size_t input_width(std::span<const LabeledFeatures> rows) {
  if (rows.empty()) throw Error(ErrorKind::EmptyDataset, "no training rows");
  return rows.front().features.size();
}

}  // namespace

TrainResult train_multiclass(std::span<const LabeledFeatures> train_rows, const TrainConfig& config) {
  const auto topology = NetworkTopology::multiclass(input_width(train_rows));
  const auto samples = multiclass_samples(train_rows);
  return train(init_network(topology, config), samples, config);
}

std::vector<TrainResult> train_one_vs_rest(std::span<const LabeledFeatures> train_rows,
                                           const TrainConfig& config) {
  const auto topology = NetworkTopology::one_vs_rest(input_width(train_rows));
  std::vector<TrainResult> results;
  for (std::size_t i = 0; i < kLetterCount; ++i) {
    TrainConfig letter_config = config;
    letter_config.seed = mix_seed(config.seed, i);
    const auto samples = one_vs_rest_samples(train_rows, Letter::from_index(i));
    results.push_back(train(init_network(topology, letter_config), samples, letter_config));
  }
  return results;
}

std::size_t predict_one_vs_rest(std::span<const Network> nets, const FeatureVector& features) {
  std::vector<double> scores;
  scores.reserve(nets.size());
  for (const auto& net : nets) scores.push_back(predict(net, features).outputs.front());
  return argmax(scores);
}

ClassifierTrainer mlp_trainer(const TrainConfig& config, ExperimentMode mode) {
  config.validate();
  return [config, mode](std::span<const LabeledFeatures> train_rows, std::uint64_t run_seed,
                        std::size_t) {
    TrainConfig run_config = config;
    run_config.seed = run_seed;
    TrainedClassifier clf;
    if (mode == ExperimentMode::Multiclass) {
      auto result = train_multiclass(train_rows, run_config);
      clf.epochs.fill(result.report.epochs_run);
      clf.predict = [net = std::move(result.network)](const FeatureVector& f) {
        return predict(net, f).label;
      };
    } else {
      auto results = train_one_vs_rest(train_rows, run_config);
      std::vector<Network> nets;
      for (std::size_t i = 0; i < results.size(); ++i) {
        clf.epochs[i] = results[i].report.epochs_run;
        nets.push_back(std::move(results[i].network));
      }
      clf.predict = [nets = std::move(nets)](const FeatureVector& f) {
        return predict_one_vs_rest(nets, f);
      };
    }
    return clf;
  };
}

ExperimentResult run_experiment(const Corpus& corpus, const TrainConfig& config,
                                ExperimentMode mode, std::size_t runs,
                                const PipelineConfig& pipeline) {
  std::vector<LabeledFeatures> data;
  data.reserve(corpus.samples.size());
  for (const auto& s : corpus.samples) {
    data.push_back({s.label, s.split, extract_features(s.image, pipeline)});
  }
  return run_experiment(data, mlp_trainer(config, mode), config.seed, runs);
}

namespace {

std::string group_name(const SimilarityGroup& group) {
  std::string name = "{";
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (i) name += ",";
    name += group[i].to_char();
  }
  return name + "}";
}

}  // namespace

std::string render_table_text(const ResultTable& table, const SimilarityReport& similarity) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-9s %-16s %-15s %-7s %s\n", "Alphabet", "Training samples",
                "Testing samples", "Epochs", "% Accuracy");
  out += line;
  for (const auto& row : table.rows) {
    std::snprintf(line, sizeof line, "%-9c %-16zu %-15zu %-7zu %.1f\n", row.letter.to_char(),
                  row.n_train, row.n_test, row.epochs, row.accuracy);
    out += line;
  }
  std::snprintf(line, sizeof line, "Average accuracy: %.1f%% over %zu run(s)\n", table.average,
                table.runs);
  out += line;
  out += "Similar-letter groups (misclassified within the group):\n";
  for (const auto& g : similarity.groups) {
    std::snprintf(line, sizeof line, "  %-10s %5.1f%% (%zu of %zu samples)\n",
                  group_name(g.letters).c_str(), 100.0 * g.rate, g.in_group_errors, g.samples);
    out += line;
  }
  std::snprintf(line, sizeof line, "  %-10s %5.1f%%\n", "overall",
                100.0 * similarity.overall_misclassification_rate);
  out += line;
  return out;
}

std::string render_table_csv(const ResultTable& table) {
  std::string out = "alphabet,training_samples,testing_samples,epochs,accuracy\n";
  char line[96];
  for (const auto& row : table.rows) {
    std::snprintf(line, sizeof line, "%c,%zu,%zu,%zu,%.4f\n", row.letter.to_char(), row.n_train,
                  row.n_test, row.epochs, row.accuracy);
    out += line;
  }
  std::snprintf(line, sizeof line, "average,,,,%.4f\n", table.average);
  out += line;
  return out;
}

}  // namespace glyphnet
