#ifndef GLYPHNET_EXPERIMENT_HPP
#define GLYPHNET_EXPERIMENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "glyphnet/dataset.hpp"
#include "glyphnet/features.hpp"
#include "glyphnet/letters.hpp"
#include "glyphnet/mlp.hpp"

namespace glyphnet {

struct PerLetterResult {
  Letter letter;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::size_t epochs = 0;
  double accuracy = 0.0;  ///< percent
};

struct ResultTable {
  std::vector<PerLetterResult> rows;  ///< 26 rows, a-z
  std::size_t runs = 1;
  double average = 0.0;
};

/// counts[true][predicted]
class ConfusionMatrix {
 public:
  void add(Letter truth, Letter predicted) { ++counts_[truth.index()][predicted.index()]; }
  std::size_t at(Letter truth, Letter predicted) const {
    return counts_[truth.index()][predicted.index()];
  }
  std::size_t row_sum(Letter truth) const;
  std::size_t total() const;
  std::size_t correct() const;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  std::array<std::array<std::size_t, kLetterCount>, kLetterCount> counts_{};
};

struct PredictionPair {
  Letter truth;
  Letter predicted;
};

ConfusionMatrix confusion_matrix(std::span<const PredictionPair> pairs);

/// Mean of exactly 26 accuracies; throws WrongRowCount otherwise.
double average_accuracy(std::span<const double> accuracies);

using SimilarityGroup = std::vector<Letter>;

/// {c,e}, {i,j,l,r}, {u,v}
const std::vector<SimilarityGroup>& similarity_groups();

struct GroupReport {
  SimilarityGroup letters;
  std::size_t samples = 0;           ///< evaluated samples of the group's letters
  std::size_t in_group_errors = 0;   ///< misclassified as another group member
  double rate = 0.0;                 ///< in_group_errors / samples
};

struct SimilarityReport {
  std::vector<GroupReport> groups;
  double overall_misclassification_rate = 0.0;
};

SimilarityReport similarity_report(const ConfusionMatrix& matrix,
                                   std::span<const SimilarityGroup> groups);

enum class ExperimentMode { Multiclass, PerLetter };

/// Maps a feature vector to a letter index.
using Predictor = std::function<std::size_t(const FeatureVector&)>;

struct TrainedClassifier {
  Predictor predict;
  /// Epochs attributed to each letter's table row.
  std::array<std::size_t, kLetterCount> epochs{};
};

/// Trains one classifier for run `run` using the run-specific seed.
using ClassifierTrainer = std::function<TrainedClassifier(
    std::span<const LabeledFeatures> train, std::uint64_t run_seed, std::size_t run)>;

struct ExperimentResult {
  ResultTable table;
  ConfusionMatrix confusion;
};

/// For run r the trainer receives seed mix_seed(base_seed, r). Accuracy per
/// letter is pooled over runs; epochs are averaged over runs and rounded
/// half up. Throws EmptyDataset, MissingLetter, or InvalidArgument (runs 0).
ExperimentResult run_experiment(std::span<const LabeledFeatures> data,
                                const ClassifierTrainer& trainer, std::uint64_t base_seed,
                                std::size_t runs);

/// Standard network trainers.
ClassifierTrainer mlp_trainer(const TrainConfig& config, ExperimentMode mode);

/// Features are extracted once per image, then run_experiment with
/// mlp_trainer(config, mode) and base seed config.seed.
ExperimentResult run_experiment(const Corpus& corpus, const TrainConfig& config,
                                ExperimentMode mode, std::size_t runs,
                                const PipelineConfig& pipeline = {});

/// One-hot samples over the train rows for a 26-output network.
std::vector<Sample> multiclass_samples(std::span<const LabeledFeatures> rows);
/// 1 for `letter`, 0 for every other row.
std::vector<Sample> one_vs_rest_samples(std::span<const LabeledFeatures> rows, Letter letter);

/// Trains a [n,25,25,26] network with config (config.seed is used as is).
TrainResult train_multiclass(std::span<const LabeledFeatures> train, const TrainConfig& config);
/// 26 one-vs-rest networks; letter i is seeded with mix_seed(config.seed, i).
std::vector<TrainResult> train_one_vs_rest(std::span<const LabeledFeatures> train,
                                           const TrainConfig& config);

/// Letter index with the highest one-vs-rest score (lowest index on ties).
std::size_t predict_one_vs_rest(std::span<const Network> nets, const FeatureVector& features);

/// Column layout: Alphabet, training samples, testing samples, epochs,
/// % accuracy; then the average line and the similarity-group report.
std::string render_table_text(const ResultTable& table, const SimilarityReport& similarity);
std::string render_table_csv(const ResultTable& table);

}  // namespace glyphnet

#endif  // GLYPHNET_EXPERIMENT_HPP
