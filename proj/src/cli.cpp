#include "glyphnet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>

#include "glyphnet/error.hpp"
#include "glyphnet/experiment.hpp"
#include "glyphnet/persistence.hpp"
#include "glyphnet/synthgen.hpp"

namespace glyphnet::cli {

namespace fs = std::filesystem;

namespace {

// Thrown for invalid flag values discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PipelineFlags {
  int threshold = kDefaultThreshold;
  std::size_t size = 50;
  std::size_t grid = 5;
  std::size_t min_pixels = 1;

  void add_to(CLI::App& app) {
    app.add_option("--threshold", threshold, "Binarization threshold (ink is darker)");
    app.add_option("--size", size, "Standard side length after scaling");
    app.add_option("--grid", grid, "Grid rows and columns");
    app.add_option("--min-pixels", min_pixels, "Skeleton pixels needed to set a cell");
  }

  PipelineConfig config() const {
    if (threshold < 0 || threshold > 255) throw UsageError("--threshold must be in 0..255");
    PipelineConfig cfg;
    cfg.threshold = static_cast<std::uint8_t>(threshold);
    cfg.standard_side = size;
    cfg.grid = {grid, grid, min_pixels};
    try {
      cfg.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

struct TrainFlags {
  std::string mode = "multiclass";
  double lr = 0.05;
  std::size_t max_epochs = 1000;
  double tol = 0.005;
  std::string init = "symmetric";
  std::string update = "per-sample";
  std::uint64_t seed = 1;

  void add_to(CLI::App& app) {
    app.add_option("--mode", mode, "multiclass or per-letter")
        ->check(CLI::IsMember({"multiclass", "per-letter"}));
    app.add_option("--lr", lr, "Learning rate");
    app.add_option("--max-epochs", max_epochs, "Epoch cap");
    app.add_option("--tol", tol, "Mean-loss stopping tolerance");
    app.add_option("--init", init, "symmetric or paper")->check(CLI::IsMember({"symmetric", "paper"}));
    app.add_option("--update", update, "batch or per-sample")
        ->check(CLI::IsMember({"batch", "per-sample"}));
    app.add_option("--seed", seed, "Training seed");
  }

  TrainConfig config() const {
    TrainConfig cfg;
    cfg.learning_rate = lr;
    cfg.max_epochs = max_epochs;
    cfg.tolerance = tol;
    cfg.init_mode = init == "paper" ? InitMode::Paper : InitMode::Symmetric;
    cfg.update_mode = update == "batch" ? UpdateMode::Batch : UpdateMode::PerSample;
    cfg.seed = seed;
    try {
      cfg.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }

  ExperimentMode experiment_mode() const {
    return mode == "per-letter" ? ExperimentMode::PerLetter : ExperimentMode::Multiclass;
  }
};

// Training record written next to a model as "<model>.train.json".
fs::path record_path(const fs::path& model) {
  fs::path p = model;
  p += ".train.json";
  return p;
}

nlohmann::ordered_json training_record(const TrainFlags& flags,
                                       const std::vector<TrainReport>& reports) {
  nlohmann::ordered_json j;
  j["mode"] = flags.mode;
  j["learning_rate"] = flags.lr;
  j["max_epochs"] = flags.max_epochs;
  j["tolerance"] = flags.tol;
  j["init"] = flags.init;
  j["update"] = flags.update;
  j["seed"] = flags.seed;
  auto& arr = j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back({{"epochs_run", r.epochs_run},
                   {"final_mean_loss", r.final_mean_loss},
                   {"stop_reason", std::string(to_string(r.stop_reason))}});
  }
  return j;
}

struct TrainingRecord {
  TrainFlags flags;
  std::vector<std::size_t> epochs;
};

TrainingRecord read_training_record(const fs::path& path) {
  try {
    const auto j = nlohmann::json::parse(read_file(path));
    TrainingRecord rec;
    rec.flags.mode = j.at("mode").get<std::string>();
    rec.flags.lr = j.at("learning_rate").get<double>();
    rec.flags.max_epochs = j.at("max_epochs").get<std::size_t>();
    rec.flags.tol = j.at("tolerance").get<double>();
    rec.flags.init = j.at("init").get<std::string>();
    rec.flags.update = j.at("update").get<std::string>();
    rec.flags.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& r : j.at("reports")) rec.epochs.push_back(r.at("epochs_run").get<std::size_t>());
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedHeader, path.string() + ": " + e.what());
  }
}

void print_report(std::ostream& out, const std::string& name, const TrainReport& r) {
  char line[160];
  std::snprintf(line, sizeof line, "%s: epochs %zu, mean loss %.6g, stop %s\n", name.c_str(),
                r.epochs_run, r.final_mean_loss, std::string(to_string(r.stop_reason)).c_str());
  out << line;
}

std::vector<LabeledFeatures> split_rows(const std::vector<LabeledFeatures>& rows, Split split) {
  std::vector<LabeledFeatures> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [split](const LabeledFeatures& r) { return r.split == split; });
  return out;
}

// A loaded model file: one multiclass net or 26 one-vs-rest nets.
struct LoadedModel {
  ExperimentMode mode = ExperimentMode::Multiclass;
  std::vector<Network> nets;

  std::size_t input_width() const { return nets.front().topology().input_width(); }

  std::vector<double> scores(const FeatureVector& f) const {
    if (mode == ExperimentMode::Multiclass) return predict(nets.front(), f).outputs;
    std::vector<double> s;
    for (const auto& net : nets) s.push_back(predict(net, f).outputs.front());
    return s;
  }
};

LoadedModel load_any_model(const fs::path& path) {
  const std::string bytes = read_file(path);
  LoadedModel m;
  if (is_letter_container(bytes)) {
    m.mode = ExperimentMode::PerLetter;
    m.nets = load_letter_models(bytes);
    for (const auto& net : m.nets) {
      if (net.topology().output_width() != 1) {
        throw Error(ErrorKind::ShapeMismatch, "one-vs-rest models need a single output");
      }
    }
  } else {
    m.nets.push_back(load_model(bytes));
    if (m.nets.front().topology().output_width() != kLetterCount) {
      throw Error(ErrorKind::ShapeMismatch, "multiclass models need 26 outputs");
    }
  }
  return m;
}

// Commands ---------------------------------------------------------------

struct GenOptions {
  std::string out_dir;
  CorpusSpec spec;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  const Corpus corpus = generate_corpus(opt.spec);
  write_corpus(corpus, opt.out_dir);
  out << "wrote " << corpus.samples.size() << " samples to " << opt.out_dir << "\n";
  return kSuccess;
}

struct ExtractOptions {
  std::string in_dir;
  std::string out_file;
  PipelineFlags pipeline;
};

int cmd_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err) {
  const PipelineConfig cfg = opt.pipeline.config();
  const fs::path dir = opt.in_dir;
  const auto manifest = read_manifest(read_file(dir / "manifest.csv"));
  std::vector<LabeledFeatures> rows;
  rows.reserve(manifest.size());
  for (const auto& entry : manifest) {
    const fs::path path = dir / entry.relative_path;
    try {
      rows.push_back({entry.label, entry.split, extract_features(parse_pgm(read_file(path)), cfg)});
    } catch (const Error& e) {
      err << path.string() << ": " << e.what() << "\n";
      return kInputError;
    }
  }
  write_file(opt.out_file, write_features(rows, true));
  out << "extracted " << rows.size() << " feature rows to " << opt.out_file << "\n";
  return kSuccess;
}

struct TrainOptions {
  std::string features;
  std::string out_file;
  TrainFlags flags;
};

int cmd_train(const TrainOptions& opt, std::ostream& out) {
  TrainConfig cfg = opt.flags.config();
  const auto train_rows = split_rows(read_features(read_file(opt.features)), Split::Train);
  if (train_rows.empty()) throw Error(ErrorKind::EmptyDataset, "no train rows in " + opt.features);

  // Matches run 0 of `eval`, which reuses this model.
  cfg.seed = mix_seed(opt.flags.seed, 0);
  std::vector<TrainReport> reports;
  if (opt.flags.experiment_mode() == ExperimentMode::Multiclass) {
    auto result = train_multiclass(train_rows, cfg);
    print_report(out, "multiclass", result.report);
    reports.push_back(result.report);
    write_file(opt.out_file, save_model(result.network));
  } else {
    auto results = train_one_vs_rest(train_rows, cfg);
    std::vector<Network> nets;
    for (std::size_t i = 0; i < results.size(); ++i) {
      print_report(out, "letter " + Letter::from_index(i).str(), results[i].report);
      reports.push_back(results[i].report);
      nets.push_back(std::move(results[i].network));
    }
    write_file(opt.out_file, save_letter_models(nets));
  }
  write_file(record_path(opt.out_file), training_record(opt.flags, reports).dump(2) + "\n");
  out << "model written to " << opt.out_file << "\n";
  return kSuccess;
}

struct EvalOptions {
  std::string model;
  std::string features;
  std::size_t runs = 10;
  std::string report = "table";
};

int cmd_eval(const EvalOptions& opt, std::ostream& out) {
  if (opt.runs == 0) throw UsageError("--runs must be >= 1");
  const LoadedModel model = load_any_model(opt.model);
  const TrainingRecord record = read_training_record(record_path(opt.model));
  const TrainConfig cfg = record.flags.config();
  const ExperimentMode mode = record.flags.experiment_mode();
  if (mode != model.mode) throw Error(ErrorKind::ShapeMismatch, "training record does not match model");
  const std::size_t expected_reports = mode == ExperimentMode::Multiclass ? 1 : kLetterCount;
  if (record.epochs.size() != expected_reports) {
    throw Error(ErrorKind::ShapeMismatch, "training record has the wrong number of reports");
  }

  const auto rows = read_features(read_file(opt.features));
  for (const auto& row : rows) {
    if (row.features.size() != model.input_width()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "feature width " + std::to_string(row.features.size()) +
                      " does not match model input " + std::to_string(model.input_width()));
    }
  }

  // Run 0 is the supplied model; later runs retrain with their own seeds.
  const ClassifierTrainer retrain = mlp_trainer(cfg, mode);
  const ClassifierTrainer trainer = [&](std::span<const LabeledFeatures> train_rows,
                                        std::uint64_t seed, std::size_t run) {
    if (run > 0) return retrain(train_rows, seed, run);
    TrainedClassifier clf;
    for (std::size_t i = 0; i < kLetterCount; ++i) {
      clf.epochs[i] = record.epochs[mode == ExperimentMode::Multiclass ? 0 : i];
    }
    clf.predict = [&model](const FeatureVector& f) { return argmax(model.scores(f)); };
    return clf;
  };
  const auto result = run_experiment(rows, trainer, cfg.seed, opt.runs);
  if (opt.report == "csv") {
    out << render_table_csv(result.table);
  } else {
    out << render_table_text(result.table, similarity_report(result.confusion, similarity_groups()));
  }
  return kSuccess;
}

struct PredictOptions {
  std::string model;
  std::string image;
  PipelineFlags pipeline;
};

int cmd_predict(const PredictOptions& opt, std::ostream& out) {
  const PipelineConfig cfg = opt.pipeline.config();
  const LoadedModel model = load_any_model(opt.model);
  const FeatureVector features = extract_features(parse_pgm(read_file(opt.image)), cfg);
  if (features.size() != model.input_width()) {
    throw Error(ErrorKind::DimensionMismatch, "image features do not match the model input");
  }
  const auto scores = model.scores(features);
  out << Letter::from_index(argmax(scores)).to_char() << "\n";
  char line[64];
  for (std::size_t i = 0; i < scores.size(); ++i) {
    std::snprintf(line, sizeof line, "%c %.6f\n", Letter::from_index(i).to_char(), scores[i]);
    out << line;
  }
  return kSuccess;
}

struct GradcheckOptions {
  std::uint64_t seed = 7;
  double eps = 1e-5;
  double tol = 1e-4;
};

int cmd_gradcheck(const GradcheckOptions& opt, std::ostream& out) {
  if (!(opt.eps > 0.0)) throw UsageError("--eps must be > 0");
  const double worst = gradient_check(NetworkTopology::multiclass(), opt.seed, opt.eps);
  char line[96];
  std::snprintf(line, sizeof line, "max relative error %.6e (tolerance %.6e)\n", worst, opt.tol);
  out << line;
  return worst <= opt.tol ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Handwritten letter recognition: corpus generation, features, training, evaluation"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic handwriting corpus");
  gen_cmd->add_option("--out", gen.out_dir, "Output directory")->required();
  gen_cmd->add_option("--seed", gen.spec.seed, "Corpus seed");
  gen_cmd->add_option("--train-per-letter", gen.spec.train_per_letter, "Training samples per letter");
  gen_cmd->add_option("--test-per-letter", gen.spec.test_per_letter, "Test samples per letter");
  gen_cmd->add_option("--rotation", gen.spec.params.rotation_max, "Max rotation in degrees");
  gen_cmd->add_option("--shear", gen.spec.params.shear_max, "Max shear");
  gen_cmd->add_option("--scale-jitter", gen.spec.params.scale_jitter, "Per-axis scale jitter");
  gen_cmd->add_option("--translate", gen.spec.params.translate_max, "Max translation in pixels");
  gen_cmd->add_option("--dilation", gen.spec.params.dilation_steps, "Dilation rounds (0-2)");
  gen_cmd->add_option("--noise", gen.spec.params.pixel_noise_rate, "Pixel flip probability");

  ExtractOptions extract;
  auto* extract_cmd = app.add_subcommand("extract", "Extract 25-bit grid features from a corpus");
  extract_cmd->add_option("--in", extract.in_dir, "Corpus directory")->required();
  extract_cmd->add_option("--out", extract.out_file, "Feature CSV to write")->required();
  extract.pipeline.add_to(*extract_cmd);

  TrainOptions train_opt;
  auto* train_cmd = app.add_subcommand("train", "Train on the train split of a feature file");
  train_cmd->add_option("--features", train_opt.features, "Feature CSV")->required();
  train_cmd->add_option("--out", train_opt.out_file, "Model file to write")->required();
  train_opt.flags.add_to(*train_cmd);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate on the test split and print the result table");
  eval_cmd->add_option("--model", eval.model, "Model file")->required();
  eval_cmd->add_option("--features", eval.features, "Feature CSV")->required();
  eval_cmd->add_option("--runs", eval.runs, "Repeated trainings to pool");
  eval_cmd->add_option("--report", eval.report, "table or csv")->check(CLI::IsMember({"table", "csv"}));

  PredictOptions predict_opt;
  auto* predict_cmd = app.add_subcommand("predict", "Classify one PGM image");
  predict_cmd->add_option("--model", predict_opt.model, "Model file")->required();
  predict_cmd->add_option("--image", predict_opt.image, "PGM image")->required();
  predict_opt.pipeline.add_to(*predict_cmd);

  GradcheckOptions gradcheck;
  auto* gradcheck_cmd = app.add_subcommand("gradcheck", "Compare backprop with finite differences");
  gradcheck_cmd->add_option("--seed", gradcheck.seed, "Network seed");
  gradcheck_cmd->add_option("--eps", gradcheck.eps, "Finite-difference step");
  gradcheck_cmd->add_option("--tol", gradcheck.tol, "Maximum accepted relative error");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (extract_cmd->parsed()) return cmd_extract(extract, out, err);
    if (train_cmd->parsed()) return cmd_train(train_opt, out);
    if (eval_cmd->parsed()) return cmd_eval(eval, out);
    if (predict_cmd->parsed()) return cmd_predict(predict_opt, out);
    if (gradcheck_cmd->parsed()) return cmd_gradcheck(gradcheck, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsageError;
}

}  // namespace glyphnet::cli
