#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uvlm/analysis/probe.hpp"
#include "uvlm/training/grid.hpp"
#include "uvlm/training/trainer.hpp"

namespace uvlm::reporting {

enum class Schema { a1, a2, a3, a4, probe };

/// Header of each report table, in column order.
const std::vector<std::string>& schema_columns(Schema s);
std::string schema_id(Schema s);

const std::vector<std::string>& preset_names();

/// Experiment root layout:
///   data/{base,bias_weather,bias_battery,scaling}/  codecs/  runs/<hash>/
///   presets/<name>.json  tables/  curves/  coords/
struct Workspace {
    std::filesystem::path root;
    int scale = 10;
    std::uint64_t data_seed = 0;
    int codec_images = 6000;
    int codec_heldout = 200;
    int codec_steps = 3000;
    int probe_images = 5000;
    std::uint64_t probe_seed = 7;
    analysis::ProbeOptions probe;
    analysis::TsneOptions tsne;

    int unit() const;  // per-kind train count of the base dataset
    std::filesystem::path data(const std::string& key) const { return root / "data" / key; }
    std::filesystem::path codecs() const { return root / "codecs"; }
    std::filesystem::path run_dir(const std::string& hash) const { return root / "runs" / hash; }
};

struct PresetRun {
    std::string label;  // table row
    int seed = 0;
    std::string dataset;  // workspace data key
    std::optional<training::GridCell> cell;
    training::RunConfig config;
};

struct Preset {
    std::string name;
    Schema schema = Schema::a1;
    bool probe = false;  // runs also get probe.json (and t-SNE coords for the first seed)
    std::vector<PresetRun> runs;  // row-major: label order, then seed
};

/// Run settings shared by every preset run: defaults plus a 3-epoch budget.
training::RunConfig experiment_base();

/// Deterministic expansion; `base` supplies trunk size and optimizer settings.
/// Throws on an unknown name.
Preset expand(const std::string& name, const Workspace& ws, int seeds,
              const training::RunConfig& base = experiment_base());

/// Builds the datasets the preset needs and the shared codecs, skipping what exists.
void prepare(const Preset& p, const Workspace& ws, std::ostream* log = nullptr);

/// Trains every run that has no finished run.json for its hash, adds probe
/// outputs when the preset asks for them, and records presets/<name>.json.
void run_preset(const Preset& p, const Workspace& ws, const training::StepCallback& on_step = {},
                std::ostream* log = nullptr);

/// probe.json beside a run's checkpoint; nullopt when absent.
std::optional<nlohmann::json> read_probe(const std::filesystem::path& run_dir);

struct ReportSummary {
    std::vector<std::string> tables;  // written file paths
    int incomplete_rows = 0;
    bool empty = true;
    int exit_code() const { return empty || incomplete_rows > 0 ? 1 : 0; }
};

/// Aggregates every recorded preset under dir into tables/<name>.{csv,txt},
/// tables/<name>_seeds.csv and curves/<name>/*.csv.
ReportSummary report(const std::filesystem::path& dir, std::ostream* log = nullptr);

/// Seed-mean value of one metric for one row of a recorded preset; nullopt when
/// any seed is missing or the metric is null. Reads run.json / probe.json.
std::optional<double> row_mean(const std::filesystem::path& dir, const std::string& preset, const std::string& label,
                               const std::string& metric, std::optional<training::GridCell> cell = std::nullopt);

}  // namespace uvlm::reporting
