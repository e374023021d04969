#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "uvlm/core/nn.hpp"
#include "uvlm/model/config.hpp"

namespace uvlm::training {

struct SampleCounts {
    // unset: everything the dataset offers for the run's task mode
    std::optional<int> vqa, caption, gen;
};

struct RunConfig {
    model::ModelConfig model;
    std::filesystem::path data;
    std::filesystem::path codecs;  // empty: <data>/codecs
    SampleCounts counts;
    int epochs = 1;
    int batch_size = 32;
    OptimizerConfig optimizer;
    std::uint64_t seed = 0;
    std::filesystem::path out;
    int snapshots = 10;
    int eval_vqa_limit = -1;  // < 0: full test split
    int eval_gen_limit = -1;
    bool save_checkpoint = true;

    void validate() const;
    std::filesystem::path codecs_dir() const { return codecs.empty() ? data / "codecs" : codecs; }

    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
    /// Parsed TOML; model keys may be top-level or under [model]. Relative
    /// data/codecs/out paths resolve against base_dir.
    static RunConfig from_toml_table(nlohmann::json j, const std::filesystem::path& base_dir);
    static RunConfig from_toml(const std::filesystem::path& file);
};

/// Hash of everything that affects results (out and checkpoint flag excluded);
/// counts must already be resolved for two equivalent configs to agree.
std::string config_hash(const RunConfig& cfg);

enum class SampleKind : std::uint8_t { vqa, caption, gen };

struct SampleRef {
    SampleKind kind;
    int index;
    bool operator==(const SampleRef&) const = default;
};

/// Global shuffle of the union, cut into batches of batch_size (last one partial).
std::vector<std::vector<SampleRef>> mix_stream(int n_vqa, int n_caption, int n_gen, int batch_size,
                                               std::mt19937_64& rng);

struct NonFiniteLoss : std::runtime_error {
    NonFiniteLoss(long step, const std::string& component);
    long step;
};

struct RunResult {
    std::string config_hash;
    nlohmann::json final_metrics;  // evaluation report keys
    double final_total_loss = 0.0;
    double final_text_loss = 0.0;
    std::optional<double> final_vision_loss;
    long steps = 0;
    int snapshots = 0;
    double wall_clock_s = 0.0;

    nlohmann::json to_json() const;
    static RunResult from_json(const nlohmann::json& j);
};

/// Optional per-step observer (step, total loss); used by the CLI for progress.
using StepCallback = std::function<void(long step, long total_steps, double loss)>;

/// Trains, evaluates at every snapshot and writes run.json, log.jsonl and
/// model.ckpt under cfg.out. Counts are resolved against the dataset first.
RunResult train(RunConfig cfg, const StepCallback& on_step = {});

/// Copy of cfg with unset counts filled from the dataset manifest and task mode.
RunConfig resolve_counts(const RunConfig& cfg);

/// Reads a finished run directory; nullopt when run.json is missing or stale.
std::optional<RunResult> finished_run(const std::filesystem::path& dir, const std::string& expected_hash);

}  // namespace uvlm::training
