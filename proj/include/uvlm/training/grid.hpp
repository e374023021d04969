#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "uvlm/training/trainer.hpp"

namespace uvlm::training {

/// Understanding samples split evenly between VQA and captions.
struct GridCell {
    int und = 0;
    int gen = 0;
    bool operator==(const GridCell&) const = default;
};

/// The two data-scaling sweeps around a base unit u:
/// und in {0, 2u, 3u, 4u, 5u} with gen = u, then gen in {0, u, 1.5u, 2u, 3u} with und = 2u.
std::vector<GridCell> scaling_cells(int unit);

/// Run config for one cell. und == 0 gives a generation-only model, gen == 0 an
/// understanding-only model without generation head.
RunConfig cell_config(const RunConfig& base, const GridCell& cell);

/// "disc-disc", "cont*_u", "disc_g", "cont-cont-D", ...
std::string model_label(const model::ModelConfig& m);

struct GridSpec {
    RunConfig base;
    std::vector<GridCell> cells;
    std::filesystem::path out;

    /// Keys: out, [base] (run keys), and either cells = [[und, gen], ...] or
    /// sweep = "scaling" with unit = N.
    static GridSpec from_toml(const std::filesystem::path& file);
};

struct GridRow {
    std::string model;
    GridCell cell;
    std::string config_hash;
    std::filesystem::path run_dir;
    RunResult result;

    nlohmann::json to_json() const;
};

/// Runs every cell not already finished (matched by config hash) and writes
/// out/results.jsonl, one row per cell in cell order.
std::vector<GridRow> run_grid(const GridSpec& spec, const StepCallback& on_step = {});

}  // namespace uvlm::training
