#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace uvlm::model {

enum class InputCodec { discrete, continuous };
enum class OutputCodec { discrete, continuous, none };
enum class TaskMode { mixed, understanding_only, generation_only };

std::string to_string(InputCodec c);
std::string to_string(OutputCodec c);
std::string to_string(TaskMode m);
InputCodec parse_input_codec(const std::string& s);
OutputCodec parse_output_codec(const std::string& s);
TaskMode parse_task_mode(const std::string& s);

struct ModelConfig {
    InputCodec input_codec = InputCodec::continuous;
    OutputCodec output_codec = OutputCodec::continuous;
    TaskMode task_mode = TaskMode::mixed;
    bool share_adapters = true;
    bool affine_distortion = false;
    /// Unset means the default: 0.2 for continuous input with discrete output, else 1.0.
    std::optional<float> gen_loss_weight;
    int layers = 4;
    int hidden = 128;
    int heads = 4;
    int mlp_ratio = 4;
    int max_positions = 192;
    std::uint64_t seed = 0;

    float resolved_gen_loss_weight() const;
    bool has_generation() const { return output_codec != OutputCodec::none && task_mode != TaskMode::understanding_only; }
    bool has_understanding() const { return task_mode != TaskMode::generation_only; }

    /// Throws std::invalid_argument on violated invariants.
    void validate() const;

    nlohmann::json to_json() const;
    static ModelConfig from_json(const nlohmann::json& j);
};

}  // namespace uvlm::model
