#pragma once

#include <optional>
#include <vector>

#include "uvlm/evaluation/metrics.hpp"
#include "uvlm/model/vlm.hpp"

namespace uvlm::eval {

/// Test split held in memory with everything that does not depend on the model.
struct EvalSet {
    std::vector<dataset::VqaRow> vqa;
    std::vector<dataset::Image> vqa_images;
    std::vector<GenCase> gen;
    std::vector<std::string> gen_instructions;
    std::vector<dataset::Image> gen_targets;
    std::optional<Moments> target_moments;  // continuous-codec features of gen_targets
};

/// limit < 0 keeps the whole split.
EvalSet prepare_eval_set(const dataset::LoadedDataset& ds, const codecs::Codecs& codecs, int vqa_limit = -1,
                         int gen_limit = -1);

/// Per-image feature: mean of the continuous codec's patch embeddings.
Eigen::MatrixXd codec_features(const codecs::Codecs& codecs, const std::vector<dataset::Image>& images);

std::vector<std::string> answer_all(const model::UnifiedVLM& m, const EvalSet& set, int max_tokens = 24);

UndReport evaluate_understanding(const model::UnifiedVLM& m, const EvalSet& set);

/// Continuous-output models report fcd and faithfulness as absent.
GenReport evaluate_generation(const model::UnifiedVLM& m, const EvalSet& set, const codecs::Codecs& codecs,
                              const model::GenerationOptions& opt = {});

}  // namespace uvlm::eval
