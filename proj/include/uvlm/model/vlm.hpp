#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "uvlm/codecs/codecs.hpp"
#include "uvlm/core/nn.hpp"
#include "uvlm/model/config.hpp"
#include "uvlm/model/tokenizer.hpp"
#include "uvlm/model/transformer.hpp"

namespace uvlm::model {

using dataset::Image;

/// What a position's output is trained to predict.
enum class Role : std::uint8_t { none, text, vision };
/// How a position's input row is formed.
enum class Slot : std::uint8_t { token, und_vision, gen_vision };

/// One laid-out sequence. Vision slots consume rows of und_vision / gen_vision
/// in order.
struct Sequence {
    std::vector<int> tokens;  // -1 at vision slots
    std::vector<Slot> slot;
    std::vector<Role> role;
    std::vector<int> text_target;    // token id where role == text, else -1
    std::vector<int> vision_target;  // discrete id or row of vision_target_vecs where role == vision, else -1
    Mat und_vision;                  // G^2 x d_in codec features
    Mat gen_vision;                  // G^2 x d_out teacher-forcing inputs
    Mat vision_target_vecs;          // continuous targets

    int length() const { return static_cast<int>(tokens.size()); }
    int count(Role r) const;
    int count(Slot s) const;
};

struct LossBreakdown {
    double text_ce = 0.0;      // mean over text-target positions
    double vision_loss = 0.0;  // mean CE (discrete) or mean 1 - cos (continuous)
    double total = 0.0;        // text_ce + gen_loss_weight * vision_loss
    int text_positions = 0;
    int vision_positions = 0;
};

inline double combine_losses(double text_ce, double vision_loss, float gen_loss_weight) {
    return text_ce + static_cast<double>(gen_loss_weight) * vision_loss;
}

/// Sums of per-position losses; used when accumulating over a batch.
struct LossSums {
    double text = 0.0;
    double vision = 0.0;
};

/// Orthogonal times bounded diagonal, plus a fixed bias; applied to row vectors
/// as y' = A y + b.
struct AffineDistortion {
    Mat a;      // H x H
    Mat a_inv;  // H x H
    std::vector<float> bias;

    static AffineDistortion random(int dim, std::mt19937_64& rng);
    void apply(const Mat& y, Mat& out) const;
    void apply_inverse(const Mat& y, Mat& out) const;
    /// dy = dout * A
    void backward(const Mat& dout, Mat& dy) const;
    double condition_number() const;
};

/// Adapter from codec space into the trunk: a single linear map for discrete
/// codebook vectors, a two-layer MLP for continuous embeddings.
struct Adapter {
    bool is_mlp = false;
    Linear linear;
    Mlp mlp;

    struct Cache {
        Mlp::Cache mlp;
    };

    void forward(const Mat& x, Mat& y, Cache* cache) const;
    void backward(const Mat& x, const Cache& cache, const Mat& dy) const;
    std::vector<const Param*> params() const;
};

struct GenerationOptions {
    bool force_trigger = true;
    int max_prefix_tokens = 4;  // greedy text budget while waiting for <image>
    float temperature = 0.0f;   // 0 = greedy
    std::uint64_t sample_seed = 0;
};

struct GenerationResult {
    bool triggered = false;  // model emitted <image> on its own
    bool produced = false;   // false only when not triggered and forcing is off
    codecs::TokenGrid tokens;  // discrete output
    Mat embeddings;            // continuous output, G^2 x d, unit rows
};

class UnifiedVLM {
public:
    /// Codecs must outlive the model; their parameters are never touched.
    static UnifiedVLM assemble(const ModelConfig& cfg, const codecs::Codecs& codecs);

    UnifiedVLM(UnifiedVLM&&) = default;
    UnifiedVLM& operator=(UnifiedVLM&&) = default;

    const ModelConfig& config() const { return cfg_; }
    const Tokenizer& tokenizer() const { return tok_; }
    ParamStore& store() { return *store_; }
    const ParamStore& store() const { return *store_; }
    const AffineDistortion* affine() const { return affine_ ? &*affine_ : nullptr; }
    int grid_tokens() const { return grid_ * grid_; }
    float gen_loss_weight() const { return gen_weight_; }

    std::vector<const Param*> understanding_adapter_params() const;
    std::vector<const Param*> generation_adapter_params() const;
    const Linear& language_head() const { return lm_head_; }
    const Linear* generation_head() const { return gen_head_ ? &*gen_head_ : nullptr; }

    /// Codec features fed to the understanding adapter, G^2 x d.
    Mat understanding_features(const Image& img) const;
    /// Understanding adapter output rows, after the affine map when enabled.
    Mat understanding_embeddings(const Mat& features) const;

    Sequence layout_understanding(const Mat& features, const std::string& prompt, const std::string& answer) const;
    Sequence layout_understanding(const Image& img, const std::string& prompt, const std::string& answer) const;
    Sequence layout_generation(const std::string& instruction, const Image& target) const;

    /// Forward (and backward when requested) on one sequence. Per-position
    /// losses are scaled by text_scale / vision_scale in the gradient, so a
    /// batch mean is obtained by passing 1/n_text and weight/n_vision.
    LossSums accumulate(const Sequence& seq, float text_scale, float vision_scale, bool backward);

    /// Batch losses without touching gradients.
    LossBreakdown compute_loss(const std::vector<Sequence>& batch);

    /// Final-layer hidden rows for every position; layer >= 0 selects the residual
    /// stream entering that block instead.
    Mat hidden_states(const Sequence& seq, int layer = -1) const;

    std::string answer(const Image& img, const std::string& question, int max_tokens = 24) const;
    std::string answer_from_features(const Mat& features, const std::string& question, int max_tokens = 24) const;
    GenerationResult generate_image(const std::string& instruction, const GenerationOptions& opt = {}) const;

    void save(const std::filesystem::path& path, const nlohmann::json& extra = {}) const;
    static UnifiedVLM load(const std::filesystem::path& path, const codecs::Codecs& codecs);

private:
    UnifiedVLM() = default;

    void embed_inputs(const Sequence& seq, Mat& x, Mat* und_out, Adapter::Cache* und_cache, Mat* und_pre,
                      Mat* gen_out, Adapter::Cache* gen_cache) const;
    void vision_target_payload(const Image& target, std::vector<int>& ids, Mat& vecs, Mat& feed) const;
    void add_token_row(int id, int pos, Mat& row) const;

    ModelConfig cfg_;
    const codecs::Codecs* codecs_ = nullptr;
    Tokenizer tok_;
    int grid_ = 8;
    float gen_weight_ = 1.0f;
    std::unique_ptr<ParamStore> store_;
    Param* tok_emb_ = nullptr;
    Param* pos_emb_ = nullptr;
    Transformer trunk_;
    Adapter und_adapter_;
    std::optional<Adapter> gen_adapter_;  // aliases und_adapter_ params when shared
    std::optional<AffineDistortion> affine_;
    Linear lm_head_;
    std::optional<Linear> gen_head_;
};

/// Index of the maximum; ties go to the lowest index.
int argmax(const float* x, int n);

}  // namespace uvlm::model
