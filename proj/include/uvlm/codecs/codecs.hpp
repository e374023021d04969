#pragma once

// Frozen vision tokenizers: a vector-quantised patch autoencoder (discrete) and
// a patch encoder with an L2-normalised bottleneck (continuous). Both work on
// non-overlapping P x P patches, so an image becomes a G x G grid, G = R / P.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "uvlm/core/nn.hpp"
#include "uvlm/dataset/builder.hpp"
#include "uvlm/dataset/types.hpp"

namespace uvlm::codecs {

using dataset::Image;

struct CodecConfig {
    int codebook_size = 512;  // K
    int dim = 128;            // d
    int patch = 8;            // P
    int resolution = 64;      // R
    int hidden = 256;
    int batch = 512;  // patches per step
    int steps = 3000;
    float lr = 2e-3f;
    float commitment = 0.25f;
    float ema_decay = 0.99f;
    int restart_every = 100;  // dead-code restart period, steps
    float psnr_gate_db = 25.0f;
    std::uint64_t seed = 0;

    int grid() const { return resolution / patch; }
    int patch_dim() const { return patch * patch * 3; }
    void validate() const;
};

using TokenGrid = std::vector<int>;  // G*G indices, row-major

/// (G*G) x (P*P*3), each row a patch flattened HWC.
Mat patchify(const Image& img, int patch);
Image unpatchify(const Mat& patches, int resolution, int patch);

class DiscreteCodec {
public:
    DiscreteCodec() = default;
    DiscreteCodec(const CodecConfig& cfg, std::mt19937_64& rng);
    DiscreteCodec(const DiscreteCodec&) = delete;
    DiscreteCodec& operator=(const DiscreteCodec&) = delete;
    DiscreteCodec(DiscreteCodec&&) = default;
    DiscreteCodec& operator=(DiscreteCodec&&) = default;

    TokenGrid encode(const Image& img) const;
    Image decode(const TokenGrid& grid) const;

    /// Pre-quantisation encoder output, one row per patch.
    void encode_features(const Mat& patches, Mat& z, Mlp::Cache* cache = nullptr) const;
    /// Nearest codebook entry per row of z.
    std::vector<int> quantize(const Mat& z) const;
    void decode_patches(const Mat& q, Mat& out, Mlp::Cache* cache = nullptr) const;

    const Mat& codebook() const { return codebook_->value; }
    Mat& codebook_mut() { return codebook_->value; }
    const CodecConfig& config() const { return cfg_; }
    ParamStore& store() { return *store_; }
    const ParamStore& store() const { return *store_; }
    const Mlp& encoder() const { return enc_; }
    const Mlp& decoder() const { return dec_; }

private:
    CodecConfig cfg_;
    std::unique_ptr<ParamStore> store_;
    Mlp enc_;
    Mlp dec_;
    Param* codebook_ = nullptr;
};

class ContinuousCodec {
public:
    ContinuousCodec() = default;
    /// with_decoder is only needed while training.
    ContinuousCodec(const CodecConfig& cfg, std::mt19937_64& rng, bool with_decoder);
    ContinuousCodec(const ContinuousCodec&) = delete;
    ContinuousCodec& operator=(const ContinuousCodec&) = delete;
    ContinuousCodec(ContinuousCodec&&) = default;
    ContinuousCodec& operator=(ContinuousCodec&&) = default;

    /// (G*G) x d, every row unit norm.
    Mat encode(const Image& img) const;

    void encode_raw(const Mat& patches, Mat& z, Mlp::Cache* cache = nullptr) const;
    const CodecConfig& config() const { return cfg_; }
    ParamStore& store() { return *store_; }
    const ParamStore& store() const { return *store_; }
    ParamStore& decoder_store() { return *dec_store_; }
    const Mlp& encoder() const { return enc_; }
    const Mlp& decoder() const { return dec_; }
    bool has_decoder() const { return dec_store_ != nullptr; }
    void drop_decoder() {
        dec_store_.reset();
        dec_ = Mlp{};
    }

private:
    CodecConfig cfg_;
    std::unique_ptr<ParamStore> store_;
    std::unique_ptr<ParamStore> dec_store_;
    Mlp enc_;
    Mlp dec_;
};

/// Row-wise L2 normalisation; writes the pre-normalisation norms when asked.
void l2_normalize_rows(const Mat& z, Mat& u, std::vector<float>* norms = nullptr);

struct Codecs {
    DiscreteCodec discrete;
    ContinuousCodec continuous;
    std::uint64_t hash = 0;  // over both frozen parameter sets
    std::uint64_t train_seed = 0;

    std::uint64_t content_hash() const;
};

struct CodecTrainReport {
    float discrete_psnr_db = 0.0f;
    float continuous_psnr_db = 0.0f;
    float codebook_utilization = 0.0f;  // fraction of entries used on the training set
    int train_images = 0;
    int heldout_images = 0;
};

/// Trains both codecs. Throws std::runtime_error when held-out discrete
/// reconstruction misses the PSNR gate.
Codecs train_codecs(const std::vector<Image>& train, const std::vector<Image>& heldout,
                    const CodecConfig& cfg, CodecTrainReport* report = nullptr);

float psnr_db(const Image& a, const Image& b);
float codebook_utilization(const DiscreteCodec& codec, const std::vector<Image>& images);

/// Trains on the first n_images distinct training images of a dataset (VQA,
/// caption, then generation records) and holds out test generation targets.
Codecs train_codecs_on_dataset(const dataset::LoadedDataset& ds, int n_images, int n_heldout, const CodecConfig& cfg,
                               CodecTrainReport* report = nullptr);

/// codecs/discrete.ckpt, codecs/continuous.ckpt, codecs/meta.json.
void save_codecs(const Codecs& codecs, const std::filesystem::path& dir, const CodecTrainReport* report = nullptr);
/// Verifies the stored hash against the loaded parameters.
Codecs load_codecs(const std::filesystem::path& dir);

}  // namespace uvlm::codecs
