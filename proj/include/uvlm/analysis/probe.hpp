#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "uvlm/dataset/types.hpp"
#include "uvlm/model/vlm.hpp"

namespace uvlm::analysis {

/// Adapter-output rows at the weather cell, one per image.
struct TokenMatrix {
    Eigen::MatrixXd x;        // N x hidden
    std::vector<int> labels;  // weather index
    std::vector<std::string> sample_ids;
    std::string model_id;
    std::vector<int> cells;  // grid cell taken from each image

    int rows() const { return static_cast<int>(x.rows()); }
    void validate() const;
};

struct ProbeImage {
    std::string id;
    dataset::WatchFaceSpec spec;
    dataset::Image image;
};

/// n distinct seeded renders; ids "probe_000000", ...
std::vector<ProbeImage> probe_images(int n, std::uint64_t seed);

/// Row i: understanding adapter output (after the affine map when the model
/// has one) at the first grid cell of the weather glyph.
TokenMatrix collect_tokens(const model::UnifiedVLM& m, const std::vector<ProbeImage>& images, int n,
                           const std::string& model_id = {});

struct ProbeOptions {
    int n_train = 4000;
    int n_test = 1000;
    int epochs = 10;  // full-batch gradient steps
    double lr = 0.1;
    std::uint64_t seed = 0;
};

struct ProbeResult {
    double train_acc = 0.0;
    double test_acc = 0.0;
    std::vector<double> loss;  // per epoch, before the update
    nlohmann::json to_json() const;
};

/// Softmax regression on standardized features. Rows are ordered by sample id
/// before the seeded split, so the result does not depend on row order.
ProbeResult linear_probe(const TokenMatrix& t, const ProbeOptions& opt = {});

enum class Projection { pca, tsne };
Projection parse_projection(const std::string& s);

struct TsneOptions {
    double perplexity = 30.0;
    int iterations = 1000;
    double learning_rate = 200.0;
    double early_exaggeration = 12.0;
    int exaggeration_iters = 250;
    std::uint64_t seed = 0;
};

struct Projection2d {
    Eigen::MatrixX2d xy;
    std::vector<int> labels;
    std::vector<std::string> sample_ids;
    double explained_variance = 0.0;  // pca only: fraction captured by the two axes
};

Projection2d pca_2d(const TokenMatrix& t);
Projection2d tsne_2d(const TokenMatrix& t, const TsneOptions& opt = {});
Projection2d project_2d(const TokenMatrix& t, Projection method, const TsneOptions& opt = {});

/// Columns x,y,label,sample_id; labels written as weather names.
std::string coords_csv(const Projection2d& p);

}  // namespace uvlm::analysis
