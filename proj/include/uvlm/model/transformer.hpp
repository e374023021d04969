#pragma once

// Pre-LN causal transformer over precomputed input rows (token embeddings or
// adapter outputs, positional embeddings already added by the caller).

#include <random>
#include <string>
#include <vector>

#include "uvlm/core/nn.hpp"

namespace uvlm::model {

struct TransformerDims {
    int layers = 4;
    int hidden = 128;
    int heads = 4;
    int mlp_ratio = 4;
    int max_positions = 192;
};

class Transformer {
public:
    struct LayerCache {
        Mat x_in;
        Mat ln1;
        std::vector<float> ln1_mean, ln1_rstd;
        Mat qkv;
        Mat probs;  // heads stacked: (heads * T) x T
        Mat attn;   // concatenated head outputs, T x H
        Mat x_mid;
        Mat ln2;
        std::vector<float> ln2_mean, ln2_rstd;
        Mlp::Cache mlp;
    };

    struct Cache {
        std::vector<LayerCache> layers;
        Mat final_in;
        std::vector<float> lnf_mean, lnf_rstd;
    };

    /// Keys and values of every processed position, per layer.
    struct KvCache {
        std::vector<Mat> k;
        std::vector<Mat> v;
        int length = 0;
    };

    Transformer() = default;
    Transformer(ParamStore& store, const TransformerDims& dims, std::mt19937_64& rng);

    const TransformerDims& dims() const { return dims_; }

    /// Full-sequence forward from position 0; fills cache for backward.
    void forward(const Mat& x, Mat& out, Cache* cache) const;
    /// dx is the gradient with respect to the input rows.
    void backward(const Cache& cache, const Mat& dout, Mat& dx) const;

    KvCache make_kv() const;
    /// Appends x's rows after kv.length positions; returns their final hidden rows.
    void forward_incremental(const Mat& x, KvCache& kv, Mat& out) const;

private:
    struct Block {
        LayerNorm ln1;
        Linear qkv;
        Linear proj;
        LayerNorm ln2;
        Mlp mlp;
    };

    void attention(const float* q, int ldq, const float* k, int ldk, const float* v, int ldv, int t_new,
                   int past, Mat* probs, float* out, int ldo) const;

    TransformerDims dims_;
    std::vector<Block> blocks_;
    LayerNorm final_ln_;
};

}  // namespace uvlm::model
