#pragma once

// Minimal layer library with hand-written backward passes. Layers do not own
// their parameters; a ParamStore does, so aliasing (shared adapters) is just two
// layers pointing at the same Param.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "uvlm/core/tensor.hpp"

namespace uvlm {

enum class ParamGroup { trunk, adapter, head };

struct Param {
    std::string name;
    ParamGroup group = ParamGroup::trunk;
    bool decay = true;
    Mat value;
    Mat grad;
    Mat adam_m;
    Mat adam_v;
};

class ParamStore {
public:
    Param& add(const std::string& name, int rows, int cols, ParamGroup group, bool decay);
    Param* find(const std::string& name);
    const Param* find(const std::string& name) const;

    std::vector<Param*> params();
    std::vector<const Param*> params() const;
    std::size_t count() const;  // scalar parameter count
    void zero_grad();

    /// FNV-1a 64 over names, shapes and values in registration order.
    std::uint64_t content_hash() const;

private:
    std::vector<std::unique_ptr<Param>> params_;
};

void init_normal(Param& p, std::mt19937_64& rng, float stddev);
void init_constant(Param& p, float v);

struct Linear {
    Param* weight = nullptr;  // in x out
    Param* bias = nullptr;    // 1 x out, may be null

    static Linear create(ParamStore& store, const std::string& name, int in, int out,
                         ParamGroup group, std::mt19937_64& rng, float init_std,
                         bool with_bias = true);

    int in_dim() const { return weight->value.rows; }
    int out_dim() const { return weight->value.cols; }

    void forward(const Mat& x, Mat& y) const;
    /// Accumulates parameter grads; writes dx when non-null.
    void backward(const Mat& x, const Mat& dy, Mat* dx) const;
};

struct LayerNorm {
    Param* gamma = nullptr;
    Param* beta = nullptr;

    static LayerNorm create(ParamStore& store, const std::string& name, int dim,
                            ParamGroup group);

    /// Stores per-row mean and rstd when stats is non-null.
    void forward(const Mat& x, Mat& y, std::vector<float>* mean,
                 std::vector<float>* rstd) const;
    void backward(const Mat& x, const std::vector<float>& mean,
                  const std::vector<float>& rstd, const Mat& dy, Mat& dx) const;
};

/// Linear -> GELU -> Linear.
struct Mlp {
    Linear fc1;
    Linear fc2;

    struct Cache {
        Mat pre;
        Mat act;
    };

    static Mlp create(ParamStore& store, const std::string& name, int in, int hidden, int out,
                      ParamGroup group, std::mt19937_64& rng, float init_std);

    void forward(const Mat& x, Mat& y, Cache* cache) const;
    void backward(const Mat& x, const Cache& cache, const Mat& dy, Mat* dx) const;
};

struct OptimizerConfig {
    float lr_trunk = 3e-4f;
    float lr_adapter = 1e-3f;
    float lr_head = 1e-3f;
    float weight_decay = 0.01f;
    float beta1 = 0.9f;
    float beta2 = 0.999f;
    float warmup_fraction = 0.03f;
    float grad_clip = 1.0f;  // global norm, <= 0 disables
};

/// Decoupled-weight-decay Adam with per-group learning rates, linear warmup and
/// cosine decay to zero over total_steps.
class AdamW {
public:
    AdamW(OptimizerConfig cfg, long total_steps);

    /// Applies one update from the accumulated grads. Returns the pre-clip grad norm.
    float step(ParamStore& store);
    float lr_scale(long step) const;
    long steps_taken() const { return t_; }

private:
    OptimizerConfig cfg_;
    long total_;
    long t_ = 0;
};

}  // namespace uvlm
