#pragma once

// Arithmetic inner loops shared by every numeric module.
//
// Each kernel has a scalar reference implementation and an AVX2/FMA variant.
// The active table is picked once at startup from CPUID and can be pinned with
// the UVLM_DEVICE environment variable (auto | cpu | scalar | avx2). Both tables are
// reachable directly so tests can compare them element by element.

#include <cstddef>
#include <string_view>

namespace uvlm::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct AdamWStep {
    float lr = 1e-3f;
    float beta1 = 0.9f;
    float beta2 = 0.999f;
    float eps = 1e-8f;
    float weight_decay = 0.0f;
    float bias_correction1 = 1.0f;  // 1 - beta1^t
    float bias_correction2 = 1.0f;  // 1 - beta2^t
};

struct Kernels {
    Isa isa;

    /// Row-major C[m,n] = alpha * op(A) * op(B) + beta * C.
    /// op(A) is m x k (A stored k x m when trans_a), op(B) is k x n.
    void (*gemm)(bool trans_a, bool trans_b, int m, int n, int k, float alpha,
                 const float* a, int lda, const float* b, int ldb, float beta,
                 float* c, int ldc);

    float (*dot)(const float* x, const float* y, std::size_t n);
    void (*axpy)(float alpha, const float* x, float* y, std::size_t n);
    void (*scale)(float alpha, float* x, std::size_t n);
    float (*sum_sq)(const float* x, std::size_t n);

    /// In-place softmax over x[0, n). Returns log(sum(exp(x - max))) + max.
    float (*softmax)(float* x, std::size_t n);

    /// tanh-approximated GELU and its derivative dy -> dx given the pre-activation.
    void (*gelu)(const float* x, float* y, std::size_t n);
    void (*gelu_backward)(const float* x, const float* dy, float* dx, std::size_t n);

    /// y = (x - mean) * rstd * gamma + beta for one row; writes mean and rstd.
    void (*layernorm)(const float* x, const float* gamma, const float* beta, float* y,
                      std::size_t n, float eps, float* mean, float* rstd);

    void (*adamw)(float* param, const float* grad, float* m, float* v, std::size_t n,
                  const AdamWStep& step);
};

const Kernels& scalar_kernels();

/// Null when the host CPU lacks AVX2+FMA.
const Kernels* avx2_kernels();

const Kernels& active();

/// Pins the active table. Throws std::runtime_error if the ISA is unavailable.
void select(Isa isa);

}  // namespace uvlm::simd
