#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace uvlm {

/// Dense row-major float matrix. The only tensor type in the project.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<float> data;

    Mat() = default;
    Mat(int r, int c, float fill = 0.0f)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

    void resize(int r, int c) {
        rows = r;
        cols = c;
        data.assign(static_cast<std::size_t>(r) * c, 0.0f);
    }
    void zero() { std::fill(data.begin(), data.end(), 0.0f); }

    std::size_t size() const { return data.size(); }
    float* ptr() { return data.data(); }
    const float* ptr() const { return data.data(); }
    float* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const float* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }
    std::span<float> row_span(int r) { return {row(r), static_cast<std::size_t>(cols)}; }
    std::span<const float> row_span(int r) const { return {row(r), static_cast<std::size_t>(cols)}; }
    float& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    float at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

inline void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

/// C = op(A) * op(B) (+ C when accumulate), dispatched to the active kernels.
void matmul(const Mat& a, bool trans_a, const Mat& b, bool trans_b, Mat& c,
            bool accumulate = false);

/// Copies rows `idx` of src into dst (dst resized to idx.size() x src.cols).
void gather_rows(const Mat& src, std::span<const int> idx, Mat& dst);

}  // namespace uvlm
