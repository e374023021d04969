#pragma once

#include <filesystem>

#include "uvlm/dataset/types.hpp"

namespace uvlm::dataset {

/// 8-bit RGB PNG. Values are rounded to the nearest 1/255.
void write_png(const std::filesystem::path& path, const Image& img);
Image read_png(const std::filesystem::path& path);

}  // namespace uvlm::dataset
