#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uvlm/core/nn.hpp"

namespace uvlm {

using json = nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 1469598103934665603ull);
std::string hex64(std::uint64_t v);

std::string read_text(const std::filesystem::path& path);
/// Writes through a temporary file and renames, so readers never see a partial file.
void write_text(const std::filesystem::path& path, std::string_view text);

std::vector<json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path, const std::vector<json>& records);

/// Binary checkpoint: magic, JSON metadata, then every parameter of every store
/// (name, shape, float32 values). Optimizer moments are not persisted.
void save_checkpoint(const std::filesystem::path& path, const json& meta,
                     const std::vector<const ParamStore*>& stores);

/// Reads only the metadata block.
json read_checkpoint_meta(const std::filesystem::path& path);

/// Fills stores whose parameters were already created with matching names and
/// shapes. Throws on any mismatch.
json load_checkpoint(const std::filesystem::path& path, const std::vector<ParamStore*>& stores);

}  // namespace uvlm
