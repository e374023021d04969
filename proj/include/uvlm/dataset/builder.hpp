#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uvlm/dataset/sampling.hpp"
#include "uvlm/dataset/types.hpp"

namespace uvlm::dataset {

inline constexpr int kFullTrainCount = 60000;
inline constexpr int kTestVqaCount = 1000;
inline constexpr int kTestGenCount = 500;

struct DatasetConfig {
    std::uint64_t seed = 0;
    int scale = 10;  // train counts are 60K / scale per kind
    std::optional<int> train_count;  // per-kind override of the scaled count
    BiasConfig bias;
    int resolution = 64;
    int patch = 8;
};

struct Counts {
    int vqa = 0;
    int caption = 0;
    int gen = 0;
    int test_vqa = 0;
    int test_gen = 0;
    bool operator==(const Counts&) const = default;
};

Counts counts_for(const DatasetConfig& cfg);

struct DatasetManifest {
    std::uint64_t seed = 0;
    int scale = 10;
    Counts counts;
    BiasConfig bias;
    std::string template_version;
    int resolution = 64;
    int patch = 8;

    nlohmann::json to_json() const;
    static DatasetManifest from_json(const nlohmann::json& j);
};

struct VqaRow {
    std::string id;
    std::string image_id;
    Attribute attribute = Attribute::time;
    std::string question;
    std::string answer;
};

struct CaptionRow {
    std::string id;
    std::string image_id;
    std::vector<Attribute> attributes;
    std::string caption;
};

struct GenRow {
    std::string id;
    std::string target_image_id;
    std::vector<Attribute> attributes;
    std::string instruction;
};

nlohmann::json to_json(const VqaRow& r);
nlohmann::json to_json(const CaptionRow& r);
nlohmann::json to_json(const GenRow& r);
VqaRow vqa_from_json(const nlohmann::json& j);
CaptionRow caption_from_json(const nlohmann::json& j);
GenRow gen_from_json(const nlohmann::json& j);

std::string record_id(RecordKind kind, Split split, int index);

/// One record plus the spec of its image; a pure function of (config, split, index).
template <typename Row>
struct Generated {
    Row row;
    WatchFaceSpec spec;
};

Generated<VqaRow> make_vqa_record(const DatasetConfig& cfg, Split split, int index);
Generated<CaptionRow> make_caption_record(const DatasetConfig& cfg, Split split, int index);
Generated<GenRow> make_gen_record(const DatasetConfig& cfg, Split split, int index);

/// Writes images/, vqa.jsonl, caption.jsonl, gen.jsonl, test/{vqa,gen}.jsonl and
/// manifest.json under `out`. Throws if `out` exists and overwrite is false.
DatasetManifest build_dataset(const DatasetConfig& cfg, const std::filesystem::path& out,
                              bool overwrite);

struct LoadedDataset {
    std::filesystem::path root;
    DatasetManifest manifest;
    std::vector<VqaRow> vqa;
    std::vector<CaptionRow> caption;
    std::vector<GenRow> gen;
    std::vector<VqaRow> test_vqa;
    std::vector<GenRow> test_gen;

    Image load_image(const std::string& image_id) const;
};

LoadedDataset load_dataset(const std::filesystem::path& root);

}  // namespace uvlm::dataset
