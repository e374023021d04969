#pragma once

// Samplers for specs and text records. They are templates over the random bit
// generator so tests can drive them with degenerate streams.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "uvlm/dataset/templates.hpp"
#include "uvlm/dataset/types.hpp"

namespace uvlm::dataset {

enum class RecordKind : std::uint8_t { vqa, caption, gen };
enum class Split : std::uint8_t { train, test };

/// Independent stream per record: generation of index i depends only on
/// (seed, kind, split, i).
std::mt19937_64 record_rng(std::uint64_t seed, RecordKind kind, Split split, std::uint64_t index);

/// The 12 ordered pairs of distinct corners, (weather_pos, battery_pos).
const std::array<std::pair<Corner, Corner>, 12>& corner_pairs();

template <typename Urbg>
WatchFaceSpec sample_spec(Urbg& rng) {
    WatchFaceSpec s;
    s.hour = std::uniform_int_distribution<int>(0, 11)(rng);
    s.minute = std::uniform_int_distribution<int>(0, 59)(rng);
    s.second = std::uniform_int_distribution<int>(0, 59)(rng);
    s.weather = static_cast<Weather>(std::uniform_int_distribution<int>(0, 2)(rng));
    const auto& pair = corner_pairs()[static_cast<std::size_t>(
        std::uniform_int_distribution<int>(0, 11)(rng))];
    s.weather_pos = pair.first;
    s.battery_pos = pair.second;
    s.battery = std::uniform_int_distribution<int>(0, 100)(rng);
    s.face_color = std::uniform_int_distribution<int>(0, kPaletteSize - 1)(rng);
    return s;
}

inline std::array<double, 5> vqa_attribute_weights(const BiasConfig& bias) {
    std::array<double, 5> w{0.2, 0.2, 0.2, 0.2, 0.2};
    if (bias.biased_attribute) {
        const double rest = (1.0 - bias.vqa_prob_for_biased) / 4.0;
        for (auto& x : w) x = rest;
        w[static_cast<std::size_t>(*bias.biased_attribute)] = bias.vqa_prob_for_biased;
    }
    return w;
}

template <typename Urbg>
VqaSample build_vqa(const WatchFaceSpec& spec, std::string image_id, Urbg& rng,
                    const BiasConfig& bias) {
    const auto w = vqa_attribute_weights(bias);
    std::discrete_distribution<int> pick(w.begin(), w.end());
    const Attribute a = kAttributes[static_cast<std::size_t>(pick(rng))];
    std::uniform_int_distribution<int> t(0, kTemplatesPerSlot - 1);
    const auto q = vqa_questions(a)[static_cast<std::size_t>(t(rng))];
    const auto ans = vqa_answers(a)[static_cast<std::size_t>(t(rng))];
    return {std::move(image_id), a, std::string(q), fill(ans, a, spec)};
}

/// Time always; the other four independently with p = 0.5 (the biased
/// attribute uses its own inclusion probability when bias applies).
template <typename Urbg>
std::vector<Attribute> sample_inclusion(Urbg& rng, const BiasConfig* bias) {
    std::vector<Attribute> out{Attribute::time};
    for (std::size_t i = 1; i < kAttributes.size(); ++i) {
        double p = 0.5;
        if (bias && bias->biased_attribute == kAttributes[i]) p = bias->caption_inclusion_prob_for_biased;
        if (std::bernoulli_distribution(p)(rng)) out.push_back(kAttributes[i]);
    }
    return out;
}

template <typename Urbg>
std::vector<std::string> render_clauses(const std::vector<Attribute>& attrs, const WatchFaceSpec& spec,
                                        Urbg& rng, const TemplateSet& (*bank)(Attribute)) {
    std::uniform_int_distribution<int> t(0, kTemplatesPerSlot - 1);
    std::vector<std::string> clauses;
    for (Attribute a : attrs) clauses.push_back(fill(bank(a)[static_cast<std::size_t>(t(rng))], a, spec));
    return clauses;
}

template <typename Urbg>
CaptionSample build_caption(const WatchFaceSpec& spec, std::string image_id, Urbg& rng,
                            const BiasConfig& bias) {
    auto attrs = sample_inclusion(rng, &bias);
    auto clauses = render_clauses(attrs, spec, rng, &caption_clauses);
    return {std::move(image_id), std::move(attrs), sentence(clauses)};
}

/// Generation data never sees the bias.
template <typename Urbg>
GenSample build_gen(const WatchFaceSpec& spec, std::string image_id, Urbg& rng) {
    auto attrs = sample_inclusion(rng, static_cast<const BiasConfig*>(nullptr));
    auto clauses = render_clauses(attrs, spec, rng, &instruction_clauses);
    std::string joined;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (i) joined += ", ";
        joined += clauses[i];
    }
    std::uniform_int_distribution<int> t(0, kTemplatesPerSlot - 1);
    std::string frame(instruction_frames()[static_cast<std::size_t>(t(rng))]);
    const auto pos = frame.find("{clauses}");
    frame.replace(pos, 9, joined);
    return {std::move(frame), std::move(attrs), spec, std::move(image_id)};
}

/// Deterministic caption prompt for a caption record id.
std::string caption_prompt_for(const std::string& record_id);

}  // namespace uvlm::dataset
