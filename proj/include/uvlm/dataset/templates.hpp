#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "uvlm/dataset/types.hpp"

namespace uvlm::dataset {

inline constexpr std::string_view kTemplateVersion = "watchface-templates-v1";
inline constexpr int kTemplatesPerSlot = 4;

using TemplateSet = std::array<std::string_view, kTemplatesPerSlot>;

/// Placeholders: {time} {weather} {pos} {battery}.
const TemplateSet& vqa_questions(Attribute a);
const TemplateSet& vqa_answers(Attribute a);
const TemplateSet& caption_clauses(Attribute a);
const TemplateSet& caption_prompts();
const TemplateSet& instruction_clauses(Attribute a);
const TemplateSet& instruction_frames();  // {clauses}

/// Substitutes the placeholder for attribute `a` from the spec.
std::string fill(std::string_view tmpl, Attribute a, const WatchFaceSpec& spec);

/// Capitalises the first letter and appends a period.
std::string sentence(const std::vector<std::string>& clauses);

/// Every literal string the template bank can emit, used to build the vocabulary.
std::vector<std::string> template_corpus();

}  // namespace uvlm::dataset
