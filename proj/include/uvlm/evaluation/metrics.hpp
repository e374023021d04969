#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "uvlm/dataset/builder.hpp"
#include "uvlm/dataset/types.hpp"

namespace uvlm::eval {

using dataset::Attribute;
using dataset::ClockTime;
using dataset::Corner;
using dataset::Weather;

struct ParsedAnswer {
    Attribute attribute = Attribute::time;
    std::variant<std::monostate, ClockTime, int, Weather, Corner> value;

    bool parsed() const { return value.index() != 0; }
};

/// Total: every string maps to a value or to unparseable. First match wins.
ParsedAnswer parse_answer(Attribute attribute, std::string_view text);

/// Circular errors mod 12 / 60 / 60, floored at 0. nullopt prediction scores 0.
double score_time(const std::optional<ClockTime>& pred, const ClockTime& gt);
double score_battery(const std::optional<int>& pred, int gt);
double score_match(std::string_view pred, Weather gt);
double score_match(std::string_view pred, Corner gt);

/// Score of one free-text answer against the attribute value in `spec`.
double score_answer(Attribute attribute, std::string_view text, const dataset::WatchFaceSpec& spec);

struct UndReport {
    std::optional<double> time_acc, weather_acc, position_acc, battery_acc, total_acc;
    std::map<std::string, int> questions;  // per attribute

    nlohmann::json to_json() const;
};

/// Ground truth comes from parsing each row's reference answer.
UndReport score_understanding(const std::vector<dataset::VqaRow>& rows, const std::vector<std::string>& predictions);

struct Moments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
};

/// Mean and (population) covariance of the rows of x.
Moments moments_of(const Eigen::MatrixXd& x);

/// ||mu1 - mu2||^2 + Tr(S1 + S2 - 2 (S1 S2)^(1/2)); rejects non-symmetric input.
double frechet_distance(const Moments& a, const Moments& b);

struct GenRecord {
    std::string id;
    bool triggered = false;
    double faithfulness = 0.0;  // [0, 1], mean over included attributes
    std::vector<std::string> unreadable;
};

struct GenReport {
    std::optional<double> fcd;
    std::optional<double> faithfulness;  // 0-100
    std::map<std::string, double> faithfulness_by_attribute;
    double trigger_rate = 0.0;
    int samples = 0;
    std::vector<GenRecord> records;

    nlohmann::json to_json(bool with_records = false) const;
};

struct GenCase {
    std::string id;
    std::vector<Attribute> attributes;
    dataset::WatchFaceSpec target;
};

/// Faithfulness of each generated image to its case via the extractor; fcd is
/// computed by the caller from codec features since it needs the codecs.
GenReport score_generation(const std::vector<GenCase>& cases, const std::vector<dataset::Image>& generated,
                           const std::vector<bool>& triggered);

/// Report keys exactly as the evaluation output file.
nlohmann::json eval_report_json(const std::optional<UndReport>& und, const std::optional<GenReport>& gen);

}  // namespace uvlm::eval
