#pragma once

#include "mht/lossy_coding.hpp"
#include "mht/mary_testing.hpp"
#include "mht/measures.hpp"

#include <json.hpp>

#include <optional>
#include <string>

// JSON ingestion for problem instances.
//
// Joint instances come in two equivalent forms:
//   {"V": M, "Y": n, "pvy": [[...], ...]}            rows indexed by v
//   {"prior": [...], "likelihood": [[...], ...]}     P_VY(v,y) = prior ⋅ rows
// plus optional fields:
//   "metric": [[...], ...]   decoding scores q(v,y) for max-metric analysis
//   "labels": {"V": [...], "Y": [...]}   carried as metadata only
//
// Lossy instances:
//   {"prior": [...], "d": [[...], ...], "D": x, "codebook": [w...],
//    "qv": [...] (optional, default uniform), "M": int (optional)}
//
// Measures are either a bare array or {"qy": [...]} / {"weights": [...]}.

namespace mht {

struct JointInstance {
    JointDistribution pvy;
    std::optional<MetricMatrix> metric;
    nlohmann::json raw; // parsed document, echoed back in reports
};

struct LossyInstance {
    FiniteMeasure pv;
    DistortionSpec spec;
    LossyCode code;
    FiniteMeasure qv; // uniform unless given
    int num_codewords = 0;
    nlohmann::json raw;
};

JointDistribution joint_from_json(const nlohmann::json& j);
FiniteMeasure measure_from_json(const nlohmann::json& j);

JointInstance load_joint_instance(const std::string& path);
LossyInstance load_lossy_instance(const std::string& path);
FiniteMeasure load_measure(const std::string& path);

// JSON mirroring the instance's input form.
nlohmann::json joint_to_json(const JointDistribution& pvy,
                             bool prior_likelihood_form = false);
nlohmann::json measure_to_json(const FiniteMeasure& m);

} // namespace mht
