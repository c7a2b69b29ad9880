#include "mht/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace mht {

using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in, nullptr, /*allow_exceptions=*/true,
                           /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::vector<double> number_array(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(field + " must be a nonempty array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number())
            throw std::invalid_argument(field + " must contain numbers only");
        out.push_back(x.get<double>());
    }
    return out;
}

// Rectangular matrix as row-major values plus shape.
std::pair<std::vector<double>, std::pair<int, int>>
number_matrix(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(field + " must be a nonempty array of rows");
    std::vector<double> values;
    int cols = -1;
    for (const auto& row : j) {
        std::vector<double> r = number_array(row, field + " row");
        if (cols < 0)
            cols = static_cast<int>(r.size());
        else if (cols != static_cast<int>(r.size()))
            throw std::invalid_argument(field + " rows have unequal lengths");
        values.insert(values.end(), r.begin(), r.end());
    }
    return {std::move(values), {static_cast<int>(j.size()), cols}};
}

} // namespace

JointDistribution joint_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("instance must be a JSON object");
    if (j.contains("pvy")) {
        auto [values, shape] = number_matrix(j.at("pvy"), "pvy");
        auto [rows, cols] = shape;
        if (j.contains("V") && j.at("V").get<int>() != rows)
            throw std::invalid_argument("V does not match pvy row count");
        if (j.contains("Y") && j.at("Y").get<int>() != cols)
            throw std::invalid_argument("Y does not match pvy column count");
        JointDistribution pvy(rows, cols, std::move(values), true);
        require_valid(pvy, "pvy");
        return pvy;
    }
    if (j.contains("prior") && j.contains("likelihood")) {
        std::vector<double> prior = number_array(j.at("prior"), "prior");
        auto [rows_w, shape] = number_matrix(j.at("likelihood"), "likelihood");
        auto [rows, cols] = shape;
        if (static_cast<int>(prior.size()) != rows)
            throw std::invalid_argument(
                "prior length does not match likelihood row count");
        std::vector<double> mass(rows_w.size());
        for (int v = 0; v < rows; ++v)
            for (int y = 0; y < cols; ++y)
                mass[static_cast<std::size_t>(v) * cols + y] =
                    prior[static_cast<std::size_t>(v)] *
                    rows_w[static_cast<std::size_t>(v) * cols + y];
        JointDistribution pvy(rows, cols, std::move(mass), true);
        require_valid(pvy, "prior*likelihood");
        return pvy;
    }
    throw std::invalid_argument(
        "instance needs either \"pvy\" or \"prior\"+\"likelihood\"");
}

FiniteMeasure measure_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (j.contains("qy"))
            arr = &j.at("qy");
        else if (j.contains("weights"))
            arr = &j.at("weights");
        else
            throw std::invalid_argument("measure needs \"qy\" or \"weights\"");
    }
    std::vector<double> w = number_array(*arr, "measure");
    bool normalized = true;
    if (j.is_object() && j.contains("normalized"))
        normalized = j.at("normalized").get<bool>();
    FiniteMeasure m(std::move(w), normalized);
    require_valid(m, "measure");
    return m;
}

JointInstance load_joint_instance(const std::string& path) {
    JointInstance inst;
    inst.raw = parse_file(path);
    inst.pvy = joint_from_json(inst.raw);
    if (inst.raw.contains("metric")) {
        auto [values, shape] = number_matrix(inst.raw.at("metric"), "metric");
        auto [rows, cols] = shape;
        if (rows != inst.pvy.num_hypotheses ||
            cols != inst.pvy.num_observations)
            throw std::invalid_argument("metric shape does not match instance");
        inst.metric = MetricMatrix{rows, cols, std::move(values)};
    }
    return inst;
}

LossyInstance load_lossy_instance(const std::string& path) {
    LossyInstance inst;
    inst.raw = parse_file(path);
    const json& j = inst.raw;
    if (!j.is_object())
        throw std::invalid_argument("lossy instance must be a JSON object");
    inst.pv = FiniteMeasure(number_array(j.at("prior"), "prior"));
    require_valid(inst.pv, "prior");

    auto [values, shape] = number_matrix(j.at("d"), "d");
    auto [rows, cols] = shape;
    if (rows != static_cast<int>(inst.pv.size()))
        throw std::invalid_argument("d row count does not match prior length");
    inst.spec = DistortionSpec{rows, cols, std::move(values),
                               j.at("D").get<double>()};

    for (const auto& w : j.at("codebook"))
        inst.code.codewords.push_back(w.get<int>());

    if (j.contains("qv")) {
        inst.qv = FiniteMeasure(number_array(j.at("qv"), "qv"));
        require_valid(inst.qv, "qv");
        if (inst.qv.size() != inst.pv.size())
            throw std::invalid_argument("qv length does not match prior");
    } else {
        inst.qv = FiniteMeasure::uniform(inst.pv.size());
    }
    inst.num_codewords =
        j.contains("M") ? j.at("M").get<int>() : inst.code.size();
    return inst;
}

FiniteMeasure load_measure(const std::string& path) {
    return measure_from_json(parse_file(path));
}

json joint_to_json(const JointDistribution& pvy, bool prior_likelihood_form) {
    json out;
    if (!prior_likelihood_form) {
        out["V"] = pvy.num_hypotheses;
        out["Y"] = pvy.num_observations;
        json rows = json::array();
        for (int v = 0; v < pvy.num_hypotheses; ++v) {
            json row = json::array();
            for (int y = 0; y < pvy.num_observations; ++y)
                row.push_back(pvy(v, y));
            rows.push_back(std::move(row));
        }
        out["pvy"] = std::move(rows);
        return out;
    }
    FiniteMeasure pv = marginals(pvy).prior;
    out["prior"] = pv.weights;
    json rows = json::array();
    for (int v = 0; v < pvy.num_hypotheses; ++v) {
        json row = json::array();
        for (int y = 0; y < pvy.num_observations; ++y)
            row.push_back(pv[v] > 0.0 ? pvy(v, y) / pv[v] : 0.0);
        rows.push_back(std::move(row));
    }
    out["likelihood"] = std::move(rows);
    return out;
}

json measure_to_json(const FiniteMeasure& m) {
    json out;
    out["weights"] = m.weights;
    out["normalized"] = m.normalized;
    return out;
}

} // namespace mht
