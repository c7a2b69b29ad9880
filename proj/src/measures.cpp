#include "mht/measures.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mht {

double FiniteMeasure::total_mass() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

FiniteMeasure FiniteMeasure::uniform(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("uniform: empty alphabet");
    return FiniteMeasure(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

FiniteMeasure FiniteMeasure::counting(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("counting: empty alphabet");
    return FiniteMeasure(std::vector<double>(n, 1.0), /*norm=*/false);
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

ValidationReport check_weights(const std::vector<double>& w, bool normalized,
                               const char* kind) {
    if (w.empty())
        return {false, std::string(kind) + " has empty alphabet"};
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (std::isnan(w[i]) || std::isinf(w[i]))
            return {false, std::string("non-finite weight at index ") +
                               std::to_string(i)};
        if (w[i] < 0.0)
            return {false, std::string("negative weight at index ") +
                               std::to_string(i) + ": " + fmt(w[i])};
    }
    if (normalized) {
        double s = std::accumulate(w.begin(), w.end(), 0.0);
        if (std::abs(s - 1.0) > kSumTol)
            return {false, "sum=" + fmt(s) + ", expected 1 within 1e-9"};
    }
    return {};
}

} // namespace

ValidationReport validate(const FiniteMeasure& m) {
    return check_weights(m.weights, m.normalized, "measure");
}

ValidationReport validate(const JointDistribution& j) {
    if (j.num_hypotheses < 1 || j.num_observations < 1)
        return {false, "alphabet sizes must be positive"};
    if (j.mass.size() != static_cast<std::size_t>(j.num_hypotheses) *
                             static_cast<std::size_t>(j.num_observations))
        return {false, "mass has " + std::to_string(j.mass.size()) +
                           " entries, expected " +
                           std::to_string(j.num_hypotheses) + "x" +
                           std::to_string(j.num_observations)};
    return check_weights(j.mass, j.normalized, "joint");
}

ValidationReport validate(const RandomizedKernel& k) {
    if (k.num_inputs < 1 || k.num_outputs < 1)
        return {false, "kernel sizes must be positive"};
    if (k.rows.size() != static_cast<std::size_t>(k.num_inputs) *
                             static_cast<std::size_t>(k.num_outputs))
        return {false, "kernel has wrong number of entries"};
    for (int i = 0; i < k.num_inputs; ++i) {
        double s = 0.0;
        for (int o = 0; o < k.num_outputs; ++o) {
            double p = k(i, o);
            if (!(p >= 0.0 && p <= 1.0 + kSumTol))
                return {false, "entry (" + std::to_string(i) + "," +
                                   std::to_string(o) + ") outside [0,1]: " +
                                   fmt(p)};
            s += p;
        }
        if (std::abs(s - 1.0) > kSumTol)
            return {false, "row " + std::to_string(i) + " sums to " + fmt(s)};
    }
    return {};
}

void require_valid(const FiniteMeasure& m, const char* what) {
    if (auto r = validate(m); !r)
        throw std::invalid_argument(std::string(what) + ": " + r.message);
}

void require_valid(const JointDistribution& j, const char* what) {
    if (auto r = validate(j); !r)
        throw std::invalid_argument(std::string(what) + ": " + r.message);
}

void require_valid(const RandomizedKernel& k, const char* what) {
    if (auto r = validate(k); !r)
        throw std::invalid_argument(std::string(what) + ": " + r.message);
}

Marginals marginals(const JointDistribution& pvy) {
    require_valid(pvy, "marginals");
    const int m = pvy.num_hypotheses;
    const int ny = pvy.num_observations;
    FiniteMeasure pv(std::vector<double>(m, 0.0));
    FiniteMeasure py(std::vector<double>(ny, 0.0));
    for (int v = 0; v < m; ++v)
        for (int y = 0; y < ny; ++y) {
            pv.weights[v] += pvy(v, y);
            py.weights[y] += pvy(v, y);
        }
    pv.normalized = py.normalized = pvy.normalized;
    return {std::move(pv), std::move(py)};
}

JointDistribution product(const FiniteMeasure& qv, const FiniteMeasure& qy) {
    if (qv.size() == 0 || qy.size() == 0)
        throw std::invalid_argument("product: empty factor");
    const int m = static_cast<int>(qv.size());
    const int ny = static_cast<int>(qy.size());
    std::vector<double> mass(static_cast<std::size_t>(m) * ny);
    for (int v = 0; v < m; ++v)
        for (int y = 0; y < ny; ++y)
            mass[static_cast<std::size_t>(v) * ny + y] = qv[v] * qy[y];
    return JointDistribution(m, ny, std::move(mass),
                             qv.normalized && qy.normalized);
}

} // namespace mht
