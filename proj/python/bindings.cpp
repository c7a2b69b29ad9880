#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mht/channel_coding.hpp"
#include "mht/converse_bounds.hpp"
#include "mht/example_instances.hpp"
#include "mht/lossy_coding.hpp"
#include "mht/mary_testing.hpp"
#include "mht/measures.hpp"

namespace py = pybind11;
using namespace mht;

namespace {

JointDistribution joint_from_rows(const std::vector<std::vector<double>>& rows,
                                  bool normalized) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("joint needs a nonempty matrix");
    const int m = static_cast<int>(rows.size());
    const int ny = static_cast<int>(rows.front().size());
    std::vector<double> mass;
    mass.reserve(static_cast<std::size_t>(m) * ny);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != ny)
            throw std::invalid_argument("joint rows have unequal lengths");
        mass.insert(mass.end(), row.begin(), row.end());
    }
    JointDistribution j(m, ny, std::move(mass), normalized);
    require_valid(j, "joint");
    return j;
}

std::vector<std::vector<double>> rows_of(const JointDistribution& j) {
    std::vector<std::vector<double>> rows(
        static_cast<std::size_t>(j.num_hypotheses));
    for (int v = 0; v < j.num_hypotheses; ++v) {
        rows[v].resize(static_cast<std::size_t>(j.num_observations));
        for (int y = 0; y < j.num_observations; ++y)
            rows[v][y] = j(v, y);
    }
    return rows;
}

std::vector<std::vector<double>> rows_of(const RandomizedKernel& k) {
    std::vector<std::vector<double>> rows(
        static_cast<std::size_t>(k.num_inputs));
    for (int i = 0; i < k.num_inputs; ++i) {
        rows[i].resize(static_cast<std::size_t>(k.num_outputs));
        for (int o = 0; o < k.num_outputs; ++o)
            rows[i][o] = k(i, o);
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_mht, m) {
    m.doc() = "exact minimum-error characterizations and converse bounds for "
              "finite-alphabet Bayesian M-ary hypothesis testing";

    py::register_exception<guard_error>(m, "GuardError", PyExc_RuntimeError);

    py::class_<FiniteMeasure>(m, "FiniteMeasure")
        .def(py::init([](std::vector<double> w, bool normalized) {
                 FiniteMeasure fm(std::move(w), normalized);
                 require_valid(fm, "measure");
                 return fm;
             }),
             py::arg("weights"), py::arg("normalized") = true)
        .def_readonly("weights", &FiniteMeasure::weights)
        .def_readonly("normalized", &FiniteMeasure::normalized)
        .def("total_mass", &FiniteMeasure::total_mass)
        .def_static("uniform", &FiniteMeasure::uniform)
        .def_static("counting", &FiniteMeasure::counting)
        .def("__len__", &FiniteMeasure::size)
        .def("__getitem__",
             [](const FiniteMeasure& fm, std::size_t i) {
                 if (i >= fm.size())
                     throw py::index_error();
                 return fm[i];
             });

    py::class_<JointDistribution>(m, "JointDistribution")
        .def(py::init(&joint_from_rows), py::arg("rows"),
             py::arg("normalized") = true)
        .def_property_readonly("num_hypotheses",
                               [](const JointDistribution& j) {
                                   return j.num_hypotheses;
                               })
        .def_property_readonly("num_observations",
                               [](const JointDistribution& j) {
                                   return j.num_observations;
                               })
        .def_property_readonly(
            "rows", [](const JointDistribution& j) { return rows_of(j); })
        .def("__call__", [](const JointDistribution& j, int v, int y) {
            if (v < 0 || v >= j.num_hypotheses || y < 0 ||
                y >= j.num_observations)
                throw py::index_error();
            return j(v, y);
        });

    py::class_<RandomizedKernel>(m, "RandomizedKernel")
        .def(py::init([](const std::vector<std::vector<double>>& rows) {
                 if (rows.empty() || rows.front().empty())
                     throw std::invalid_argument("kernel needs rows");
                 const int in = static_cast<int>(rows.size());
                 const int out = static_cast<int>(rows.front().size());
                 std::vector<double> flat;
                 for (const auto& r : rows) {
                     if (static_cast<int>(r.size()) != out)
                         throw std::invalid_argument(
                             "kernel rows have unequal lengths");
                     flat.insert(flat.end(), r.begin(), r.end());
                 }
                 RandomizedKernel k(in, out, std::move(flat));
                 require_valid(k, "kernel");
                 return k;
             }),
             py::arg("rows"))
        .def_property_readonly(
            "rows", [](const RandomizedKernel& k) { return rows_of(k); });

    py::class_<MetricMatrix>(m, "MetricMatrix")
        .def(py::init([](const std::vector<std::vector<double>>& rows) {
                 if (rows.empty() || rows.front().empty())
                     throw std::invalid_argument("metric needs rows");
                 MetricMatrix q;
                 q.num_hypotheses = static_cast<int>(rows.size());
                 q.num_observations = static_cast<int>(rows.front().size());
                 for (const auto& r : rows) {
                     if (static_cast<int>(r.size()) != q.num_observations)
                         throw std::invalid_argument(
                             "metric rows have unequal lengths");
                     q.values.insert(q.values.end(), r.begin(), r.end());
                 }
                 return q;
             }),
             py::arg("rows"));

    py::class_<NPSolution>(m, "NPSolution")
        .def_readonly("gamma", &NPSolution::gamma)
        .def_readonly("p", &NPSolution::p)
        .def_readonly("alpha", &NPSolution::alpha)
        .def_readonly("beta", &NPSolution::beta)
        .def_readonly("acceptance", &NPSolution::acceptance);

    py::class_<MapSolution>(m, "MapSolution")
        .def_readonly("error", &MapSolution::error)
        .def_readonly("mu", &MapSolution::mu)
        .def_readonly("qy_star", &MapSolution::qy_star)
        .def_readonly("decoder", &MapSolution::decoder)
        .def_readonly("tie_sets", &MapSolution::tie_sets);

    py::class_<SpectrumValue>(m, "SpectrumValue")
        .def_readonly("value", &SpectrumValue::value)
        .def_readonly("gamma", &SpectrumValue::gamma);

    py::class_<GammaSweep>(m, "GammaSweep")
        .def_readonly("gammas", &GammaSweep::gammas)
        .def_readonly("values", &GammaSweep::values)
        .def_readonly("best_gamma", &GammaSweep::best_gamma)
        .def_readonly("best_value", &GammaSweep::best_value);

    py::class_<ConditionedBound>(m, "ConditionedBound")
        .def_readonly("value", &ConditionedBound::value)
        .def_readonly("condition_ok", &ConditionedBound::condition_ok);

    py::class_<BankOfTests>(m, "BankOfTests")
        .def_readonly("value", &BankOfTests::value)
        .def_readonly("budgets", &BankOfTests::budgets);

    py::class_<Marginals>(m, "Marginals")
        .def_readonly("prior", &Marginals::prior)
        .def_readonly("observation", &Marginals::observation);

    // measures
    m.def("marginals", &marginals, py::arg("pvy"));
    m.def("product", &product, py::arg("qv"), py::arg("qy"));

    // binary testing
    m.def("type0_error", &type0_error, py::arg("p"), py::arg("acceptance"));
    m.def("type1_error", &type1_error, py::arg("q"), py::arg("acceptance"));
    m.def("bayes_binary_error", &bayes_binary_error, py::arg("p"),
          py::arg("q"), py::arg("prior0"));
    m.def("alpha_beta", &alpha_beta, py::arg("p"), py::arg("q"),
          py::arg("beta"));
    m.def("relaxation_bound", &relaxation_bound, py::arg("p"), py::arg("q"),
          py::arg("beta"), py::arg("gamma_prime"));
    m.def("poor_verdu_lemma_bound", &poor_verdu_lemma_bound, py::arg("p"),
          py::arg("q"), py::arg("beta"), py::arg("gamma_prime"));

    // M-ary testing
    m.def("map_solve", &map_solve, py::arg("pvy"));
    m.def("decoder_error", &decoder_error, py::arg("pvy"), py::arg("decoder"));
    m.def("metaconverse_alpha", &metaconverse_alpha, py::arg("pvy"),
          py::arg("qy"));
    m.def("spectrum_supremum", &spectrum_supremum, py::arg("pvy"),
          py::arg("qy"));
    m.def("decoder_type1", &decoder_type1, py::arg("qvy"), py::arg("decoder"));
    m.def(
        "decoder_alpha_bound",
        [](const JointDistribution& pvy, const JointDistribution& qvy,
           const RandomizedKernel& dec) {
            auto [alpha, eps1] = decoder_alpha_bound(pvy, qvy, dec);
            return py::make_tuple(alpha, eps1);
        },
        py::arg("pvy"), py::arg("qvy"), py::arg("decoder"));
    m.def("decoder_spectrum_bound", &decoder_spectrum_bound, py::arg("pvy"),
          py::arg("qvy"), py::arg("decoder"));
    m.def("max_metric_decoder", &max_metric_decoder, py::arg("metric"));
    m.def(
        "max_metric_auxiliary",
        [](const JointDistribution& pvy, const MetricMatrix& q) {
            auto [qvy, mu_prime] = max_metric_auxiliary(pvy, q);
            return py::make_tuple(qvy, mu_prime);
        },
        py::arg("pvy"), py::arg("metric"));
    m.def("counting_measure_error", &counting_measure_error, py::arg("pvy"));

    // classical bounds
    m.def(
        "verdu_han",
        [](const JointDistribution& pvy,
           const std::optional<FiniteMeasure>& qy) {
            return verdu_han(pvy, qy);
        },
        py::arg("pvy"), py::arg("qy") = py::none());
    m.def("wolfowitz", &wolfowitz, py::arg("pvy"), py::arg("qy"));
    m.def("poor_verdu", &poor_verdu, py::arg("pvy"), py::arg("qy"),
          py::arg("gamma"));
    m.def("tight_poor_verdu", &tight_poor_verdu, py::arg("pvy"));
    m.def("bank_of_tests", &bank_of_tests, py::arg("pvy"), py::arg("qy"));

    // channel coding
    py::class_<DMC>(m, "DMC")
        .def_property_readonly("input_size",
                               [](const DMC& w) { return w.input_size; })
        .def_property_readonly("output_size",
                               [](const DMC& w) { return w.output_size; })
        .def("__call__", [](const DMC& w, int x, int y) {
            if (x < 0 || x >= w.input_size || y < 0 || y >= w.output_size)
                throw py::index_error();
            return w(x, y);
        });
    py::class_<ChannelCode>(m, "ChannelCode")
        .def(py::init([](int blocklength, std::vector<int> codewords) {
                 return ChannelCode{blocklength, std::move(codewords)};
             }),
             py::arg("blocklength"), py::arg("codewords"))
        .def_readonly("blocklength", &ChannelCode::blocklength)
        .def_readonly("codewords", &ChannelCode::codewords);
    py::class_<CodeSearchResult>(m, "CodeSearchResult")
        .def_readonly("code", &CodeSearchResult::code)
        .def_readonly("error", &CodeSearchResult::error);

    m.def("bsc", &bsc, py::arg("n"), py::arg("delta"));
    m.def("code_to_joint", &code_to_joint, py::arg("w"), py::arg("code"));
    m.def("metaconverse", &metaconverse, py::arg("w"), py::arg("code"),
          py::arg("qy"));
    m.def("codebook_free_bound", &codebook_free_bound, py::arg("w"),
          py::arg("num_messages"), py::arg("px"), py::arg("qy"));
    m.def(
        "best_code_search",
        [](const DMC& w, int n, int num_messages, bool fix_first_zero,
           int workers) {
            CodeSearchOptions opts;
            opts.fix_first_zero = fix_first_zero;
            opts.workers = workers;
            return best_code_search(w, n, num_messages, opts);
        },
        py::arg("w"), py::arg("n"), py::arg("num_messages"),
        py::arg("fix_first_zero") = true, py::arg("workers") = 1);

    // lossy compression
    py::class_<DistortionSpec>(m, "DistortionSpec")
        .def(py::init([](const std::vector<std::vector<double>>& rows,
                         double threshold) {
                 if (rows.empty() || rows.front().empty())
                     throw std::invalid_argument("distortion needs a matrix");
                 DistortionSpec s;
                 s.source_size = static_cast<int>(rows.size());
                 s.reconstruction_size =
                     static_cast<int>(rows.front().size());
                 for (const auto& r : rows) {
                     if (static_cast<int>(r.size()) != s.reconstruction_size)
                         throw std::invalid_argument(
                             "distortion rows have unequal lengths");
                     s.d.insert(s.d.end(), r.begin(), r.end());
                 }
                 s.threshold = threshold;
                 return s;
             }),
             py::arg("d"), py::arg("threshold"))
        .def_readonly("threshold", &DistortionSpec::threshold);
    py::class_<LossyCode>(m, "LossyCode")
        .def(py::init([](std::vector<int> codewords) {
                 return LossyCode{std::move(codewords)};
             }),
             py::arg("codewords"))
        .def_readonly("codewords", &LossyCode::codewords);

    m.def("excess_distortion", &excess_distortion, py::arg("pv"),
          py::arg("spec"), py::arg("code"));
    m.def("lsc_test_budget", &lsc_test_budget, py::arg("qv"), py::arg("spec"),
          py::arg("code"));
    m.def("excess_distortion_test_form", &excess_distortion_test_form,
          py::arg("pv"), py::arg("spec"), py::arg("code"));
    m.def("kostina_relaxation", &kostina_relaxation, py::arg("pv"),
          py::arg("spec"), py::arg("num_codewords"), py::arg("qv"));

    // built-in demo instances
    m.def("ternary_example", &ternary_example);
    m.def("ternary_two_observation", &ternary_two_observation);
    m.def("first_observation_metric", &first_observation_metric);
}
