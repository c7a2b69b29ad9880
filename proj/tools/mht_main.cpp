// mht: finite-alphabet hypothesis-testing toolkit CLI.
//
// Subcommands:
//   example-sweep  gamma sweep of the built-in ternary demo as CSV
//   bsc-sweep      best-code / metaconverse / relaxation sweep for a BSC
//   solve          JSON instance -> JSON report with bounds and checks
//   lossy          lossy JSON instance -> JSON report
//   selfcheck      randomized identity harness
//
// Exit codes: 0 ok, 1 validation error, 2 guard exceeded, 3 internal
// assertion failure.

#include "mht/channel_coding.hpp"
#include "mht/converse_bounds.hpp"
#include "mht/example_instances.hpp"
#include "mht/json_io.hpp"
#include "mht/lossy_coding.hpp"
#include "mht/mary_testing.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mht;

struct internal_check_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
    if (!ok)
        throw internal_check_error("internal check failed: " + what);
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------- example-sweep

std::string run_example_sweep(int grid) {
    JointDistribution pvy = ternary_example();
    MapSolution sol = map_solve(pvy);
    FiniteMeasure py = marginals(pvy).observation;

    RatioProfile star = joint_ratio_profile(pvy, sol.qy_star);
    RatioProfile marg = joint_ratio_profile(pvy, py);

    // display grid on [0, 1] refined with every exact jump point
    std::vector<double> gammas;
    for (int i = 0; i <= grid; ++i)
        gammas.push_back(static_cast<double>(i) / grid);
    for (const RatioProfile* prof : {&star, &marg})
        for (const RatioGroup& g : prof->groups())
            if (g.ratio >= 0.0 && g.ratio <= 1.0)
                gammas.push_back(g.ratio);
    std::sort(gammas.begin(), gammas.end());
    gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());

    std::ostringstream csv;
    csv << "# ternary demo: exact minimum error 0.6; spectrum form with the "
           "optimal output measure peaks there at gamma 0.4\n"
        << "# verdu-han and poor-verdu with Q_Y = P_Y peak at 0.574 "
           "(27/47); the chen-alajaji bound reaches 0.579 at theta = 25 "
           "(literature value, not computed here)\n"
        << "gamma,exact,spectrum_qstar,verdu_han_py,poor_verdu_py,tight_pv\n";

    double best_star = 0.0, best_star_gamma = 0.0, best_vh = 0.0;
    for (double g : gammas) {
        double tail_star = star.p_at_or_below(g);
        double tail_py = marg.p_at_or_below(g);
        double spectrum_star = tail_star - g;
        double vh_py = tail_py - g;
        double pv_py = (1.0 - g) * tail_py;
        double tight_pv = (1.0 - g) * tail_star;
        if (spectrum_star > best_star) {
            best_star = spectrum_star;
            best_star_gamma = g;
        }
        best_vh = std::max(best_vh, vh_py);
        for (double column : {spectrum_star, vh_py, pv_py, tight_pv})
            check(column <= sol.error + 1e-9,
                  "sweep column exceeds the exact error");
        csv << num(g) << ',' << num(sol.error) << ',' << num(spectrum_star)
            << ',' << num(vh_py) << ',' << num(pv_py) << ',' << num(tight_pv)
            << '\n';
    }
    check(std::abs(best_star - 0.6) <= 1e-9, "spectrum peak is not 0.6");
    check(std::abs(best_star_gamma - 0.4) <= 1e-9,
          "spectrum peak is not at gamma 0.4");
    check(std::abs(best_vh - 27.0 / 47.0) <= 1e-9,
          "verdu-han peak is not 27/47");
    return csv.str();
}

// ------------------------------------------------------------------- bsc-sweep

std::string run_bsc_sweep(int n_max, double delta, int m, int workers) {
    std::ostringstream csv;
    csv << "# BSC(delta=" << num(delta) << "), M=" << m
        << ": exhaustive best code, metaconverse at the optimal output "
           "measure (equal by construction), and the codebook-free "
           "relaxation at uniform input/output\n"
        << "n,best_code_error,metaconverse_qstar,codebook_free\n";

    int n_min = 1;
    while ((1 << n_min) < m)
        ++n_min;

    std::ostringstream codes;
    for (int n = n_min; n <= n_max; ++n) {
        DMC w = bsc(n, delta);
        CodeSearchOptions opts;
        opts.workers = workers;
        CodeSearchResult r = best_code_search(w, n, m, opts);
        JointDistribution joint = code_to_joint(w, r.code);
        MapSolution sol = map_solve(joint);
        double meta = metaconverse(w, r.code, sol.qy_star);
        double relaxed =
            codebook_free_bound(w, m, FiniteMeasure::uniform(w.input_size),
                                FiniteMeasure::uniform(w.output_size));
        check(std::abs(meta - r.error) <= 1e-9,
              "metaconverse is not tight for the best code");
        check(relaxed <= r.error + 1e-9,
              "codebook-free bound exceeds the best-code error");
        csv << n << ',' << num(r.error) << ',' << num(meta) << ','
            << num(relaxed) << '\n';

        codes << "# best code n=" << n << ':';
        for (int c : r.code.codewords)
            codes << ' ' << codeword_bits(c, n);
        codes << '\n';
    }
    csv << codes.str();
    return csv.str();
}

// ----------------------------------------------------------------------- solve

nlohmann::json sweep_json(const GammaSweep& sweep) {
    return {{"best_gamma", sweep.best_gamma},
            {"best_value", sweep.best_value}};
}

std::string run_solve(const std::string& instance_path,
                      const std::string& qy_choice,
                      const std::string& qy_file) {
    JointInstance inst = load_joint_instance(instance_path);
    const JointDistribution& pvy = inst.pvy;
    MapSolution sol = map_solve(pvy);
    Marginals marg = marginals(pvy);

    nlohmann::json report;
    report["instance"] = inst.raw;
    report["exact"] = sol.error;

    nlohmann::json map_block;
    map_block["error"] = sol.error;
    map_block["mu"] = sol.mu;
    map_block["qy_star"] = sol.qy_star.weights;
    map_block["tie_sets"] = sol.tie_sets;
    report["map"] = std::move(map_block);

    // exact characterizations at qy_star
    NPSolution np = alpha_beta(
        pvy.flatten(),
        product(FiniteMeasure::uniform(pvy.num_hypotheses), sol.qy_star)
            .flatten(),
        1.0 / pvy.num_hypotheses);
    report["np"] = {{"gamma", np.gamma},
                    {"p", np.p},
                    {"alpha", np.alpha},
                    {"beta", np.beta}};
    SpectrumValue spec_star = spectrum_supremum(pvy, sol.qy_star);
    report["spectrum_qstar"] = {{"value", spec_star.value},
                                {"gamma", spec_star.gamma}};

    // auxiliary output measure for the classical bounds
    FiniteMeasure qy = sol.qy_star;
    if (qy_choice == "py")
        qy = marg.observation;
    else if (qy_choice == "file")
        qy = load_measure(qy_file);
    else if (qy_choice != "pstar")
        throw std::invalid_argument("unknown --qy choice " + qy_choice);
    report["qy"] = {{"choice", qy_choice}, {"weights", qy.weights}};
    report["alpha_qy"] = metaconverse_alpha(pvy, qy);
    SpectrumValue spec_qy = spectrum_supremum(pvy, qy);
    report["spectrum_qy"] = {{"value", spec_qy.value},
                             {"gamma", spec_qy.gamma}};

    bool positive_prior = true;
    for (std::size_t v = 0; v < marg.prior.size(); ++v)
        positive_prior = positive_prior && marg.prior[v] > 0.0;

    nlohmann::json bounds;
    GammaSweep vh = verdu_han(pvy, qy);
    bounds["verdu_han"] = sweep_json(vh);
    auto pv_bound = poor_verdu(pvy, qy, vh.best_gamma);
    bounds["poor_verdu"] = {{"gamma", vh.best_gamma},
                            {"value", pv_bound.value},
                            {"condition_ok", pv_bound.condition_ok}};
    bounds["tight_poor_verdu"] = sweep_json(tight_poor_verdu(pvy));
    if (positive_prior) {
        bounds["wolfowitz"] = sweep_json(wolfowitz(pvy, qy));
        BankOfTests bank = bank_of_tests(pvy, qy);
        bounds["bank_of_tests"] = {{"value", bank.value},
                                   {"budgets", bank.budgets}};
    } else {
        bounds["wolfowitz"] = nullptr;
        bounds["bank_of_tests"] = nullptr;
    }
    bounds["counting_measure"] = counting_measure_error(pvy);
    report["bounds"] = std::move(bounds);

    nlohmann::json checks;
    const double tol = 1e-9;
    checks["alpha_qstar_equals_exact"] =
        std::abs(metaconverse_alpha(pvy, sol.qy_star) - sol.error) <= tol;
    checks["np_alpha_equals_exact"] = std::abs(np.alpha - sol.error) <= tol;
    checks["spectrum_qstar_equals_exact"] =
        std::abs(spec_star.value - sol.error) <= tol;
    checks["tight_poor_verdu_equals_exact"] =
        std::abs(report["bounds"]["tight_poor_verdu"]["best_value"]
                     .get<double>() -
                 sol.error) <= tol;
    checks["counting_measure_equals_exact"] =
        std::abs(counting_measure_error(pvy) - sol.error) <= tol;
    checks["qy_bounds_below_exact"] =
        report["alpha_qy"].get<double>() <= sol.error + tol &&
        spec_qy.value <= sol.error + tol &&
        vh.best_value <= sol.error + tol;
    if (positive_prior) {
        BankOfTests bank_star = bank_of_tests(pvy, sol.qy_star);
        checks["bank_qstar_equals_exact"] =
            std::abs(bank_star.value - sol.error) <= tol;
    }

    if (inst.metric) {
        RandomizedKernel dec = max_metric_decoder(*inst.metric);
        auto [qvy, mu_prime] = max_metric_auxiliary(pvy, *inst.metric);
        auto [alpha, eps1] = decoder_alpha_bound(pvy, qvy, dec);
        SpectrumValue dec_spec = decoder_spectrum_bound(pvy, qvy, dec);
        double dec_err = decoder_error(pvy, dec);
        report["decoder_metric"] = {
            {"decoder_error", dec_err},
            {"eps1", eps1},
            {"alpha_bound", alpha},
            {"mu_prime", mu_prime},
            {"spectrum", {{"value", dec_spec.value}, {"gamma", dec_spec.gamma}}},
        };
        checks["metric_alpha_equals_decoder_error"] =
            std::abs(alpha - dec_err) <= tol;
        checks["metric_spectrum_equals_decoder_error"] =
            std::abs(dec_spec.value - dec_err) <= tol;
    }
    report["checks"] = checks;

    for (const auto& [name, ok] : checks.items())
        check(ok.get<bool>(), name);

    return report.dump(2) + "\n";
}

// ----------------------------------------------------------------------- lossy

std::string run_lossy(const std::string& instance_path) {
    LossyInstance inst = load_lossy_instance(instance_path);

    double excess = excess_distortion(inst.pv, inst.spec, inst.code);
    double test_form =
        excess_distortion_test_form(inst.pv, inst.spec, inst.code);
    double budget = lsc_test_budget(inst.qv, inst.spec, inst.code);
    double kostina =
        kostina_relaxation(inst.pv, inst.spec, inst.num_codewords, inst.qv);

    const double tol = 1e-9;
    nlohmann::json report;
    report["instance"] = inst.raw;
    report["excess_distortion"] = excess;
    report["test_form"] = test_form;
    report["lsc_budget"] = budget;
    report["kostina"] = {{"M", inst.num_codewords}, {"value", kostina}};
    report["flags"] = {
        {"test_form_equal", std::abs(test_form - excess) <= tol},
        {"kostina_le_excess", kostina <= excess + tol},
        {"kostina_equal", std::abs(kostina - excess) <= tol},
    };

    check(report["flags"]["test_form_equal"].get<bool>(),
          "test form does not match the excess distortion");
    check(report["flags"]["kostina_le_excess"].get<bool>(),
          "relaxation exceeds the excess distortion");
    return report.dump(2) + "\n";
}

// ------------------------------------------------------------------- selfcheck

std::string run_selfcheck(std::uint64_t seed, int trials) {
    std::mt19937_64 gen(seed);
    auto uniform = [&] {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    };
    auto uniform_int = [&](int lo, int hi) {
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(
                                                 hi - lo + 1));
    };

    for (int t = 0; t < trials; ++t) {
        int m = uniform_int(1, 5), ny = uniform_int(1, 6);
        std::vector<double> mass(static_cast<std::size_t>(m) * ny);
        double sum = 0.0;
        for (double& x : mass)
            sum += x = -std::log1p(-uniform());
        for (double& x : mass)
            x /= sum;
        JointDistribution pvy(m, ny, std::move(mass), true);
        MapSolution sol = map_solve(pvy);

        check(std::abs(metaconverse_alpha(pvy, sol.qy_star) - sol.error) <=
                  1e-9,
              "binary-test form tightness");
        check(std::abs(spectrum_supremum(pvy, sol.qy_star).value -
                       sol.error) <= 1e-9,
              "spectrum form tightness");
        check(std::abs(tight_poor_verdu(pvy).best_value - sol.error) <= 1e-9,
              "tight poor-verdu");
        check(std::abs(counting_measure_error(pvy) - sol.error) <= 1e-9,
              "counting-measure form");
        check(verdu_han(pvy).best_value <= sol.error + 1e-9, "verdu-han");
        BankOfTests bank = bank_of_tests(pvy, sol.qy_star);
        check(std::abs(bank.value - sol.error) <= 1e-9, "bank of tests");
    }
    std::ostringstream out;
    out << "selfcheck: " << trials << " random instances, all identities hold"
        << " (seed " << seed << ")\n";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-alphabet hypothesis-testing bounds toolkit"};
    app.require_subcommand(1);

    std::string output;
    int grid = 200;
    auto* example = app.add_subcommand(
        "example-sweep", "gamma sweep of the built-in ternary demo (CSV)");
    example->add_option("-o,--output", output, "output path (default stdout)");
    example->add_option("--gamma-grid", grid,
                        "display densification; optima always come from the "
                        "exact jump points")
        ->check(CLI::PositiveNumber);

    int n_max = 6, messages = 4, workers = 1;
    double delta = 0.1;
    auto* bsc_cmd = app.add_subcommand(
        "bsc-sweep",
        "best code vs metaconverse vs codebook-free bound for a BSC (CSV)");
    bsc_cmd->add_option("-o,--output", output, "output path (default stdout)");
    bsc_cmd->add_option("--n-max", n_max, "largest blocklength");
    bsc_cmd->add_option("--delta", delta, "crossover probability");
    bsc_cmd->add_option("-M,--messages", messages, "number of messages");
    bsc_cmd->add_option("--workers", workers, "search worker threads");

    std::string instance_path, qy_choice = "pstar", qy_file;
    auto* solve_cmd =
        app.add_subcommand("solve", "JSON instance -> JSON report");
    solve_cmd->add_option("instance", instance_path, "instance JSON file")
        ->required();
    solve_cmd->add_option("-o,--output", output, "output path (default stdout)");
    solve_cmd
        ->add_option("--qy", qy_choice,
                     "auxiliary output measure: pstar, py, or file")
        ->check(CLI::IsMember({"pstar", "py", "file"}));
    solve_cmd->add_option("--qy-file", qy_file,
                          "measure JSON when --qy file is used");

    auto* lossy_cmd =
        app.add_subcommand("lossy", "lossy JSON instance -> JSON report");
    lossy_cmd->add_option("instance", instance_path, "instance JSON file")
        ->required();
    lossy_cmd->add_option("-o,--output", output, "output path (default stdout)");

    std::uint64_t seed = 1;
    int trials = 200;
    auto* selfcheck_cmd = app.add_subcommand(
        "selfcheck", "randomized tightness-identity harness");
    selfcheck_cmd->add_option("--seed", seed, "RNG seed");
    selfcheck_cmd->add_option("--trials", trials, "number of instances");

    try {
        app.parse(argc, argv);
        if (example->parsed())
            write_text(output, run_example_sweep(grid));
        else if (bsc_cmd->parsed())
            write_text(output, run_bsc_sweep(n_max, delta, messages, workers));
        else if (solve_cmd->parsed())
            write_text(output, run_solve(instance_path, qy_choice, qy_file));
        else if (lossy_cmd->parsed())
            write_text(output, run_lossy(instance_path));
        else if (selfcheck_cmd->parsed())
            write_text(output, run_selfcheck(seed, trials));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const internal_check_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
