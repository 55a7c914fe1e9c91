// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion carries its own tolerance; nothing here is
// tunable from outside.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "plmodel/dataset_io.hpp"
#include "plmodel/metrics.hpp"
#include "plmodel/pathloss.hpp"
#include "plmodel/regression.hpp"
#include "plmodel/report.hpp"
#include "plmodel/rng.hpp"
#include "plmodel/simulator.hpp"
#include "plmodel/transfer.hpp"

using namespace plmodel;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " ("
              << secs << " s)";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

double sse_of(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const Eigen::VectorXd& beta) {
    return (y - X * beta).squaredNorm();
}

// Exhaustive SSE minimum on a grid centered at `center`, via the quadratic
// form SSE = y'y - 2 b'X'y + b'Gb. Independent of the solver.
double grid_min_sse(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                    const Eigen::VectorXd& center, double half_width, double step) {
    const Eigen::Index k = X.cols();
    const Eigen::MatrixXd gram = X.transpose() * X;
    const Eigen::VectorXd xty = X.transpose() * y;
    const double yty = y.squaredNorm();
    const auto steps = static_cast<long>(std::llround(2.0 * half_width / step));

    double best = 1e300;
    Eigen::VectorXd b(k);
    std::vector<long> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        for (Eigen::Index j = 0; j < k; ++j)
            b(j) = center(j) - half_width + step * static_cast<double>(idx[static_cast<std::size_t>(j)]);
        const double sse = yty - 2.0 * b.dot(xty) + b.dot(gram * b);
        if (sse < best) best = sse;
        Eigen::Index carry = 0;
        while (carry < k) {
            if (++idx[static_cast<std::size_t>(carry)] <= steps) break;
            idx[static_cast<std::size_t>(carry)] = 0;
            ++carry;
        }
        if (carry == k) break;
    }
    return best;
}

Dataset simulated(SimConfig cfg, std::size_t n, std::uint64_t seed) {
    cfg.n_samples = n;
    cfg.seed = seed;
    return generate_dataset(cfg);
}

std::vector<double> observed(const Dataset& ds) {
    std::vector<double> y;
    for (const auto& s : ds.samples) y.push_back(s.path_loss_db);
    return y;
}

std::string tmp_path(const std::string& name) {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("plm-acceptance-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return (dir / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion_ols_oracle(std::string& detail) {
    rng::Stream stream(1001);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<Eigen::Index>(stream.uniform_int(4, 12));
        const auto k = static_cast<Eigen::Index>(stream.uniform_int(1, 3));
        Eigen::MatrixXd X(n, k);
        Eigen::VectorXd y(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < k; ++j)
                X(i, j) = j == 0 ? 1.0 : stream.uniform(-3.0, 3.0);
            y(i) = stream.uniform(-2.0, 2.0);
        }
        const OlsCore core = ols_fit(X, y);
        if (static_cast<Eigen::Index>(core.retained_columns.size()) != k) continue;

        const double fit_sse = sse_of(X, y, core.beta);
        const double step = k == 3 ? 2e-2 : 1e-2;
        const double oracle_sse = grid_min_sse(X, y, core.beta, 1.0, step);
        if (fit_sse > oracle_sse + 1e-9) {
            detail = "trial " + std::to_string(trial) + ": solver SSE exceeds grid minimum";
            return false;
        }
        const double grad = (X.transpose() * (y - X * core.beta)).lpNorm<Eigen::Infinity>();
        const double scale = (X.transpose() * y).lpNorm<Eigen::Infinity>();
        if (grad > 1e-7 * scale) {
            detail = "trial " + std::to_string(trial) + ": normal-equation residual too large";
            return false;
        }
    }
    return true;
}

bool criterion_exact_recovery(std::string& detail) {
    rng::Stream stream(1002);

    // CI, n = 2.7
    {
        CiModel truth;
        truth.ple = 2.7;
        truth.carrier_frequency_ghz = 28.0;
        Dataset ds;
        for (int i = 0; i < 60; ++i) {
            ChannelSample s;
            s.distance_m = stream.uniform(1.0, 40.0);
            s.frequency_ghz = 28.0;
            s.time_delay_ns = s.distance_m / 0.299792458;
            s.path_loss_db = eval_ci(truth, s.distance_m);
            s.received_power_dbm = 30.0 - s.path_loss_db;
            ds.samples.push_back(s);
        }
        const CiModel fit = fit_ci(ds);
        if (std::abs(fit.ple - 2.7) > 1e-8 * 2.7) {
            detail = "CI PLE not recovered";
            return false;
        }
    }
    // FI, alpha = 9.7, beta = 0.61
    {
        FiModel truth{9.7, 0.61, 0.0};
        Dataset ds;
        for (int i = 0; i < 60; ++i) {
            ChannelSample s;
            s.distance_m = stream.uniform(1.0, 40.0);
            s.frequency_ghz = 28.0;
            s.path_loss_db = eval_fi(truth, s.distance_m);
            ds.samples.push_back(s);
        }
        const FiModel fit = fit_fi(ds);
        if (std::abs(fit.alpha_db - 9.7) > 1e-8 * 9.7 || std::abs(fit.beta - 0.61) > 1e-8) {
            detail = "FI parameters not recovered";
            return false;
        }
    }
    // CIF, n = 2, b = 0.3, f0 = 30
    {
        CifModel truth;
        truth.ple = 2.0;
        truth.slope_factor = 0.3;
        truth.reference_frequency_ghz = 30.0;
        Dataset ds;
        for (int i = 0; i < 80; ++i) {
            ChannelSample s;
            s.distance_m = stream.uniform(1.5, 40.0);
            s.frequency_ghz = i % 2 == 0 ? 28.0 : 32.0;
            s.path_loss_db = eval_cif(truth, s.distance_m, s.frequency_ghz);
            ds.samples.push_back(s);
        }
        const CifModel fit = fit_cif(ds, 30.0);
        if (std::abs(fit.ple - 2.0) > 1e-8 * 2.0 || std::abs(fit.slope_factor - 0.3) > 1e-8) {
            detail = "CIF parameters not recovered";
            return false;
        }
    }
    // ABG, alpha = 3.4, beta = 19.2, gamma = 2.3
    {
        AbgModel truth;
        truth.alpha = 3.4;
        truth.beta_db = 19.2;
        truth.gamma = 2.3;
        Dataset ds;
        for (int i = 0; i < 90; ++i) {
            ChannelSample s;
            s.distance_m = stream.uniform(1.0, 40.0);
            s.frequency_ghz = i % 3 == 0 ? 28.0 : (i % 3 == 1 ? 38.0 : 60.0);
            s.path_loss_db = eval_abg(truth, s.distance_m, s.frequency_ghz);
            ds.samples.push_back(s);
        }
        const AbgModel fit = fit_abg(ds);
        if (std::abs(fit.alpha - 3.4) > 1e-8 * 3.4 || std::abs(fit.beta_db - 19.2) > 1e-8 * 19.2 ||
            std::abs(fit.gamma - 2.3) > 1e-8 * 2.3) {
            detail = "ABG parameters not recovered";
            return false;
        }
    }
    return true;
}

bool criterion_statistical_recovery(std::string& detail) {
    SimConfig cfg = umi_preset();
    cfg.ci_n = 2.0;
    cfg.shadow_sigma_db = 4.0;
    const Dataset ds = simulated(cfg, 10000, 424242);
    const CiModel fit = fit_ci(ds);
    std::ostringstream ss;
    ss << "n=" << fit.ple << ", sigma=" << fit.shadow_sigma_db;
    detail = ss.str();
    return fit.ple >= 1.95 && fit.ple <= 2.05 && fit.shadow_sigma_db >= 3.8 &&
           fit.shadow_sigma_db <= 4.2;
}

bool criterion_fspl(std::string& detail) {
    const double value = fspl(28.0, 1.0);
    detail = "fspl(28 GHz, 1 m) = " + format_number(value);
    return std::abs(value - 61.39) <= 0.01;
}

bool criterion_metric_identities(std::string& detail) {
    rng::Stream stream(1005);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + stream.uniform_int(0, 20);
        std::vector<double> a(n), b(n), a2(n), b2(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = stream.uniform(-100.0, 100.0);
            b[i] = stream.uniform(-100.0, 100.0);
            a2[i] = a[i] + 42.0;
            b2[i] = b[i] + 42.0;
        }
        const EvalReport rep = evaluate(a, b);
        if (std::abs(rep.rmse * rep.rmse - rep.mse) > 1e-12 * std::max(rep.mse, 1.0)) {
            detail = "rmse^2 != mse";
            return false;
        }
        if (rep.mae > rep.rmse + 1e-12) {
            detail = "mae > rmse";
            return false;
        }
        const EvalReport shifted = evaluate(a2, b2);
        if (std::abs(shifted.mae - rep.mae) > 1e-9 || std::abs(shifted.mse - rep.mse) > 1e-9) {
            detail = "translation invariance violated";
            return false;
        }
        if (std::abs(evaluate(a, a).r_square - 1.0) > 1e-12) {
            detail = "R^2 != 1 on equal vectors";
            return false;
        }
        if (rep.mse > 1e-9 && !(rep.r_square < 1.0)) {
            detail = "R^2 == 1 on unequal vectors";
            return false;
        }
    }
    return true;
}

bool criterion_nested_r2(std::string& detail) {
    const auto ladder = default_feature_ladder();
    for (int trial = 0; trial < 50; ++trial) {
        SimConfig cfg = umi_preset();
        cfg.ci_n = 2.0 + 0.04 * trial;
        cfg.shadow_sigma_db = 1.0 + 0.1 * trial;
        if (trial % 2 == 0) {
            cfg.rp_noise_sigma_db = 2.0;
            cfg.rp_spread_bias_db = 1.5;
            cfg.spread_variation = 0.3;
        }
        const Dataset ds = simulated(cfg, 120, 9000 + static_cast<std::uint64_t>(trial));
        const auto y = observed(ds);
        double prev = -1e300;
        for (const auto& features : ladder) {
            const RegressionFit fit = fit_regression(ds, features);
            const EvalReport rep = evaluate(y, predict(fit, ds));
            if (rep.r_square < prev - 1e-10) {
                detail = "trial " + std::to_string(trial) + ": training R^2 decreased";
                return false;
            }
            prev = rep.r_square;
        }
    }
    return true;
}

bool criterion_ladder_trend(std::string& detail) {
    // UMi-preset run where the delay/power features carry signal:
    // per-sample delay-spread variation biases the received-power estimate,
    // plus independent measurement noise.
    SimConfig cfg = umi_preset();
    cfg.shadow_sigma_db = 8.0;
    cfg.spread_variation = 0.6;
    cfg.rp_spread_bias_db = 5.0;
    cfg.rp_noise_sigma_db = 2.0;
    cfg.tap_count_min = 8;
    cfg.tap_count_max = 8;
    cfg.tap_jitter_sigma_db = 0.0;
    const Dataset ds = simulated(cfg, 5000, 777);

    const AblationReport rep = run_ablation(ds, default_feature_ladder(), {0.7, 7});
    std::ostringstream ss;
    ss << "test RMSE ";
    for (std::size_t i = 0; i < rep.rungs.size(); ++i)
        ss << (i ? " -> " : "") << rep.rungs[i].test_eval.rmse;
    ss << "; test R^2 ";
    for (std::size_t i = 0; i < rep.rungs.size(); ++i)
        ss << (i ? " -> " : "") << rep.rungs[i].test_eval.r_square;
    detail = ss.str();

    for (std::size_t i = 1; i < rep.rungs.size(); ++i) {
        if (!(rep.rungs[i].test_eval.rmse < rep.rungs[i - 1].test_eval.rmse)) return false;
        if (!(rep.rungs[i].test_eval.r_square > rep.rungs[i - 1].test_eval.r_square)) return false;
    }
    return true;
}

bool criterion_transfer(std::string& detail) {
    // identity transfer
    const Dataset source = simulated(umi_preset(), 600, 31);
    const SplitSpec split{0.7, 13};
    auto [train, test] = split_train_test(source, split);
    const TransferReport identity = run_transfer(source, test, {"distance"}, split);
    if (identity.cross_domain.rmse != identity.in_domain.rmse ||
        identity.cross_domain.mae != identity.in_domain.mae) {
        detail = "identity transfer not exact";
        return false;
    }

    // matched distribution
    const Dataset src = simulated(umi_preset(), 10000, 41);
    const Dataset tgt = simulated(umi_preset(), 10000, 42);
    const TransferReport matched = run_transfer(src, tgt, {"distance"}, {0.7, 13});
    if (std::abs(matched.cross_domain.rmse - matched.in_domain.rmse) >
        0.2 * matched.in_domain.rmse) {
        detail = "matched-distribution RMSE drifted beyond 20%";
        return false;
    }

    // UMi -> UMa preset: report with two labeled metric columns
    const Dataset uma = simulated(uma_preset(), 3000, 43);
    const TransferReport cross = run_transfer(simulated(umi_preset(), 3000, 44), uma,
                                              {"distance"}, {0.7, 13});
    RunReport rr;
    rr.command = "transfer";
    rr.payload = cross;
    std::ostringstream out;
    write_report(out, rr);
    const std::string text = out.str();
    for (const char* needle :
         {"source_env: UMi", "target_env: UMa", "in_domain", "cross_domain", "mae_db", "rmse_db"}) {
        if (text.find(needle) == std::string::npos) {
            detail = std::string("transfer report missing '") + needle + "'";
            return false;
        }
    }
    return true;
}

bool criterion_cli_determinism(std::string& detail) {
    const std::string cfg_path = tmp_path("accept.cfg");
    {
        std::ofstream cfg(cfg_path);
        cfg << "preset=umi\nn_samples=400\nseed=99\n";
    }
    const std::string out_a = tmp_path("accept_a.csv");
    const std::string out_b = tmp_path("accept_b.csv");
    const std::string cli = PLM_CLI_PATH;
    auto run = [&](const std::string& args) {
        return WEXITSTATUS(std::system((cli + " " + args + " 2>/dev/null").c_str()));
    };
    if (run("gen " + cfg_path + " " + out_a) != 0 || run("gen " + cfg_path + " " + out_b) != 0) {
        detail = "gen failed";
        return false;
    }
    if (slurp(out_a) != slurp(out_b)) {
        detail = "gen outputs differ byte-wise";
        return false;
    }

    const std::string rep_a = tmp_path("accept_a.report");
    const std::string rep_b = tmp_path("accept_b.report");
    if (run("fit " + out_a + " --model fi --seed 4 --report " + rep_a) != 0 ||
        run("fit " + out_a + " --model fi --seed 4 --report " + rep_b) != 0) {
        detail = "fit failed";
        return false;
    }
    auto strip = [](const std::string& text) {
        std::stringstream in(text), out;
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("duration_ms:", 0) != 0) out << line << '\n';
        return out.str();
    };
    if (strip(slurp(rep_a)) != strip(slurp(rep_b))) {
        detail = "reports differ beyond the duration field";
        return false;
    }
    return true;
}

bool criterion_rms_delay_spread(std::string& detail) {
    PowerDelayProfile single;
    single.taps = {{12.0, 3.0}};
    if (rms_delay_spread(single) != 0.0) {
        detail = "single tap spread not zero";
        return false;
    }
    PowerDelayProfile pair;
    pair.taps = {{0.0, 1.0}, {100.0, 1.0}};
    if (std::abs(rms_delay_spread(pair) - 50.0) > 1e-9) {
        detail = "two equal taps at 0/100 ns did not give 50 ns";
        return false;
    }
    PowerDelayProfile shifted = pair;
    for (auto& tap : shifted.taps) tap.delay_ns += 321.5;
    if (std::abs(rms_delay_spread(shifted) - rms_delay_spread(pair)) > 1e-9) {
        detail = "delay-shift invariance violated";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    const auto suite_start = std::chrono::steady_clock::now();

    criterion(1, "OLS grid-oracle equivalence and normal-equation residual",
              criterion_ols_oracle);
    criterion(2, "exact noise-free recovery for CI/CIF/FI/ABG", criterion_exact_recovery);
    criterion(3, "statistical recovery of CI(n=2, sigma=4) at N=10000",
              criterion_statistical_recovery);
    criterion(4, "FSPL anchor at 28 GHz / 1 m", criterion_fspl);
    criterion(5, "metric identities on 1000 random vector pairs", criterion_metric_identities);
    criterion(6, "nested training-R^2 monotonicity on 50 random datasets", criterion_nested_r2);
    criterion(7, "test RMSE/R^2 trend across LR -> MLR(3) -> MLR(8)", criterion_ladder_trend);
    criterion(8, "transfer harness: identity, matched-distribution, UMi->UMa",
              criterion_transfer);
    criterion(9, "CLI determinism: byte-identical CSVs, reports modulo duration",
              criterion_cli_determinism);
    criterion(10, "RMS delay spread anchors and shift invariance", criterion_rms_delay_spread);

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << total
              << " s total)\n";
    return failures == 0 ? 0 : 1;
}
