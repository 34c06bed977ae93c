/*
 * Copyright 2026 The msyk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <msyk/amplitudes.hpp>
#include <msyk/dynamics.hpp>
#include <msyk/entropy.hpp>
#include <msyk/fock.hpp>
#include <msyk/io.hpp>
#include <msyk/model.hpp>
#include <msyk/permutations.hpp>
#include <msyk/phase.hpp>
#include <msyk/special.hpp>
#include <msyk/trajectory.hpp>

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    msyk::ModelParams params;
    msyk::ReplicaConfig replica;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--J", o.params.J, "onsite coupling rate");
    cmd->add_option("--U", o.params.U, "interaction rate");
    cmd->add_option("--q", o.params.q, "interaction order");
    cmd->add_option("--mu", o.params.mu, "monitoring rate");
    cmd->add_option("--N", o.params.N, "Majoranas per site per chain");
    cmd->add_option("--L", o.params.L, "number of sites");
    cmd->add_option("--n", o.replica.n, "replica order");
    cmd->add_option("--T", o.replica.T, "evolution time");
}

/// Config precedence: explicit flags > JSON config file > defaults.
void apply_config(CLI::App* cmd, CommonOpts& o) {
    if (o.config_path.empty()) return;
    std::ifstream f(o.config_path);
    if (!f) throw CLI::ValidationError("--config", "cannot open " + o.config_path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw CLI::ValidationError("--config", e.what());
    }
    auto take = [&](const char* flag, const char* key, auto& slot) {
        if (j.contains(key) && cmd->count(flag) == 0)
            slot = j.at(key).get<std::decay_t<decltype(slot)>>();
    };
    take("--J", "J", o.params.J);
    take("--U", "U", o.params.U);
    take("--q", "q", o.params.q);
    take("--mu", "mu", o.params.mu);
    take("--N", "N", o.params.N);
    take("--L", "L", o.params.L);
    take("--n", "n", o.replica.n);
    take("--T", "T", o.replica.T);
    take("--seed", "seed", o.seed);
}

json config_json(const CommonOpts& o) {
    json j = o.params;
    j["n"] = o.replica.n;
    j["T"] = o.replica.T;
    return j;
}

std::string out_path(const CommonOpts& o, const std::string& name) {
    return (std::filesystem::path(o.out_dir) / name).string();
}

int run_phase_diagram(const CommonOpts& o, double mu_max, int points,
                      msyk::RunManifest& man) {
    const auto& p = o.params;
    auto info = msyk::classify_transition(p.J, p.U, p.q);
    const char* cls = info.order == msyk::TransitionOrder::Continuous ? "continuous"
                    : info.order == msyk::TransitionOrder::FirstOrder ? "first_order"
                                                                      : "tricritical";
    msyk::CsvWriter csv({"mu", "lambda_1", "theta_1", "lambda_2", "theta_2", "class"});
    for (int i = 0; i < points; ++i) {
        double mu = mu_max * i / (points - 1);
        auto pt = msyk::solve_lambda(mu, p.J, p.U, p.q);
        std::vector<std::string> row{msyk::csv_cell(mu)};
        for (std::size_t k = 0; k < 2; ++k) {
            if (k < pt.thetas.size()) {
                row.push_back(msyk::csv_cell(pt.lambdas[k]));
                row.push_back(msyk::csv_cell(pt.thetas[k]));
            } else {
                row.push_back("");
                row.push_back("");
            }
        }
        row.push_back(cls);
        csv.add_row(row);
    }
    std::string path = out_path(o, "phase_diagram.csv");
    csv.write(path);
    man.outputs.push_back(path);
    return 0;
}

int run_entropy_curve(const CommonOpts& o, int points, msyk::RunManifest& man) {
    msyk::CsvWriter csv({"theta", "sigma", "S_n_2", "S_n_3", "S_n_4"});
    for (int i = 0; i < points; ++i) {
        double theta = (M_PI / 2) * i / (points - 1);
        std::vector<double> row{theta, msyk::vn_entropy_density(theta)};
        for (int n : {2, 3, 4})
            row.push_back(msyk::quasi_entropy(n, theta, o.params.N, o.params.L).density);
        csv.add_row(row);
    }
    std::string path = out_path(o, "entropy_curve.csv");
    csv.write(path);
    man.outputs.push_back(path);
    return 0;
}

int run_spectrum(const CommonOpts& o, int points, msyk::RunManifest& man) {
    int N = o.params.N;
    double lam_max = std::pow(2.0, 4 - N);
    msyk::CsvWriter csv({"lambda", "density"});
    for (int i = 1; i < points; ++i) {
        double lam = lam_max * i / points;
        csv.add_row(std::vector<double>{lam, msyk::spectrum_density(lam, N)});
    }
    std::string path = out_path(o, "spectrum.csv");
    csv.write(path);
    man.outputs.push_back(path);

    json moments;
    for (int k = 0; k <= 5; ++k)
        moments["k" + std::to_string(k)] = msyk::spectrum_moment(N, k);
    std::string mpath = out_path(o, "spectrum_moments.json");
    std::ofstream mf(mpath, std::ios::binary);
    mf << moments.dump(2) << "\n";
    man.outputs.push_back(mpath);
    return 0;
}

int run_saddle_ode(const CommonOpts& o, double t_max, double dt, double c1,
                   double c2, bool printed, msyk::RunManifest& man) {
    const auto& p = o.params;
    msyk::CsvWriter csv({"t", "x1", "x2", "z1", "y1", "y2", "w1",
                         "invariant_A", "invariant_Abar"});
    msyk::OdeState init;
    if (c1 > 0.0 && c2 > 0.0) {
        init = msyk::elliptic_solution(0.0, p.J, p.U, c1, c2,
                                       printed ? msyk::EllipticBranch::Printed
                                               : msyk::EllipticBranch::Corrected);
    } else {
        init = msyk::hyperbolic_solution(0.0, p.J, p.U, msyk::shift_t0(p.J, p.U));
    }
    init.y1 = 0.0;
    init.y2 = -1.0;
    init.w1 = 0.0;
    auto tr = msyk::integrate(init, p.J, p.U, 0.0, t_max, dt);
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        const auto& s = tr.state[i];
        csv.add_row(std::vector<double>{
            tr.t[i], s.x1, s.x2, s.z1, s.y1, s.y2, s.w1,
            s.x1 * s.x1 + s.x2 * s.x2 - s.z1 * s.z1,
            s.y1 * s.y1 + s.y2 * s.y2 - s.w1 * s.w1});
    }
    std::string path = out_path(o, "saddle_ode.csv");
    csv.write(path);
    man.outputs.push_back(path);
    return 0;
}

int run_quasi_entropy(const CommonOpts& o, int points, msyk::RunManifest& man) {
    int n = static_cast<int>(std::lround(o.replica.n));
    msyk::CsvWriter csv({"theta", "S_n", "density"});
    json detail = json::array();
    for (int i = 0; i < points; ++i) {
        double theta = (M_PI / 2) * i / (points - 1);
        auto res = msyk::quasi_entropy(n, theta, o.params.N, o.params.L);
        csv.add_row(std::vector<double>{theta, res.value, res.density});
        json d{{"theta", theta}, {"S_n", res.value}};
        json saddles = json::array();
        for (std::size_t k = 0; k < res.saddles.size(); ++k) {
            json s = res.saddles[k];
            s["log_weight"] = res.saddle_logs[k];
            saddles.push_back(s);
        }
        d["saddles"] = saddles;
        detail.push_back(d);
    }
    std::string path = out_path(o, "quasi_entropy.csv");
    csv.write(path);
    man.outputs.push_back(path);
    std::string jpath = out_path(o, "quasi_entropy.json");
    std::ofstream jf(jpath, std::ios::binary);
    jf << detail.dump(2) << "\n";
    man.outputs.push_back(jpath);
    return 0;
}

int run_simulate(const CommonOpts& o, double dt, int steps, int n_traj,
                 msyk::RunManifest& man) {
    msyk::SimConfig cfg;
    cfg.params = o.params;
    cfg.dt = dt;
    cfg.steps = steps;
    cfg.n_traj = n_traj;
    cfg.seed = o.seed;
    cfg.initial_state = msyk::InitialState::ParityProduct;
    msyk::SimRegister reg(o.params);
    auto curve = msyk::estimate_entropy_curve(reg, cfg);
    msyk::CsvWriter csv({"t", "mean_entropy", "stderr"});
    for (std::size_t i = 0; i < curve.t.size(); ++i)
        csv.add_row(std::vector<double>{curve.t[i], curve.mean[i], curve.stderr_[i]});
    std::string path = out_path(o, "simulate.csv");
    csv.write(path);
    man.outputs.push_back(path);
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& suite,
               msyk::RunManifest& man) {
    json report = json::array();
    int failures = 0;
    bool matched = false;
    auto wanted = [&](const std::string& group) {
        return suite.empty() || suite == group;
    };
    auto check = [&](const std::string& name, bool ok) {
        matched = true;
        report.push_back({{"check", name}, {"pass", ok}});
        if (!ok) ++failures;
    };

    if (wanted("saddles")) {
        bool catalan_ok = true;
        for (int n = 1; n <= 6; ++n)
            catalan_ok &= (msyk::enumerate_maximal_pairs(n).size()
                           == msyk::catalan(n).convert_to<std::size_t>());
        check("saddle count equals catalan (n <= 6)", catalan_ok);
    }

    if (wanted("amplitudes")) {
        bool amp_ok = true;
        for (int len = 1; len <= 3; ++len) {
            for (double theta : {0.0, 0.7, M_PI / 2}) {
                auto got = msyk::oracle_stripped_amplitude(len, theta, 1.0, 2);
                amp_ok &= std::abs(got.coefficient
                                   - msyk::monitored_cycle_factor(len, theta))
                          < 1e-9 * msyk::monitored_cycle_factor(len, theta);
                amp_ok &= std::abs(got.growth_rate - len) < 1e-9;
            }
        }
        check("monitored amplitude matches fock oracle (len <= 3)", amp_ok);
    }

    if (wanted("identities")) {
        bool trig_ok = true;
        for (int n = 1; n <= 20; ++n) {
            for (double a : {1.0, 1.5, 2.0, 5.0}) {
                auto [lhs, rhs] = msyk::trig_product_identity(n, a);
                trig_ok &= std::abs(lhs - rhs) < 1e-9 * std::abs(rhs);
            }
        }
        check("cycle product identity (n <= 20)", trig_ok);
    }

    if (wanted("entropy")) {
        bool sigma_ok =
            std::abs(msyk::vn_entropy_density(0.0) - 2 * std::log(2.0)) < 1e-12
            && msyk::vn_entropy_density(M_PI / 2) == 0.0;
        for (int i = 1; i < 20; ++i) {
            double theta = i * (M_PI / 2) / 20;
            sigma_ok &= std::abs(msyk::vn_entropy_density(theta)
                                 - msyk::vn_entropy_density_fd(theta)) < 1e-6;
        }
        check("entropy density continuation", sigma_ok);
    }

    if (wanted("phase")) {
        bool phase_ok = true;
        for (double mu : {0.2, 0.5, 0.8}) {
            auto pt = msyk::solve_lambda(mu, 1.0, 0.0, 4);
            phase_ok &= std::abs(pt.lambdas[0] - std::sqrt(1.0 - mu * mu)) < 1e-10;
        }
        check("free phase boundary", phase_ok);
    }

    if (!matched)
        throw CLI::ValidationError("--suite", "unknown suite: " + suite);

    std::string path = out_path(o, "verify.json");
    std::ofstream f(path, std::ios::binary);
    f << report.dump(2) << "\n";
    man.outputs.push_back(path);
    for (const auto& item : report)
        std::cout << (item["pass"].get<bool>() ? "PASS " : "FAIL ")
                  << item["check"].get<std::string>() << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"replica saddle-point pipeline for monitored Brownian chains"};
    app.require_subcommand(1);

    CommonOpts o;
    double mu_max = 1.2, t_max = 5.0, ode_dt = 0.001, c1 = 0.0, c2 = 0.0;
    double sim_dt = 0.05;
    int points = 100, steps = 100, n_traj = 100;
    bool printed_branch = false;

    auto* pd = app.add_subcommand("phase-diagram", "scan the saddle angles over mu");
    add_common(pd, o);
    pd->add_option("--mu-max", mu_max, "largest mu in the scan");
    pd->add_option("--points", points, "number of scan points");

    auto* ec = app.add_subcommand("entropy-curve", "entropy densities against theta");
    add_common(ec, o);
    ec->add_option("--points", points, "number of theta points");

    auto* sp = app.add_subcommand("spectrum", "entanglement spectrum density table");
    add_common(sp, o);
    sp->add_option("--points", points, "number of lambda points");

    auto* so = app.add_subcommand("saddle-ode", "integrate the saddle equations");
    add_common(so, o);
    so->add_option("--t-max", t_max, "integration horizon");
    so->add_option("--dt", ode_dt, "integration step");
    so->add_option("--c1", c1, "elliptic turning parameter c1 (0 = kink)");
    so->add_option("--c2", c2, "elliptic turning parameter c2 (0 = kink)");
    so->add_flag("--printed-branch", printed_branch,
                 "use the (1 - sn)^(1/2) variant of x2");

    auto* qe = app.add_subcommand("quasi-entropy", "replica entropy tables");
    add_common(qe, o);
    qe->add_option("--points", points, "number of theta points");

    auto* sim = app.add_subcommand("simulate", "quantum trajectory Monte Carlo");
    add_common(sim, o);
    sim->add_option("--dt", sim_dt, "trotter step");
    sim->add_option("--steps", steps, "number of steps");
    sim->add_option("--traj", n_traj, "number of trajectories");

    auto* ver = app.add_subcommand("verify", "run the oracle cross-checks");
    add_common(ver, o);
    std::string suite;
    ver->add_option("--suite", suite,
                    "restrict to one suite: saddles, amplitudes, identities, "
                    "entropy, phase");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* cmd = app.get_subcommands().front();
    msyk::RunManifest man;
    man.command = cmd->get_name();
    man.seed = o.seed;

    int rc = 0;
    try {
        apply_config(cmd, o);
        man.config = config_json(o);
        msyk::validate(o.params);
        msyk::validate(o.replica);
        std::filesystem::create_directories(o.out_dir);

        if (cmd == pd) rc = run_phase_diagram(o, mu_max, points, man);
        else if (cmd == ec) rc = run_entropy_curve(o, points, man);
        else if (cmd == sp) rc = run_spectrum(o, points, man);
        else if (cmd == so) rc = run_saddle_ode(o, t_max, ode_dt, c1, c2,
                                                printed_branch, man);
        else if (cmd == qe) rc = run_quasi_entropy(o, points, man);
        else if (cmd == sim) rc = run_simulate(o, sim_dt, steps, n_traj, man);
        else rc = run_verify(o, suite, man);
        man.success = (rc == 0);
    } catch (const CLI::ValidationError& e) {
        man.error = e.what();
        rc = 2;
    } catch (const std::invalid_argument& e) {
        man.error = e.what();
        rc = 2;
    } catch (const std::exception& e) {
        man.error = e.what();
        rc = 1;
    }

    try {
        std::filesystem::create_directories(o.out_dir);
        std::string mpath = out_path(o, "manifest.json");
        man.write(mpath);
    } catch (const std::exception& e) {
        std::cerr << "manifest write failed: " << e.what() << "\n";
        rc = rc == 0 ? 1 : rc;
    }
    if (!man.error.empty()) std::cerr << "error: " << man.error << "\n";
    return rc;
}
