// Copyright 2026 The qqo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   qqo_cli [--epsilon E | --tensor PATH] [flags] <command>
//
// Commands: certify, ks, choi, simulate, fixed-points, sweep.
// Exit codes: 0 all requested certificates pass, 1 some certificate fails,
// 2 input or domain error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qqo/qqo.hpp"

namespace {

using namespace qqo;

struct RunConfig {
    std::optional<double> epsilon;
    std::string tensor;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::size_t steps = kDefaultMaxSteps;
    std::vector<double> init;
    std::vector<double> f;
    std::vector<double> w;
    std::string output;
    double from = 0.0;
    double to = 0.0;
    std::size_t count = 11;
};

/// The resolved input: a tensor, and the parameter when the input is the epsilon family.
struct Input {
    CoeffTensor b;
    std::optional<EpsilonParam> epsilon;
    Json description;
};

Input resolve_input(const RunConfig &cfg) {
    if (cfg.epsilon.has_value() == !cfg.tensor.empty()) {
        throw InputError("exactly one of --epsilon or --tensor is required");
    }
    Input in;
    if (cfg.epsilon) {
        const EpsilonParam e(*cfg.epsilon);
        in.b = build_coeff_tensor(e);
        in.epsilon = e;
    } else {
        TensorInput t = load_tensor_file(cfg.tensor);
        in.b = t.b;
        in.epsilon = t.epsilon;
    }
    if (in.epsilon) {
        in.description = {{"epsilon", in.epsilon->value()}, {"band", to_string(in.epsilon->band())}};
    } else {
        in.description = {{"tensor", cfg.tensor}};
    }
    return in;
}

EpsilonParam require_epsilon(const Input &in, const std::string &command) {
    if (!in.epsilon) {
        throw InputError(command + " is defined for the epsilon family only; pass --epsilon or an {\"epsilon\": e} file");
    }
    return *in.epsilon;
}

void emit(const RunConfig &cfg, const Json &report) {
    if (cfg.output.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) {
        throw InputError("cannot write '" + cfg.output + "'");
    }
    out << report.dump(2) << "\n";
}

std::size_t samples_or(const RunConfig &cfg, std::size_t fallback) {
    return cfg.samples.value_or(fallback);
}

Json matrix_json(const Mat8 &m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < 8; i++) {
        Json row = Json::array();
        for (std::size_t j = 0; j < 8; j++) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

int cmd_certify(const RunConfig &cfg) {
    const Input in = resolve_input(cfg);
    const std::size_t n = samples_or(cfg, kDefaultSamples);
    const auto sp = state_preservation_check(in.b, n, cfg.seed);
    const auto pos = in.epsilon ? positivity_check(*in.epsilon, n, cfg.seed) : sampled_positivity(in.b, n, cfg.seed);
    const auto cp = in.epsilon ? cp_check(*in.epsilon) : cp_check(in.b);
    const auto ks = ks_global_check(in.b, samples_or(cfg, kDefaultKsSamples), cfg.seed, cfg.tol.value_or(kDefaultKsTol));
    const bool passes = sp.passes && pos.is_positive && cp.is_cp && !ks.has_value();

    Json r = make_report("certify");
    r["input"] = in.description;
    r["state_preservation"] = to_json(sp);
    r["positivity"] = to_json(pos);
    r["cp"] = to_json(cp);
    r["ks"] = to_json(ks);
    r["passes"] = passes;
    emit(cfg, r);
    return passes ? 0 : 1;
}

int cmd_ks(const RunConfig &cfg) {
    const Input in = resolve_input(cfg);
    const auto witness =
        ks_global_check(in.b, samples_or(cfg, kDefaultKsSamples), cfg.seed, cfg.tol.value_or(kDefaultKsTol));

    Json r = make_report("ks");
    r["input"] = in.description;
    r["search"] = to_json(witness);

    std::optional<CVec3> w;
    if (!cfg.w.empty()) {
        w = CVec3{cplx(cfg.w[0], cfg.w[1]), cplx(cfg.w[2], cfg.w[3]), cplx(cfg.w[4], cfg.w[5])};
    } else if (witness) {
        w = witness->w;
    }
    bool necessary_holds = true;
    if (w) {
        const BlochVector f = cfg.f.empty() ? BlochVector(1, 0, 0) : BlochVector(cfg.f[0], cfg.f[1], cfg.f[2]);
        const auto nec = ks_necessary_check(in.b, f, *w);
        Json j = to_json(nec);
        j["f"] = to_json(f.vec());
        j["w"] = to_json(*w);
        r["necessary"] = j;
        necessary_holds = nec.holds11 && nec.holds2 && nec.holds_reduced;
    } else {
        r["necessary"] = nullptr;
    }
    const bool passes = !witness.has_value() && necessary_holds;
    r["passes"] = passes;
    emit(cfg, r);
    return passes ? 0 : 1;
}

int cmd_choi(const RunConfig &cfg) {
    const Input in = resolve_input(cfg);
    const Mat8 choi = choi_matrix(in.b);
    const auto cp = in.epsilon ? cp_check(*in.epsilon) : cp_check(in.b);

    Json r = make_report("choi");
    r["input"] = in.description;
    r["cp"] = to_json(cp);
    if (in.epsilon && in.epsilon->value() != 0.0) {
        // 2 choi = I_8 + eps B8; report the spectral radius of B8.
        Mat8 b8 = choi_matrix(*in.epsilon) - Mat8::identity();
        b8 *= 1.0 / in.epsilon->value();
        const auto ev = eigenvalues_hermitian(b8);
        r["spectral_radius_b8"] = std::max(std::abs(ev.front()), std::abs(ev.back()));
    }
    r["choi"] = matrix_json(choi);
    emit(cfg, r);
    return cp.is_cp ? 0 : 1;
}

int cmd_simulate(const RunConfig &cfg) {
    const Input in = resolve_input(cfg);
    const EpsilonParam e = require_epsilon(in, "simulate");
    require_dynamics_domain(e);
    if (cfg.init.empty()) {
        throw InputError("simulate needs --init f1,f2,f3");
    }
    const BlochVector f0(cfg.init[0], cfg.init[1], cfg.init[2]);
    const Trajectory t = iterate(e, f0, cfg.steps, cfg.tol.value_or(kDefaultDynamicsTol));

    Json r = make_report("simulate");
    r["input"] = in.description;
    r["init"] = to_json(f0.vec());
    r["trajectory"] = trajectory_summary(t);
    if (cfg.output.empty()) {
        write_trajectory_csv(std::cout, t);
        std::cerr << r.dump(2) << "\n";
    } else {
        std::ofstream out(cfg.output);
        if (!out) {
            throw InputError("cannot write '" + cfg.output + "'");
        }
        write_trajectory_csv(out, t);
        r["trajectory_file"] = cfg.output;
        std::cout << r.dump(2) << "\n";
    }
    return (t.converged || t.stationary) ? 0 : 1;
}

int cmd_fixed_points(const RunConfig &cfg) {
    const Input in = resolve_input(cfg);
    const EpsilonParam e = require_epsilon(in, "fixed-points");
    const auto fp = fixed_points(e);
    Json r = make_report("fixed-points");
    r["input"] = in.description;
    r["fixed_points"] = to_json(fp);
    emit(cfg, r);
    return fp.sweep_agrees ? 0 : 1;
}

int cmd_sweep(const RunConfig &cfg) {
    if (cfg.epsilon || !cfg.tensor.empty()) {
        throw InputError("sweep takes --from/--to/--count instead of --epsilon or --tensor");
    }
    if (cfg.count < 1 || !std::isfinite(cfg.from) || !std::isfinite(cfg.to)) {
        throw InputError("sweep needs finite --from/--to and --count >= 1");
    }
    const std::size_t n = samples_or(cfg, kDefaultSamples);
    Json rows = Json::array();
    for (std::size_t i = 0; i < cfg.count; i++) {
        const double eps =
            cfg.count == 1 ? cfg.from : cfg.from + (cfg.to - cfg.from) * static_cast<double>(i) / (cfg.count - 1);
        const EpsilonParam e(eps);
        const auto pos = positivity_check(e, n, cfg.seed);
        const auto cp = cp_check(e);
        const auto ball = ball_invariance_check(e, n, cfg.seed);
        const auto ks =
            ks_global_check(build_coeff_tensor(e), samples_or(cfg, kDefaultKsSamples), cfg.seed,
                            cfg.tol.value_or(kDefaultKsTol));
        rows.push_back({{"epsilon", eps},
                        {"band", to_string(e.band())},
                        {"is_positive", pos.is_positive},
                        {"positivity_margin", pos.margin},
                        {"is_cp", cp.is_cp},
                        {"min_choi_eig", cp.min_choi_eig},
                        {"ball_invariant", ball.invariant},
                        {"ball_worst_norm", ball.worst_norm},
                        {"ks_violation", ks.has_value()},
                        {"ks_min_eig", ks ? Json(ks->min_eig) : Json(nullptr)}});
    }
    Json r = make_report("sweep");
    r["rows"] = rows;
    emit(cfg, r);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum quadratic operators on M_2(C): certification and dynamics"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--epsilon", cfg.epsilon, "Parameter of the epsilon family");
    app.add_option("--tensor", cfg.tensor, "Tensor file: {\"b\": 3x3x3 nested m->l->k} or {\"epsilon\": e}");
    app.add_option("--samples", cfg.samples, "Search samples (defaults: 20000, KS search 50000)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed of the sampling sequences");
    app.add_option("--tol", cfg.tol, "KS tolerance (default 1e-8) or convergence tolerance (default 1e-10)")
        ->check(CLI::PositiveNumber);
    app.add_option("--steps", cfg.steps, "Maximum iterations for simulate")->capture_default_str();
    app.add_option("--init", cfg.init, "Initial Bloch vector f1,f2,f3")->delimiter(',')->expected(3);
    app.add_option("--f", cfg.f, "State f1,f2,f3 for the necessary KS conditions")->delimiter(',')->expected(3);
    app.add_option("--w", cfg.w, "Vector re1,im1,re2,im2,re3,im3 for the necessary KS conditions")
        ->delimiter(',')
        ->expected(6);
    app.add_option("--output", cfg.output, "Report (or trajectory CSV for simulate) destination");
    app.add_option("--from", cfg.from, "Sweep start");
    app.add_option("--to", cfg.to, "Sweep end");
    app.add_option("--count", cfg.count, "Sweep points")->capture_default_str();

    int code = 0;
    auto bind = [&](const char *name, const char *help, int (*fn)(const RunConfig &)) {
        app.add_subcommand(name, help)->callback([&code, &cfg, fn] { code = fn(cfg); });
    };
    bind("certify", "State preservation, positivity, complete positivity and KS search", cmd_certify);
    bind("ks", "KS witness search and the necessary KS conditions", cmd_ks);
    bind("choi", "Choi matrix and complete positivity", cmd_choi);
    bind("simulate", "Iterate the quadratic dynamics and write a trajectory CSV", cmd_simulate);
    bind("fixed-points", "Fixed points of the quadratic dynamics", cmd_fixed_points);
    bind("sweep", "Certificates over a range of epsilon", cmd_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    } catch (const qqo::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
