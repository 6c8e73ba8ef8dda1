// Command-line front end: configure the state family and the quadrature grid,
// inspect boosted states, run contextuality checks, one-shot discrimination,
// and rapidity sweeps with CSV output.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "spinboost/experiment.hpp"

namespace {

using namespace spinboost;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

std::string fmt_matrix(const Mat2& m) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "[[%.10g%+.10gi, %.10g%+.10gi],\n   [%.10g%+.10gi, %.10g%+.10gi]]",
                  m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag(), m(1, 0).real(),
                  m(1, 0).imag(), m(1, 1).real(), m(1, 1).imag());
    return buf;
}

std::string fmt_prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", p);
    return buf;
}

void print_density_report(const char* name, const SpinDensity& rho) {
    const auto eig = hermitian_eigenvalues(rho.matrix());
    std::printf("%s =\n  %s\n  trace deviation %.3e   min eigenvalue %.3e   purity %.10g\n", name,
                fmt_matrix(rho.matrix()).c_str(), rho.matrix().trace().real() - 1.0, eig.lo,
                rho.purity());
}

int cmd_boost(const RunConfig& config) {
    const QuadratureGrid grid = config.make_grid();
    const auto family = make_state_family(config, grid);
    const auto set = boost_state_set(family, Rapidity(config.zeta), grid, config.mass);
    std::printf("zeta = %.10g\n", config.zeta);
    for (std::size_t i = 0; i < kSpinLabels.size(); ++i) {
        const char* label = to_string(kSpinLabels[i]);
        std::printf("\n--- state %s ---\n", label);
        print_density_report("rho (rest frame)", set.rest[i]);
        print_density_report("tau (boosted frame)", set.boosted[i]);
        const auto& ints = set.integrals[i];
        std::printf("integrals: i1 = %.10g, i2 = %.10g, i3 = %.10g%+.10gi, i4 = %.10g%+.10gi\n",
                    ints.i1, ints.i2, ints.i3.real(), ints.i3.imag(), ints.i4.real(),
                    ints.i4.imag());
        const double cross =
            max_abs_diff(boosted_from_integrals(kSpinLabels[i], ints).matrix(),
                         set.boosted[i].matrix());
        std::printf("direct vs integral-assembled: max entry difference %.3e\n", cross);
    }
    return kExitOk;
}

int cmd_contextuality(const RunConfig& config) {
    const QuadratureGrid grid = config.make_grid();
    const auto family = make_state_family(config, grid);
    const auto set = boost_state_set(family, Rapidity(config.zeta), grid, config.mass);

    const auto report = [](const char* name, std::span<const SpinDensity> states) {
        const auto sv = gram_singular_values(states);
        const int rank = gram_rank(states);
        std::printf("%s: rank %d of %zu -> %s  (singular values", name, rank, states.size(),
                    rank == static_cast<int>(states.size()) ? "non-contextual" : "contextual");
        for (double s : sv) std::printf(" %.6e", s);
        std::printf(")\n");
        return rank;
    };

    std::printf("zeta = %.10g\n", config.zeta);
    report("rest set", set.rest);
    const int boosted_rank = report("boosted set", set.boosted);

    if (boosted_rank == 4) {
        const DualFrame frame = build_dual_frame(set.boosted);
        std::printf("dual frame: residual %.6e, condition %.6e\n", frame.residual,
                    frame.condition);
        const auto povms = random_projective_povms(100, config.seed);
        const OntologyCheck check = verify_ontological_model(set.boosted, frame, povms);
        std::printf("model check over %zu seeded POVMs: max violation %.6e, min response %.6e, "
                    "max weight-sum error %.6e\n",
                    povms.size(), check.max_violation, check.min_response,
                    check.max_weight_error);
    } else {
        std::printf("dual frame: not attempted (boosted set is rank deficient)\n");
    }
    return kExitOk;
}

int cmd_discriminate(const RunConfig& config) {
    const QuadratureGrid grid = config.make_grid();
    const auto family = make_state_family(config, grid);
    const Rapidity zeta(config.zeta);
    std::array<SpinDensity, 4> taus{
        boosted_reduced_density(family[0], zeta, grid, config.mass),
        boosted_reduced_density(family[1], zeta, grid, config.mass),
        boosted_reduced_density(family[2], zeta, grid, config.mass),
        boosted_reduced_density(family[3], zeta, grid, config.mass)};

    const DiscriminationProblem four(std::vector<SpinDensity>(taus.begin(), taus.end()),
                                     std::vector<double>(config.priors.begin(),
                                                         config.priors.end()));
    const DiscriminationResult res = min_error_sdp(four, config.tol);

    const std::array<double, 2> half{0.5, 0.5};
    const std::array<SpinDensity, 2> first{taus[0], taus[1]};
    const std::array<SpinDensity, 2> second{taus[2], taus[3]};
    const double two = helstrom(ensemble_mix(first, half), ensemble_mix(second, half));

    std::printf("zeta = %.10g\n", config.zeta);
    std::printf("four-state success probability   = %s  (duality gap %.3e, %d iterations)\n",
                fmt_prob(res.p_success).c_str(), res.duality_gap, res.iterations);
    std::printf("two-ensemble Helstrom probability = %s\n", fmt_prob(two).c_str());
    return kExitOk;
}

int cmd_sweep(const RunConfig& config) {
    std::ofstream file;
    if (!config.out.empty()) {
        // open before computing so an unwritable path fails immediately
        file.open(config.out, std::ios::binary);
        if (!file) {
            std::fprintf(stderr, "error: cannot open output file '%s'\n", config.out.c_str());
            return kExitIo;
        }
    }
    const SweepResult result = sweep_rapidity(config);
    std::ostream& os = config.out.empty() ? std::cout : file;
    write_sweep_csv(os, config, result);
    os.flush();
    if (!config.out.empty() && !file) {
        std::fprintf(stderr, "error: failed writing output file '%s'\n", config.out.c_str());
        return kExitIo;
    }
    if (!result.all_ok) {
        std::fprintf(stderr, "error: one or more sweep rows failed (see status column)\n");
        return kExitNumerical;
    }
    return kExitOk;
}

void add_common_options(CLI::App* cmd, RunConfig& config) {
    cmd->set_config("--config");
    cmd->add_option("--mass", config.mass, "particle mass (natural units)");
    cmd->add_option("--epsilon", config.epsilon, "azimuthal deformation strength, in [0, 1)");
    cmd->add_option("--sigma-up", config.sigma_up, "width of the z-up profile");
    cmd->add_option("--sigma-down", config.sigma_down, "width of the z-down profile");
    cmd->add_option("--sigma-plus", config.sigma_plus, "width of the x-plus profile");
    cmd->add_option("--sigma-minus", config.sigma_minus, "width of the x-minus profile");
    cmd->add_option("--deform-phase", config.deform_phase,
                    "azimuthal phase of the deformation (radians)");
    cmd->add_option("--p-nodes", config.p_nodes, "radial quadrature nodes");
    cmd->add_option("--theta-nodes", config.theta_nodes, "polar quadrature nodes");
    cmd->add_option("--phi-nodes", config.phi_nodes, "azimuthal quadrature nodes");
    cmd->add_option("--p-max", config.p_max, "radial cutoff (0 = automatic)");
    cmd->add_option("--priors", config.priors, "four prior probabilities");
    cmd->add_option("--tol", config.tol, "solver tolerance");
    cmd->add_option("--seed", config.seed, "seed for randomized diagnostics");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinboost: boosted spin-1/2 reduced states, contextuality rank tests and "
                 "state-discrimination experiments"};
    app.require_subcommand(1);

    RunConfig config;

    auto* boost = app.add_subcommand("boost", "print rest and boosted reduced density matrices");
    add_common_options(boost, config);
    boost->add_option("--zeta", config.zeta, "boost rapidity");

    auto* ctx = app.add_subcommand("contextuality", "rank tests, dual frame and model check");
    add_common_options(ctx, config);
    ctx->add_option("--zeta", config.zeta, "boost rapidity");

    auto* disc = app.add_subcommand("discriminate", "one-shot SDP and Helstrom at a rapidity");
    add_common_options(disc, config);
    disc->add_option("--zeta", config.zeta, "boost rapidity");

    auto* sweep = app.add_subcommand("sweep", "rapidity sweep, CSV output");
    add_common_options(sweep, config);
    sweep->add_option("--zeta-min", config.zeta_min, "first rapidity");
    sweep->add_option("--zeta-max", config.zeta_max, "last rapidity");
    sweep->add_option("--zeta-steps", config.zeta_steps, "number of rows");
    sweep->add_option("--out", config.out, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        config.validate();
        if (app.got_subcommand(boost)) return cmd_boost(config);
        if (app.got_subcommand(ctx)) return cmd_contextuality(config);
        if (app.got_subcommand(disc)) return cmd_discriminate(config);
        if (app.got_subcommand(sweep)) return cmd_sweep(config);
    } catch (const InvalidInput& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return kExitValidation;
    } catch (const UnnormalizedProfile& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return kExitValidation;
    } catch (const NumericalFailure& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumerical;
    }
    return kExitOk;
}
