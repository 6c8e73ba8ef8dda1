#include "spinboost/experiment.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "spinboost/errors.hpp"

namespace spinboost {

const char* to_string(SpinLabel label) {
    switch (label) {
    case SpinLabel::up: return "up";
    case SpinLabel::down: return "down";
    case SpinLabel::plus: return "plus";
    case SpinLabel::minus: return "minus";
    }
    return "?";
}

std::array<RelativisticQubit, 4> make_state_family(const RunConfig& config,
                                                   const QuadratureGrid& grid) {
    config.validate();
    auto make = [&](SpinLabel label) {
        const Profile raw =
            config.epsilon > 0.0
                ? Profile::deformed_gaussian(config.sigma(label), config.epsilon,
                                             config.deform_phase)
                : Profile::spherical_gaussian(config.sigma(label));
        return canonical_state(label, normalize_profile(raw, grid, config.mass));
    };
    return {make(SpinLabel::up), make(SpinLabel::down), make(SpinLabel::plus),
            make(SpinLabel::minus)};
}

BoostedSet boost_state_set(const std::array<RelativisticQubit, 4>& states, Rapidity zeta,
                           const QuadratureGrid& grid, double mass) {
    auto one_rest = [&](const RelativisticQubit& s) { return rest_reduced_density(s, grid, mass); };
    auto one_boost = [&](const RelativisticQubit& s) {
        return boosted_reduced_density(s, zeta, grid, mass);
    };
    auto one_ints = [&](const RelativisticQubit& s) {
        return boost_integrals(s.profile_up(), zeta, grid, mass);
    };
    return BoostedSet{
        {one_rest(states[0]), one_rest(states[1]), one_rest(states[2]), one_rest(states[3])},
        {one_boost(states[0]), one_boost(states[1]), one_boost(states[2]), one_boost(states[3])},
        {one_ints(states[0]), one_ints(states[1]), one_ints(states[2]), one_ints(states[3])},
    };
}

SweepResult sweep_rapidity(const RunConfig& config) {
    config.validate();
    const QuadratureGrid grid = config.make_grid();
    const auto family = make_state_family(config, grid);

    SweepResult result;
    result.rows.reserve(static_cast<std::size_t>(config.zeta_steps));
    for (int k = 0; k < config.zeta_steps; ++k) {
        SweepRow row;
        row.zeta = config.zeta_steps == 1
                       ? config.zeta_min
                       : config.zeta_min + (config.zeta_max - config.zeta_min) * k /
                                               (config.zeta_steps - 1);
        try {
            const Rapidity zeta(row.zeta);
            std::array<SpinDensity, 4> taus{
                boosted_reduced_density(family[0], zeta, grid, config.mass),
                boosted_reduced_density(family[1], zeta, grid, config.mass),
                boosted_reduced_density(family[2], zeta, grid, config.mass),
                boosted_reduced_density(family[3], zeta, grid, config.mass)};

            const DiscriminationProblem four(
                std::vector<SpinDensity>(taus.begin(), taus.end()),
                std::vector<double>(config.priors.begin(), config.priors.end()));
            row.p_success_four = min_error_sdp(four, config.tol).p_success;

            const std::array<double, 2> half{0.5, 0.5};
            const std::array<SpinDensity, 2> first{taus[0], taus[1]};
            const std::array<SpinDensity, 2> second{taus[2], taus[3]};
            row.p_helstrom_two = helstrom(ensemble_mix(first, half), ensemble_mix(second, half));

            row.min_singular_value = gram_singular_values(taus).back();
        } catch (const NumericalFailure& err) {
            row.status = std::string("error: ") + err.what();
            result.all_ok = false;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

} // namespace

void write_sweep_csv(std::ostream& os, const RunConfig& config, const SweepResult& result) {
    char line[256];
    os << "# spinboost sweep\n";
    std::snprintf(line, sizeof line,
                  "# mass = %.17g\n# epsilon = %.17g\n# deform-phase = %.17g\n", config.mass,
                  config.epsilon, config.deform_phase);
    os << line;
    std::snprintf(line, sizeof line,
                  "# sigma-up = %.17g\n# sigma-down = %.17g\n# sigma-plus = %.17g\n"
                  "# sigma-minus = %.17g\n",
                  config.sigma_up, config.sigma_down, config.sigma_plus, config.sigma_minus);
    os << line;
    std::snprintf(line, sizeof line, "# zeta-min = %.17g\n# zeta-max = %.17g\n# zeta-steps = %d\n",
                  config.zeta_min, config.zeta_max, config.zeta_steps);
    os << line;
    std::snprintf(line, sizeof line,
                  "# p-nodes = %d\n# theta-nodes = %d\n# phi-nodes = %d\n# p-max = %.17g\n",
                  config.p_nodes, config.theta_nodes, config.phi_nodes, config.resolved_p_max());
    os << line;
    std::snprintf(line, sizeof line,
                  "# priors = %.17g %.17g %.17g %.17g\n# tol = %.17g\n# seed = %" PRIu64 "\n",
                  config.priors[0], config.priors[1], config.priors[2], config.priors[3],
                  config.tol, static_cast<std::uint64_t>(config.seed));
    os << line;
    os << "zeta,p_success_four,p_helstrom_two,min_singular_value,status\n";
    for (const auto& row : result.rows) {
        os << fmt("%.6f", row.zeta) << ',';
        if (row.status == "ok") {
            os << fmt("%.6f", row.p_success_four) << ',' << fmt("%.6f", row.p_helstrom_two) << ','
               << fmt("%.6e", row.min_singular_value) << ",ok\n";
        } else {
            std::string status = row.status;
            for (char& c : status)
                if (c == ',' || c == '\n') c = ';';
            os << ",,," << status << '\n';
        }
    }
}

} // namespace spinboost
