#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "spinboost/contextuality.hpp"
#include "spinboost/discrimination.hpp"
#include "spinboost/run_config.hpp"

namespace spinboost {

inline constexpr std::array<SpinLabel, 4> kSpinLabels{SpinLabel::up, SpinLabel::down,
                                                      SpinLabel::plus, SpinLabel::minus};

const char* to_string(SpinLabel label);

// The four single-profile states of a run, normalized on the given grid.
std::array<RelativisticQubit, 4> make_state_family(const RunConfig& config,
                                                   const QuadratureGrid& grid);

struct BoostedSet {
    std::array<SpinDensity, 4> rest;
    std::array<SpinDensity, 4> boosted;
    std::array<BoostIntegrals, 4> integrals;
};

BoostedSet boost_state_set(const std::array<RelativisticQubit, 4>& states, Rapidity zeta,
                           const QuadratureGrid& grid, double mass);

struct SweepRow {
    double zeta = 0.0;
    double p_success_four = 0.0;
    double p_helstrom_two = 0.0;
    double min_singular_value = 0.0;
    std::string status = "ok"; // "ok" or an error tag
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool all_ok = true;
};

// One row per zeta: boost the four states, solve the uniform-prior four-state
// discrimination SDP, Helstrom-discriminate the two ensembles
// (up+down)/2 vs (plus+minus)/2, and report the smallest Bloch-Gram singular
// value of the boosted set. Failing rows are recorded in `status` and the
// remaining rows still run.
SweepResult sweep_rapidity(const RunConfig& config);

// CSV with `#`-prefixed resolved-config comment lines, header
// zeta,p_success_four,p_helstrom_two,min_singular_value,status,
// UTF-8, LF, `.` decimal point. Byte-identical for identical configs.
void write_sweep_csv(std::ostream& os, const RunConfig& config, const SweepResult& result);

} // namespace spinboost
