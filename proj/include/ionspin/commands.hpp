#pragma once

#include <ostream>
#include <string>

#include "ionspin/config.hpp"

namespace ionspin::cli {

// Deterministic CSV/report renderers behind the subcommands; all floats are
// formatted with 12 significant digits so identical configs give identical
// bytes.
std::string render_multiplet_csv(const RunConfig& config);
std::string render_spectrum_sweep_csv(const RunConfig& config);
std::string render_coupling_sweep_csv(const RunConfig& config);
std::string render_rabi_csv(const RunConfig& config);
std::string render_ldos_sweep_csv(const RunConfig& config);
std::string render_pair_csv(const RunConfig& config);
std::string render_calibrate_report(const RunConfig& config);
// The protocol run record; when per_step_csv is non-null it receives the
// pulse-interval population trace as CSV.
std::string render_protocol_report(const RunConfig& config,
                                   std::string* per_step_csv);

// Dispatches a subcommand. CSV output goes to config.output_path when set,
// otherwise to `out`; reports always go to `out`. Failures print one
// machine-parseable line ("error: <code>: <detail>") to `err` and map to
// exit statuses: 2 config, 3 domain, 4 precondition, 5 convergence.
int run(const std::string& subcommand, const RunConfig& config,
        std::ostream& out, std::ostream& err);

}  // namespace ionspin::cli
