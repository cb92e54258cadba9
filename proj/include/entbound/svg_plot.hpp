#pragma once

#include <iosfwd>

#include "entbound/experiment.hpp"

namespace entbound {

/// Mean +/- std vs L per (beta, preset) series, with the closed-system
/// bound as a dashed line. Reads only SweepRow data, so the plot can be
/// regenerated from the CSV alone.
void render_sweep_svg(const std::vector<SweepRow>& rows, std::ostream& out);

/// S_ent(tau) trace with a dashed horizontal bound line.
void render_trace_svg(const std::vector<std::pair<double, double>>& trace, double bound,
                      std::ostream& out);

}  // namespace entbound
