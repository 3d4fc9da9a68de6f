/// JSON serialization of analysis results, for the --json CLI output.
#pragma once

#include <json.hpp>

#include "gainspec/spectral.hpp"

namespace gainspec {

/// Eigenvalues grouped by multiplicity: [{"value": v, "multiplicity": m}, ...].
nlohmann::ordered_json spectrum_to_json(const Spectrum& s);

/// Walk-count table keyed by conjugacy-class representative names.  Counts are
/// decimal strings so arbitrarily large values survive the round trip.
nlohmann::ordered_json profile_to_json(const ClassProfile& p);

nlohmann::ordered_json cycle_report_to_json(const CycleReport& r);

}  // namespace gainspec
