#pragma once

#include "ddsim/event_log.hpp"
#include "ddsim/process_model.hpp"
#include "ddsim/replay.hpp"

#include <optional>
#include <string_view>

namespace ddsim {

enum class ConformanceMode { remove, replace };

std::string_view to_string(ConformanceMode mode);
std::optional<ConformanceMode> conformance_mode_from_string(std::string_view name);

struct ConformanceResult {
    EventLog log;
    std::size_t removed = 0;   // dropped non-fitting traces
    std::size_t replaced = 0;  // traces rewritten onto a fitting variant
};

/// remove: drop every trace that does not replay.
/// replace: rewrite each non-fitting trace onto the fitting variant of the same
/// log at minimal concurrency-aware Damerau-Levenshtein distance (ties: more
/// frequent variant, then lexicographic). Timestamps and resources move over by
/// position; missing positions get a zero-duration event at the previous end
/// without resource. A rewritten trace whose timestamp order would change the
/// variant is dropped and counted in `removed`.
///
/// Throws NonConformantError when no trace fits.
ConformanceResult enforce_conformance(const ProcessModel& model, const EventLog& log,
                                      ConformanceMode mode, const ReplayOptions& options = {});

}  // namespace ddsim
