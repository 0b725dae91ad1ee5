#pragma once

#include <optional>
#include <string>
#include <vector>

#include "refl/eigenstab.hpp"
#include "refl/rootsys.hpp"

namespace refl::cli {

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& s);

/// Verification results for one requested type. A skipped type carries a
/// reason and no results; facts are absent when the label itself was rejected.
struct GroupReport {
    std::string type;
    std::optional<GroupFacts> facts;
    std::vector<VerificationRecord> results;
    std::optional<std::string> skipped;
};

/// Records for every requested type; deterministic apart from wall_time_ms.
/// JSON is one object for a single type and an array otherwise.
std::string emit_report(const std::vector<GroupReport>& reports, Format format);

/// Every record satisfies min_N >= bn with equality exactly when b = h.
bool all_pass(const std::vector<GroupReport>& reports);

/// Human-readable description of every failing record.
std::string counterexamples(const std::vector<GroupReport>& reports);

}  // namespace refl::cli
