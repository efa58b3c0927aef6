#pragma once

#include <string>
#include <string_view>

#include "paramat/audit.hpp"

namespace paramat {

/// JSON document with the grid keyed "property/logic".
std::string to_json(const AuditReport& report);
/// Inverse of to_json; throws Error on malformed documents.
AuditReport report_from_json(std::string_view document);

/// The grid as a tick/cross table in summary-table layout, with flagged
/// cells and footnotes for discrepancies.
std::string render_table(const AuditReport& report);
/// One block per verdict with method, samples and evidence.
std::string render_audit(const AuditReport& report);

}  // namespace paramat
