#pragma once

// Serialization of curves and bound reports.  Output is deterministic:
// identical inputs produce byte-identical text ('\n' newlines, shortest
// round-trip decimal for every double, insertion-ordered keys).

#include <string>

#include "zeno/bounds.hpp"
#include "zeno/thermal.hpp"

namespace zeno {

// '# key=value' provenance lines (tool/version first, then the curve's own
// metadata), a 't,p1' header row, one comma-separated row per sample.
std::string curve_to_csv(const SurvivalCurve& curve);

// Single object {"metadata": {...}, "series": {"t": [...], "p1": [...]}};
// metadata values stay strings (they are provenance entries), series values
// are numbers.
std::string curve_to_json(const SurvivalCurve& curve);

// Single object {"metadata": {...}, "report": {...}} with the report fields
// as numbers (validity as a two-element array).
std::string bound_report_to_json(const BoundReport& report,
                                 const Provenance& metadata);

// Binary-mode write; DomainError when the file cannot be created.
void write_file(const std::string& path, const std::string& content);

}  // namespace zeno
