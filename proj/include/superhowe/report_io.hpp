#pragma once

#include <string>
#include <vector>

#include "superhowe/decompose.hpp"

namespace superhowe {

enum class OutputFormat { Json, Csv, Table };

OutputFormat parse_format(const std::string& s);  // "json" | "csv" | "table"

// JSON document for a run of reports (schema version 1):
// {
//   "schema": 1, "n": ..., "dmax": ...,
//   "reports": [ { "n": ..., "degree": ..., "entries": [...], "dim_audit": {...} } ]
// }
// Weights are arrays of exact fraction strings ("7/2"), never decimals, and
// parsing then re-dumping a document reproduces it byte for byte.
std::string reports_to_json(const std::vector<DecompositionReport>& reports, int n, int dmax);
std::string reports_to_csv(const std::vector<DecompositionReport>& reports);
std::string reports_to_table(const std::vector<DecompositionReport>& reports);

std::string render_reports(const std::vector<DecompositionReport>& reports, int n, int dmax,
                           OutputFormat format);

// Byte-stable reserialization used by the round-trip contract.
std::string json_roundtrip(const std::string& text);

}  // namespace superhowe
