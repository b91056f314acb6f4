#pragma once

// JSON and CSV encodings of the toolkit's values, with parsers for every
// format that is written. Rationals travel as "p/q" strings; CSV readers
// skip '#' comment lines and the header.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dioph/beta.hpp"
#include "dioph/experiments.hpp"
#include "dioph/filtration.hpp"
#include "dioph/monomial_order.hpp"

namespace dioph::io {

using Json = nlohmann::ordered_json;

Json to_json(const SaturatedSet& s);
SaturatedSet saturated_from_json(const Json& j);

Json to_json(const FiltrationProfile& p);
FiltrationProfile profile_from_json(const Json& j);

Json to_json(const Subscheme& y);
/// {label, generators[, n]}; `n` in the object overrides the default.
Subscheme subscheme_from_json(const Json& j, std::size_t default_n);

Json to_json(const InequalityConfig& cfg);
InequalityConfig config_from_json(const Json& j);
/// "log(r)" or "0".
LogRational parse_log_rational(const std::string& text);

Json to_json(const std::vector<Example5Row>& rows);
std::vector<Example5Row> example5_from_json(const Json& j);
void write_example5_csv(std::ostream& out, const std::vector<Example5Row>& rows);
std::vector<Example5Row> read_example5_csv(std::istream& in);

Json to_json(const std::vector<BetaConvergenceRow>& rows);
std::vector<BetaConvergenceRow> beta_rows_from_json(const Json& j);
void write_beta_csv(std::ostream& out, const std::vector<BetaConvergenceRow>& rows);
std::vector<BetaConvergenceRow> read_beta_csv(std::istream& in);

/// Scan rows only (the counters are summarised separately).
Json to_json(const ScanReport& r);
ScanReport scan_from_json(const Json& j);
void write_scan_csv(std::ostream& out, const ScanReport& r);
std::vector<ScanRow> read_scan_csv(std::istream& in);

Json to_json(const PropertySuiteReport& r);
PropertySuiteReport suite_from_json(const Json& j);

/// Splits a CSV line on commas (no quoting is ever needed by our writers).
std::vector<std::string> split_csv(const std::string& line);

}  // namespace dioph::io
