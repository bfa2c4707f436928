#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "ydh/ydhopf.hpp"

namespace ydh {

/*
 * The YDH text format (grammar in docs/ydh_format.md).  parse_ydh checks
 * shapes and field membership only; the axioms are left to verify_axioms.
 * Errors carry 1-based line and column numbers.
 */
YDHopfAlgebra parse_ydh(std::string_view text);
// Canonical rendering: parse_ydh(render_ydh(a)) == a, and render(parse(t)) == t
// for every canonical t.
std::string render_ydh(const YDHopfAlgebra& a);

YDHopfAlgebra read_ydh_file(const std::string& path);
void write_ydh_file(const std::string& path, const YDHopfAlgebra& a);

struct ReportOptions {
  bool tensor_ideals = false;
  int subset_cap = 12;
};

/*
 * Canonical analysis report (schema in docs/report_schema.md).  Contains no
 * timing and no host data, so equal inputs give equal reports.  Throws
 * NonSplitField when the idempotents leave the field of the input.
 */
nlohmann::ordered_json analysis_report(const YDHopfAlgebra& a, const ReportOptions& opts = {});

// Counts of failed axiom checks and failed theorem checks in a report.
struct ReportStatus {
  int axiom_failures = 0;
  int theorem_failures = 0;
  bool pass() const { return axiom_failures == 0 && theorem_failures == 0; }
};
ReportStatus report_status(const nlohmann::ordered_json& canonical);

// Report document: the canonical section followed by the timing trailer.
std::string render_report(const nlohmann::ordered_json& canonical, double seconds);

// Exit codes: 0 pass, 1 axiom or theorem failure, 2 usage or input error,
// 3 NonSplitField.
int cli_main(int argc, char** argv);

}  // namespace ydh
