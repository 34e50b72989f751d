#pragma once

#include "sejoin/integral_model.hpp"
#include "sejoin/join.hpp"
#include "sejoin/lattice.hpp"
#include "sejoin/search.hpp"
#include "sejoin/space.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sejoin {

// All machine output is built as a deterministic ordered JSON document
// (schema "sejoin/1"): stable field order, torsion in invariant-factor
// form, unknown values rendered as the explicit token "unknown".
using Json = nlohmann::ordered_json;

enum class Format { Table, Jsn, Tsv };

Format format_from_string(const std::string& name);

Json space_to_json(const SeSpace& s);
Json certificate_to_json(const JoinCertificate& c, const std::string& left,
                         const std::string& right);
Json model_to_json(const IntegralModel& m);
Json violations_to_json(const std::vector<Violation>& vs);
Json lattice_point_to_json(const LatticePoint& p);
Json scaling_to_json(const ScalingSolution& s);

// Report for `eval EXPR`: expression echo, the space, per-step
// certificates, integral model or "rational only", ambiguity notes,
// validator results.
Json eval_report(const std::string& expression, const SeSpace& space,
                 const std::vector<JoinCertificate>& certs,
                 const std::vector<std::pair<std::string, std::string>>& cert_factors);

// true when the report contains an indeterminate verdict or unknown value
// (drives --strict).
bool report_has_unknown(const Json& report);

std::string render(const Json& report, Format format);

}  // namespace sejoin
