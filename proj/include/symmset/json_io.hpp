#pragma once

#include <json.hpp>

#include "symmset/cycles.hpp"
#include "symmset/ez.hpp"
#include "symmset/levels.hpp"
#include "symmset/propagraph.hpp"

namespace symmset {

using ordered_json = nlohmann::ordered_json;

// Wire formats. Field order is fixed so identical inputs serialize to
// byte-identical output.

ordered_json finset_to_json(const FinSet& A);
FinSet finset_from_json(const ordered_json& j);

ordered_json finfn_to_json(const FinFn& f);
FinFn finfn_from_json(const ordered_json& j);

ordered_json equiv_to_json(const EquivRel& rel);

ordered_json structure_to_json(const Structure& x);
Structure structure_from_json(const ordered_json& j);

ordered_json ez_decomposition_to_json(const EzDecomposition& d);

ordered_json ugraph_to_json(const UGraph& g);
UGraph ugraph_from_json(const ordered_json& j);

ordered_json cycle_to_json(const Cycle& c);
Cycle cycle_from_json(const ordered_json& j);

ordered_json lower_bound_certificate_to_json(const LowerBoundCertificate& cert);
ordered_json aufhebung_report_to_json(const AufhebungReport& report);

// Parses text, converting json errors into DomainError.
ordered_json parse_json(const std::string& text);

}  // namespace symmset
