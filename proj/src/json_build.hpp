#pragma once

#include <nlohmann/json.hpp>

#include "singulact/invariants.hpp"
#include "singulact/newton.hpp"
#include "singulact/scan.hpp"

namespace singulact::detail {

using Json = nlohmann::json;

Json rat_json(const ExtRat& v);
Json bound_json(const Bound& b);
Json report_json(const InvariantReport& r);
Json check_json(const CheckOutcome& c);
Json scan_json(const scan::Report& r);
Json polyhedron_json(const newton::NewtonPolyhedron& P, const newton::Caps& caps);

}  // namespace singulact::detail
