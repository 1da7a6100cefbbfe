#pragma once

#include <string>
#include <vector>

#include "singulact/invariants.hpp"
#include "singulact/newton.hpp"
#include "singulact/parse.hpp"
#include "singulact/scan.hpp"

namespace singulact {

/// Compact JSON with sorted keys. Every number other than n and counts is a
/// rational string ("p/q", "p" or "inf"); interval bounds are ["lo", "hi"].
std::string emit_json(const InvariantReport& r);
std::string emit_json(const CheckOutcome& c);
std::string emit_json(const std::vector<CheckOutcome>& cs);
std::string emit_json(const scan::Report& r);
/// Points, facets and vertices of P(a).
std::string emit_json(const newton::NewtonPolyhedron& P, const newton::Caps& caps = newton::Caps{});

}  // namespace singulact
