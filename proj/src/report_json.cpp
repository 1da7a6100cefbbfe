#include "singulact/report_json.hpp"

#include "json_build.hpp"

namespace singulact {
namespace detail {

Json rat_json(const ExtRat& v) { return parse::format_rat(v); }

Json bound_json(const Bound& b) {
  if (b.exact()) return rat_json(b.lo);
  return Json::array({rat_json(b.lo), rat_json(b.hi)});
}

Json report_json(const InvariantReport& r) {
  Json j;
  j["invariant"] = to_string(r.kind);
  j["value"] = rat_json(r.value);
  j["method"] = to_string(r.method);
  j["input"] = r.input;
  if (r.method != Method::registry) {
    j["n"] = r.n;
    j["assumes"] = r.assumes;
  }
  if (r.certificate) {
    Json u = Json::array();
    for (const auto& x : r.certificate->u) u.push_back(rat_json(x));
    j["certificate"] = {{"u", u}, {"ord", rat_json(r.certificate->ord)}};
  }
  return j;
}

Json check_json(const CheckOutcome& c) {
  Json j;
  j["check"] = c.name;
  switch (c.verdict) {
    case Verdict::holds: j["holds"] = true; break;
    case Verdict::fails: j["holds"] = false; break;
    case Verdict::indeterminate: j["holds"] = "indeterminate"; break;
  }
  j["lhs"] = bound_json(c.lhs);
  j["rhs"] = bound_json(c.rhs);
  j["relation"] = c.relation;
  j["equality"] = c.equality;
  if (!c.witness.empty()) j["input"] = c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json scan_json(const scan::Report& r) {
  Json rows = Json::array();
  for (const auto& c : r.cells) {
    Json row;
    row["a"] = c.a;
    if (!c.b.empty()) row["b"] = c.b;
    if (c.alpha) row["alpha"] = rat_json(*c.alpha);
    if (c.beta) row["beta"] = rat_json(*c.beta);
    Json checks = Json::array();
    for (const auto& o : c.outcomes) checks.push_back(check_json(o));
    row["checks"] = checks;
    rows.push_back(row);
  }
  Json summary;
  summary["cells"] = r.cells.size();
  summary["holds"] = r.count(Verdict::holds);
  summary["fails"] = r.count(Verdict::fails);
  summary["indeterminate"] = r.count(Verdict::indeterminate);
  summary["equality"] = r.equalities();
  if (auto g = r.min_gap()) {
    summary["min_gap"] = rat_json(g->first);
    summary["min_gap_at"] = r.cells[g->second].a;
  }
  Json j;
  j["scan"] = r.family;
  j["check"] = r.check;
  j["n"] = r.n;
  j["max_exp"] = r.max_exp;
  j["rows"] = rows;
  j["summary"] = summary;
  return j;
}

Json polyhedron_json(const newton::NewtonPolyhedron& P, const newton::Caps& caps) {
  auto point = [](const auto& coords) {
    Json a = Json::array();
    for (const auto& x : coords) a.push_back(rat_json(Rat(x)));
    return a;
  };
  Json pts = Json::array(), facets = Json::array(), verts = Json::array();
  for (const auto& v : P.points()) {
    std::vector<Rat> q;
    for (std::size_t i = 0; i < v.size(); ++i) q.emplace_back(v[i]);
    pts.push_back(point(q));
  }
  for (const auto& f : P.facets(caps)) facets.push_back({{"normal", point(f.normal)}, {"offset", rat_json(f.offset)}});
  for (const auto& v : P.vertices(caps)) verts.push_back(point(v));
  return {{"n", P.dim()}, {"points", pts}, {"facets", facets}, {"vertices", verts}};
}

}  // namespace detail

std::string emit_json(const InvariantReport& r) { return detail::report_json(r).dump(); }
std::string emit_json(const CheckOutcome& c) { return detail::check_json(c).dump(); }

std::string emit_json(const std::vector<CheckOutcome>& cs) {
  detail::Json a = detail::Json::array();
  for (const auto& c : cs) a.push_back(detail::check_json(c));
  return a.dump();
}

std::string emit_json(const scan::Report& r) { return detail::scan_json(r).dump(); }

std::string emit_json(const newton::NewtonPolyhedron& P, const newton::Caps& caps) {
  return detail::polyhedron_json(P, caps).dump();
}

}  // namespace singulact
