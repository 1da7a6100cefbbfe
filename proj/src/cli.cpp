#include "singulact/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <thread>

#include "json_build.hpp"
#include "singulact/errors.hpp"
#include "singulact/invariants.hpp"
#include "singulact/parse.hpp"
#include "singulact/report_json.hpp"
#include "singulact/scan.hpp"

namespace singulact::cli {
namespace {

struct Options {
  std::string vars;
  std::string poly;
  std::string ideal;
  std::string with;
  std::string var;
  bool json = false;
  bool certificate = false;
  bool include_f = false;
  std::optional<unsigned> ordinary;
  std::optional<std::size_t> max_cells;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t n = 2;
  unsigned max_exp = 4;
  std::string check;
  std::string name;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int invariant(const std::string& cmd);
  int check();
  int newton();
  int scan();
  int registry();

 private:
  const parse::VarTable& vars() {
    if (!vars_) {
      if (o_.vars.empty()) throw InputError("--vars is required");
      vars_ = parse::VarTable::from_list(o_.vars);
    }
    return *vars_;
  }
  Poly poly(const std::string& text, const char* flag) {
    if (text.empty()) throw InputError(std::string(flag) + " is required");
    return parse::parse_polynomial(text, vars());
  }
  MonomialIdeal ideal(const std::string& text, const char* flag) {
    if (text.empty()) throw InputError(std::string(flag) + " is required");
    std::vector<std::string> warnings;
    auto a = parse::parse_monomial_ideal(text, vars(), &warnings);
    for (const auto& w : warnings) err_ << "warning: " << w << '\n';
    return a;
  }
  std::string echo(const Poly& f) { return parse::format_polynomial(f, vars()); }
  std::string echo(const MonomialIdeal& a) { return parse::format_ideal(a, vars()); }

  void print(const InvariantReport& r);
  int finish(const std::vector<CheckOutcome>& cs);

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<parse::VarTable> vars_;
};

std::string format_bound(const Bound& b) {
  if (b.exact()) return parse::format_rat(b.lo);
  return "[" + parse::format_rat(b.lo) + ", " + parse::format_rat(b.hi) + "]";
}

std::string format_vec(const std::vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string format_vec(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string check_line(const CheckOutcome& c) {
  std::string body = (c.lhs.exact() && c.rhs.exact()) || c.note.empty()
                         ? format_bound(c.lhs) + " " + c.relation + " " + format_bound(c.rhs)
                         : c.note;
  std::string line = to_string(c.verdict) + ": " + body;
  if (c.equality) line += " (equality)";
  return line;
}

int exit_for(const std::vector<CheckOutcome>& cs) {
  for (const auto& c : cs)
    if (c.verdict != Verdict::holds) return kCheckFailed;
  return kOk;
}

void Session::print(const InvariantReport& r) {
  if (o_.json) {
    out_ << emit_json(r) << '\n';
    return;
  }
  out_ << to_string(r.kind) << " = " << parse::format_rat(r.value) << '\n';
  if (!r.assumes.empty()) {
    out_ << "assumes: ";
    for (std::size_t i = 0; i < r.assumes.size(); ++i) out_ << (i ? ", " : "") << r.assumes[i];
    out_ << '\n';
  }
  if (r.certificate) out_ << "certificate: u = " << format_vec(r.certificate->u) << ", ord = " << r.certificate->ord << '\n';
}

int Session::finish(const std::vector<CheckOutcome>& cs) {
  if (o_.json) {
    out_ << (cs.size() == 1 ? emit_json(cs.front()) : emit_json(cs)) << '\n';
  } else {
    for (const auto& c : cs) out_ << check_line(c) << '\n';
  }
  return exit_for(cs);
}

int Session::invariant(const std::string& cmd) {
  const auto caps = newton::Caps::from_env();
  if (cmd == "lct") {
    auto a = ideal(o_.ideal, "--ideal");
    auto r = o_.certificate ? lct_monomial_dual(a, caps) : lct_monomial(a);
    r.input = echo(a);
    print(r);
  } else if (cmd == "beta") {
    if (o_.ordinary) {
      print(beta_ordinary(vars().size(), *o_.ordinary));
      return kOk;
    }
    auto f = poly(o_.poly, "--poly");
    auto r = beta(f, o_.include_f);
    if (o_.certificate) {
      auto mono = monomialize(jacobian_generators(f, o_.include_f));
      if (mono.ok() && !mono.ideal->is_unit()) {
        auto dual = lct_monomial_dual(ideal_product(maximal_ideal(f.dim()), *mono.ideal), caps);
        r.certificate = dual.certificate;
      }
    }
    r.input = echo(f);
    print(r);
  } else if (cmd == "alpha") {
    auto f = poly(o_.poly, "--poly");
    auto r = alpha(f);
    r.input = echo(f);
    print(r);
  } else if (cmd == "milnor") {
    auto f = poly(o_.poly, "--poly");
    auto r = milnor(f);
    r.input = echo(f);
    print(r);
  } else {
    auto a = ideal(o_.ideal, "--ideal");
    auto r = multiplicity_report(a, caps);
    r.input = echo(a);
    print(r);
  }
  return kOk;
}

int Session::check() {
  const auto caps = newton::Caps::from_env();
  const std::string& name = o_.name;
  CheckOutcome c;
  if (name == "question1") {
    auto f = poly(o_.poly, "--poly");
    c = check_question1(f);
    c.witness = echo(f);
  } else if (name == "thm-alpha-lct") {
    auto f = poly(o_.poly, "--poly");
    auto a = ideal(o_.ideal, "--ideal");
    c = check_thm_alpha_le_lct(f, a);
    c.witness = echo(f) + " ; " + echo(a);
  } else if (name == "restriction") {
    auto f = poly(o_.poly, "--poly");
    if (o_.var.empty()) throw InputError("--var is required");
    auto i = vars().index_of(o_.var);
    if (!i) throw InputError("unknown variable '" + o_.var + "' for --var");
    c = check_restriction(f, *i);
    c.witness = echo(f) + " ; " + o_.var + " = 0";
  } else if (name == "madic") {
    auto f = poly(o_.poly, "--poly");
    auto g = poly(o_.with, "--with");
    c = check_madic(f, g);
    c.witness = echo(f) + " ; " + echo(g);
  } else if (name == "milnor-bound") {
    auto f = poly(o_.poly, "--poly");
    c = check_milnor_bound(f);
    c.witness = echo(f);
  } else if (name == "dfem") {
    auto a = ideal(o_.ideal, "--ideal");
    c = check_dfem(a, caps);
    c.witness = echo(a);
  } else if (name == "minkowski") {
    auto a = ideal(o_.ideal, "--ideal");
    auto b = ideal(o_.with, "--with");
    c = check_minkowski(a, b, caps);
    c.witness = echo(a) + " ; " + echo(b);
  } else {
    throw InputError("unknown check '" + name +
                     "'; expected question1, thm-alpha-lct, restriction, madic, milnor-bound, dfem, minkowski");
  }
  return finish({c});
}

int Session::newton() {
  const auto caps = newton::Caps::from_env();
  MonomialIdeal a = !o_.ideal.empty() ? ideal(o_.ideal, "--ideal")
                    : !o_.poly.empty() ? support_ideal(poly(o_.poly, "--poly"))
                                       : throw InputError("--ideal or --poly is required");
  auto P = newton::build(a);
  if (o_.json) {
    out_ << emit_json(P, caps) << '\n';
    return kOk;
  }
  out_ << "points:";
  for (const auto& v : P.points()) out_ << ' ' << v.str();
  out_ << "\nfacets:\n";
  for (const auto& f : P.facets(caps)) out_ << "  " << format_vec(f.normal) << " . v >= " << f.offset << '\n';
  out_ << "vertices:";
  for (const auto& v : P.vertices(caps)) out_ << ' ' << format_vec(v);
  out_ << '\n';
  return kOk;
}

int Session::scan() {
  scan::Limits limits{o_.max_cells, o_.threads};
  scan::Report rep;
  if (o_.name == "diagonal") {
    rep = scan::scan_diagonal(o_.n, o_.max_exp, o_.check.empty() ? "question1" : o_.check, limits);
  } else if (o_.name == "monomial-pairs") {
    rep = scan::scan_monomial_pairs(o_.n, o_.max_exp, o_.check.empty() ? "minkowski" : o_.check, limits);
  } else {
    throw InputError("unknown scan family '" + o_.name + "'; expected diagonal or monomial-pairs");
  }
  for (const auto& w : rep.warnings) err_ << "warning: " << w << '\n';

  if (o_.json) {
    out_ << emit_json(rep) << '\n';
  } else {
    for (const auto& c : rep.cells) {
      out_ << "a=" << format_vec(c.a);
      if (!c.b.empty()) out_ << " b=" << format_vec(c.b);
      if (c.alpha) out_ << " alpha=" << parse::format_rat(*c.alpha);
      if (c.beta) out_ << " beta=" << parse::format_rat(*c.beta);
      for (const auto& o : c.outcomes) out_ << " | " << check_line(o);
      out_ << '\n';
    }
    out_ << "summary: cells=" << rep.cells.size() << " holds=" << rep.count(Verdict::holds)
         << " fails=" << rep.count(Verdict::fails) << " indeterminate=" << rep.count(Verdict::indeterminate)
         << " equality=" << rep.equalities();
    if (auto g = rep.min_gap()) out_ << " min_gap=" << g->first << " at a=" << format_vec(rep.cells[g->second].a);
    out_ << '\n';
  }
  return rep.count(Verdict::holds) == rep.cells.size() ? kOk : kCheckFailed;
}

int Session::registry() {
  auto checks = registry_question1();
  if (o_.json) {
    detail::Json entries = detail::Json::array();
    for (const auto& kv : known_values()) {
      auto j = detail::report_json(registry_report(kv));
      j["source"] = kv.source;
      entries.push_back(j);
    }
    detail::Json checks_j = detail::Json::array();
    for (const auto& c : checks) checks_j.push_back(detail::check_json(c));
    out_ << detail::Json{{"entries", entries}, {"checks", checks_j}}.dump() << '\n';
  } else {
    for (const auto& kv : known_values())
      out_ << kv.description << ": " << to_string(kv.kind) << " = " << kv.value << " (registry; " << kv.source
           << ")\n";
    for (const auto& c : checks) out_ << c.witness << ": " << check_line(c) << '\n';
  }
  return exit_for(checks);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact hypersurface-singularity invariants", "singulact"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--vars", o.vars, "Comma-separated variable names, in coordinate order");
    sub->add_flag("--json", o.json, "Emit JSON");
  };
  auto poly_opt = [&](CLI::App* sub) { sub->add_option("--poly", o.poly, "Polynomial expression"); };
  auto ideal_opt = [&](CLI::App* sub) { sub->add_option("--ideal", o.ideal, "Comma-separated monomial generators"); };

  auto* lct = app.add_subcommand("lct", "Log canonical threshold of a monomial ideal");
  common(lct);
  ideal_opt(lct);
  lct->add_flag("--certificate", o.certificate, "Report the minimizing facet normal");

  auto* beta_c = app.add_subcommand("beta", "beta = lct(m * J'_f)");
  common(beta_c);
  poly_opt(beta_c);
  beta_c->add_flag("--include-f", o.include_f, "Use J_f = (f, df/dx_i) instead of J'_f");
  beta_c->add_flag("--certificate", o.certificate, "Report the minimizing facet normal");
  beta_c->add_option("--ordinary", o.ordinary, "n / d at an ordinary singularity of multiplicity d");

  auto* alpha_c = app.add_subcommand("alpha", "Minimal exponent");
  common(alpha_c);
  poly_opt(alpha_c);

  auto* milnor_c = app.add_subcommand("milnor", "Milnor number");
  common(milnor_c);
  poly_opt(milnor_c);

  auto* mult = app.add_subcommand("mult", "Hilbert-Samuel multiplicity of a monomial ideal");
  common(mult);
  ideal_opt(mult);

  auto* newton_c = app.add_subcommand("newton", "Points, facets and vertices of the Newton polyhedron");
  common(newton_c);
  ideal_opt(newton_c);
  poly_opt(newton_c);

  auto* check = app.add_subcommand("check", "Verify an inequality");
  common(check);
  check->add_option("name", o.name, "question1|thm-alpha-lct|restriction|madic|milnor-bound|dfem|minkowski")
      ->required();
  poly_opt(check);
  ideal_opt(check);
  check->add_option("--with", o.with, "Second operand (madic: polynomial, minkowski: ideal)");
  check->add_option("--var", o.var, "Variable set to zero (restriction)");

  auto* scan_c = app.add_subcommand("scan", "Exhaustive grid scan");
  scan_c->add_option("family", o.name, "diagonal|monomial-pairs")->required();
  scan_c->add_option("--n", o.n, "Number of variables");
  scan_c->add_option("--max-exp", o.max_exp, "Largest exponent");
  scan_c->add_option("--check", o.check, "Check run on every cell");
  scan_c->add_option("--max-cells", o.max_cells, "Override the default grid caps (at most 100000 cells)");
  scan_c->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  scan_c->add_flag("--json", o.json, "Emit JSON");

  auto* registry_c = app.add_subcommand("registry", "Stated values outside the computable classes");
  registry_c->add_flag("--json", o.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Session s(o, out, err);
  try {
    auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    if (cmd == "check") return s.check();
    if (cmd == "newton") return s.newton();
    if (cmd == "scan") return s.scan();
    if (cmd == "registry") return s.registry();
    return s.invariant(cmd);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnsupportedClass& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace singulact::cli
