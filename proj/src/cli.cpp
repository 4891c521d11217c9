#include "jetworks/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetworks/curves.hpp"
#include "jetworks/error.hpp"
#include "jetworks/jet.hpp"
#include "jetworks/joris.hpp"
#include "jetworks/numsg.hpp"
#include "jetworks/probe.hpp"
#include "jetworks/taxonomy.hpp"

namespace jetworks::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace tx = taxonomy;

// Raised for a closure that derives both a fact and its negation.
struct Contradiction {
  std::string what;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InconsistentPair:
    case ErrorKind::InconsistentSamples:
    case ErrorKind::ExactRootUnavailable:
    case ErrorKind::NoRealRoot:
      return 2;
    case ErrorKind::ResourceLimit:
      return 3;
    default:
      return 1;
  }
}

int max_degree() {
  if (const char* env = std::getenv("JETWORKS_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > 100000)
      throw Error(ErrorKind::InvalidArgument, "JETWORKS_MAX_DEGREE must be a non-negative integer");
    return static_cast<int>(v);
  }
  return curves::CurveOptions{}.max_degree;
}

Json facts_json(const tx::FactSet& f) {
  Json j = Json::object();
  for (auto p : tx::all_predicates()) j[std::string(tx::to_string(p))] = std::string(to_string(f[p]));
  return j;
}

Json root_json(const RealRoot& r) {
  if (r.exact()) return to_string(r.lo);
  return Json::array({to_string(r.lo), to_string(r.hi)});
}

Json three_valued_json(const curves::ThreeValued& v) {
  Json j{{"value", std::string(to_string(v.value))}, {"witness", Json::array()}, {"note", v.note}};
  for (const auto& r : v.witness) j["witness"].push_back(root_json(r));
  return j;
}

void require_consistent(const tx::Closure& c) {
  if (c.contradiction) throw Contradiction{c.conflict};
}

// Plain-text rendering: one "key  value" line per leaf, nested keys dotted.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); })) {
    std::string line;
    for (const auto& e : j) line += (line.empty() ? "" : ", ") + scalar(e);
    rows.emplace_back(prefix, line);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, scalar(j));
  }
}

void emit(std::ostream& out, const Json& j, bool text) {
  if (!text) {
    out << j.dump() << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) {
    if (k.empty()) {
      out << v << '\n';
    } else {
      out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    }
  }
}

Json jet_recover(unsigned long m, unsigned long n, const std::string& a_text, const std::string& b_text,
                 std::optional<std::size_t> order) {
  Jet a = parse_jet(a_text), b = parse_jet(b_text);
  const std::size_t k = order.value_or(std::max(a.order(), b.order()));
  a = a.resized(k);
  b = b.resized(k);
  const auto rec = joris::recover_jet(a, b, m, n);
  Json coeffs = Json::array();
  const Jet g = rec.jet.truncated(rec.guaranteed_order);
  for (const auto& c : g.coeffs()) coeffs.push_back(to_string(c));
  return {{"coeffs", coeffs}, {"guaranteed_order", rec.guaranteed_order}};
}

Json curve_classify(const std::string& x, const std::string& y, const std::string& domain) {
  const int cap = max_degree();
  curves::PlaneCurve c{parse_poly(x, cap), parse_poly(y, cap),
                       domain.empty() ? Interval::real_line() : parse_interval(domain)};
  const auto cls = tx::classify_curve(c, curves::CurveOptions{cap});
  require_consistent(cls.closure);
  Json evidence{{"immersion", three_valued_json(cls.immersion)},
                {"injectivity", three_valued_json(cls.injectivity)}};
  if (cls.monomial) evidence["monomial"] = Json::array({cls.monomial->first, cls.monomial->second});
  return {{"x", format_poly(c.x)},
          {"y", format_poly(c.y)},
          {"domain", format_interval(c.domain)},
          {"facts", facts_json(cls.closure.facts)},
          {"evidence", evidence}};
}

Json catalog_list() {
  Json entries = Json::array(), prose = Json::array();
  for (const auto& e : tx::catalog_entries()) entries.push_back({{"name", e.name}, {"description", e.description}});
  for (const auto& e : tx::prose_entries()) prose.push_back({{"name", e.name}, {"description", e.description}});
  return {{"entries", entries}, {"prose_only", prose}};
}

Json catalog_check(const std::string& name, bool& passed) {
  const auto* entry = tx::find_entry(name);
  if (!entry) throw Error(ErrorKind::InvalidArgument, "unknown catalog entry '" + name + "'");
  const auto chk = tx::check_entry(*entry);
  require_consistent(chk.closure);
  passed = chk.passed();
  return {{"name", chk.name},
          {"passed", passed},
          {"facts", facts_json(chk.closure.facts)},
          {"expected", facts_json(entry->expected)},
          {"citations", entry->citations},
          {"evidence", chk.evidence}};
}

Json report_json(const probe::SmoothnessReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"order", row.order},
                    {"max_abs_estimate", row.max_abs_estimate},
                    {"blowup", row.blowup},
                    {"contraction", row.contraction},
                    {"location", row.location}});
  Json j{{"verdict", r.verdict()}, {"smooth", r.smooth}, {"order", r.order}};
  if (!r.smooth) j["location"] = r.location;
  j["rows"] = rows;
  return j;
}

Json run_probe(const std::string& path, unsigned m, unsigned n, unsigned max_order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  const auto data = probe::read_csv(in);
  const auto rec = probe::recover_pointwise(data.gm, data.gn, m, n);
  const auto rep = probe::estimate_derivatives(rec.g, max_order);
  return {{"recovery",
           {{"points", rec.g.size()}, {"root_exponent", rec.root_exponent}, {"residual", rec.residual}}},
          {"report", report_json(rep)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact jets, semigroups, plane curves and smoothness probes", "jetworks"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  std::function<Json()> action;
  int status = 0;

  auto* jet = app.add_subcommand("jet", "Jet reconstruction")->require_subcommand(1);
  auto* recover = jet->add_subcommand("recover", "Recover the jet of g from jets of g^m and g^n");
  unsigned long jm = 0, jn = 0;
  std::string ja, jb;
  std::optional<std::size_t> jorder;
  recover->add_option("--m", jm)->required();
  recover->add_option("--n", jn)->required();
  recover->add_option("--a", ja, "Coefficients of g^m, comma separated")->required();
  recover->add_option("--b", jb, "Coefficients of g^n, comma separated")->required();
  recover->add_option("--order", jorder, "Truncation order K");
  recover->callback([&] { action = [&] { return jet_recover(jm, jn, ja, jb, jorder); }; });

  auto* sg = app.add_subcommand("semigroup", "Numerical semigroup <m, n>")->require_subcommand(1);
  std::int64_t sm = 0, sn = 0, sr = 0;
  auto* bez = sg->add_subcommand("bezout", "a*m + b*n = 1 with a < 0 < b");
  auto* frob = sg->add_subcommand("frobenius", "Frobenius number");
  auto* repr = sg->add_subcommand("represent", "Write r as c1*m + c2*n");
  for (auto* s : {bez, frob, repr}) {
    s->add_option("m", sm)->required();
    s->add_option("n", sn)->required();
  }
  repr->add_option("r", sr)->required();
  bez->callback([&] {
    action = [&] {
      const auto p = numsg::bezout_neg_pos(sm, sn);
      return Json{{"a", p.a}, {"b", p.b}, {"m", p.m}, {"n", p.n}};
    };
  });
  frob->callback([&] { action = [&] { return Json(numsg::frobenius(sm, sn)); }; });
  repr->callback([&] {
    action = [&] {
      if (sr >= numsg::paper_threshold(sm, sn)) {
        const auto w = numsg::represent_paper(sm, sn, sr);
        return Json{{"r", w.r}, {"representable", true}, {"c1", w.c1}, {"c2", w.c2}, {"method", "bezout"}};
      }
      if (const auto w = numsg::represent_search(sm, sn, sr))
        return Json{{"r", w->r}, {"representable", true}, {"c1", w->c1}, {"c2", w->c2}, {"method", "search"}};
      return Json{{"r", sr}, {"representable", false}};
    };
  });

  auto* curve = app.add_subcommand("curve", "Polynomial plane curves")->require_subcommand(1);
  auto* classify_c = curve->add_subcommand("classify", "Immersion and injectivity of t -> (x(t), y(t))");
  std::string cx, cy, cdom;
  classify_c->add_option("--x", cx)->required();
  classify_c->add_option("--y", cy)->required();
  classify_c->add_option("--domain", cdom, "LO..HI, default the real line");
  classify_c->callback([&] { action = [&] { return curve_classify(cx, cy, cdom); }; });

  auto* classify = app.add_subcommand("classify", "Taxonomy shortcuts")->require_subcommand(1);
  auto* mono = classify->add_subcommand("monomial", "t -> (t^A, t^B)");
  unsigned ma = 0, mb = 0;
  mono->add_option("A", ma)->required()->check(CLI::PositiveNumber);
  mono->add_option("B", mb)->required()->check(CLI::PositiveNumber);
  mono->callback([&] {
    action = [&] {
      const tx::Closure c = tx::classify_monomial(ma, mb);
      require_consistent(c);
      return Json{{"a", ma}, {"b", mb}, {"facts", facts_json(c.facts)}};
    };
  });

  auto* catalog = app.add_subcommand("catalog", "Worked examples")->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List the entries");
  auto* check = catalog->add_subcommand("check", "Re-derive one entry");
  std::string cname;
  check->add_option("NAME", cname)->required();
  list->callback([&] { action = [&] { return catalog_list(); }; });
  check->callback([&] {
    action = [&] {
      bool passed = false;
      Json j = catalog_check(cname, passed);
      if (!passed) status = 2;
      return j;
    };
  });

  auto* pr = app.add_subcommand("probe", "Recover g from sampled g^m, g^n and estimate its smoothness");
  std::string ppath;
  unsigned pm = 0, pn = 0, porder = 4;
  pr->add_option("--input", ppath, "CSV with header t,gm,gn")->required();
  pr->add_option("--m", pm)->required();
  pr->add_option("--n", pn)->required();
  pr->add_option("--max-order", porder, "Highest derivative order, at most 6");
  pr->callback([&] { action = [&] { return run_probe(ppath, pm, pn, porder); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return 1;
  }

  try {
    const Json result = action();
    emit(out, result, format == "text");
    return status;
  } catch (const Contradiction& c) {
    err << "error: CONTRADICTION: " << c.what << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace jetworks::cli
