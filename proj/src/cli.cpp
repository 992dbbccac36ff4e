#include "alexkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include "alexkit/alexander.hpp"
#include "alexkit/burau.hpp"
#include "alexkit/errors.hpp"
#include "alexkit/tangle.hpp"

namespace alexkit::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kVerbs = {"alexander", "burau",   "fiber",   "strata",  "virtual-class", "module",
                                         "ring",      "span",    "closure", "catalog", "selftest"};

struct Request {
  std::string verb;
  std::string format;
  ScalarField field;
  std::string input;
};

struct Result {
  Json json;
  std::string text;
};

ScalarField parse_t(const std::string& spec) {
  static const std::regex rational(R"(([+-]?\d+)(?:/(\d+))?)");
  static const std::regex complex(R"(([+-]?\d+(?:\.\d+)?)([+-]\d+(?:\.\d+)?)i)");
  if (spec == "generic") return GenericT{};
  std::smatch m;
  if (std::regex_match(spec, m, rational)) {
    Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    Integer den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw ParseError(0, "zero denominator in --t " + spec);
    Rational t(num, den);
    t.canonicalize();
    return fixed_rational(t);
  }
  if (std::regex_match(spec, m, complex)) return fixed_complex(Complex(std::stod(m[1].str()), std::stod(m[2].str())));
  throw ParseError(0, "--t expects 'generic', 'p/q' or 'a+bi', got '" + spec + "'");
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

std::string pretty(const LaurentPoly& p) { return p.to_string(TermOrder::Descending); }

Json delta_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : p.terms()) coeffs.push_back(Json::array({e, integer_json(c.get_num()), integer_json(c.get_den())}));
  return Json{{"coeffs", coeffs}, {"pretty", pretty(p)}};
}

Json pretty_list(const std::vector<LaurentPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(pretty(p));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void require_format(const Request& r, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (r.format == f) return;
  std::vector<std::string> names(allowed.begin(), allowed.end());
  throw ValidationError("verb '" + r.verb + "' accepts formats " + join(names, ", ") + ", not '" + r.format + "'");
}

CrossingList diagram(const Request& r) {
  require_format(r, {"braid", "xcode", "pd"});
  if (r.format == "braid") return braid_closure(parse_braid(r.input));
  if (r.format == "xcode") return parse_crossing_list(r.input);
  return parse_pd(r.input);
}

AlexanderData module_of(const Request& r) {
  if (r.format == "dsl") {
    const auto e = parse_tangle(r.input);
    if (!e.source().empty() || !e.target().empty())
      throw ValidationError("the tangle must be closed, got " + render_object(e.source()) + " -> " +
                            render_object(e.target()));
    const auto s = boundary_system(e);
    return module_data(s.equations, s.arc_count);
  }
  return alexander_data(alexander_matrix(diagram(r)));
}

Json base_json(const Request& r) { return Json{{"verb", r.verb}, {"input", r.input}}; }

Result do_alexander(const Request& r) {
  Result res{base_json(r), {}};
  LaurentPoly delta;
  if (r.format == "dsl") {
    delta = closed_tangle_alexander(parse_tangle(r.input));
    res.json["delta"] = delta_json(delta);
  } else {
    const auto d = diagram(r);
    delta = alexander_data(alexander_matrix(d)).delta();
    res.json["delta"] = delta_json(delta);
    if (d.component_count() > 1) res.json["delta_multi"] = multivariable_alexander(d).to_string();
  }
  res.text = pretty(delta);
  return res;
}

Result do_burau(const Request& r) {
  require_format(r, {"braid"});
  const auto b = parse_braid(r.input);
  const auto m = burau_unreduced(b);
  Result res{base_json(r), {}};
  res.json["delta"] = delta_json(closure_alexander(b));
  Json rows = Json::array();
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(pretty(m(i, j)));
    rows.push_back(row);
    lines.push_back("[" + join(row, ", ") + "]");
  }
  res.json["matrix"] = rows;
  res.text = join(lines, "\n");
  return res;
}

Result do_fiber(const Request& r) {
  int dim = 0;
  if (r.format == "dsl")
    dim = static_cast<int>(mid_dim(tangle_linear_system(parse_tangle(r.input), r.field)));
  else
    dim = fibre_dimension(alexander_matrix(diagram(r)), r.field);
  Result res{base_json(r), std::to_string(dim)};
  res.json["fiber_dim"] = dim;
  return res;
}

Result do_strata(const Request& r) {
  const auto data = module_of(r);
  Result res{base_json(r), {}};
  res.json["delta"] = delta_json(data.delta());
  res.json["delta_k"] = pretty_list(data.delta_k);
  Json strata = Json::array();
  std::vector<std::string> lines;
  for (const auto& [k, count] : data.strata) {
    strata.push_back(Json::array({k, count}));
    lines.push_back("S^" + std::to_string(k) + ": " + std::to_string(count));
  }
  res.json["strata"] = strata;
  res.text = lines.empty() ? "none" : join(lines, "\n");
  return res;
}

Result do_virtual_class(const Request& r) {
  const auto d = diagram(r);
  if (d.component_count() != 1) throw UseMultivariableRoute();
  const auto v = virtual_class(alexander_data(alexander_matrix(d)));
  Result res{base_json(r), v.to_string()};
  Json coeffs = Json::array();
  for (const auto& [e, c] : v.coefficients) coeffs.push_back(Json::array({e, c}));
  res.json["virtual_class"] = coeffs;
  return res;
}

Result do_module(const Request& r) {
  const auto data = module_of(r);
  Result res{base_json(r), {}};
  res.json["delta"] = delta_json(data.delta());
  res.json["delta_k"] = pretty_list(data.delta_k);
  res.json["invariant_factors"] = pretty_list(data.invariant_factors);
  std::vector<std::string> factors, deltas;
  for (const auto& p : data.invariant_factors) factors.push_back(pretty(p));
  for (const auto& p : data.delta_k) deltas.push_back(pretty(p));
  res.text = "invariant factors: " + (factors.empty() ? std::string("none") : join(factors, ", ")) +
             "\ndelta_k: " + join(deltas, ", ");
  return res;
}

Result do_ring(const Request& r) {
  const auto p = ring_presentation(diagram(r));
  const auto relations = p.rendered();
  std::vector<std::string> gens;
  for (int i = 1; i <= p.generator_count; ++i) gens.push_back("a" + std::to_string(i));
  Result res{base_json(r), {}};
  res.json["generators"] = p.generator_count;
  res.json["relations"] = relations;
  res.text = "generators: " + join(gens, ", ") + "\nrelations:" + (relations.empty() ? " none" : "");
  for (const auto& rel : relations) res.text += "\n  " + rel;
  return res;
}

Result do_span(const Request& r) {
  require_format(r, {"dsl", "braid"});
  const auto e = r.format == "dsl" ? parse_tangle(r.input) : braid_tangle(parse_braid(r.input));
  const auto s = evaluate_tangle(e, r.field);
  Result res{base_json(r), {}};
  res.json["span"] = Json{{"src", src_dim(s)}, {"mid", mid_dim(s)}, {"tgt", tgt_dim(s)}};
  res.text = std::to_string(src_dim(s)) + " <- " + std::to_string(mid_dim(s)) + " -> " + std::to_string(tgt_dim(s));
  return res;
}

Result do_closure(const Request& r) {
  require_format(r, {"braid"});
  const auto code = render_crossing_list(braid_closure(parse_braid(r.input)));
  Result res{base_json(r), code};
  res.json["closure"] = code;
  return res;
}

Result do_catalog(const Request& r) {
  std::vector<const CatalogEntry*> entries;
  if (r.input.empty())
    for (const auto& e : catalog()) entries.push_back(&e);
  else
    entries.push_back(&catalog_lookup(r.input));
  Result res{base_json(r), {}};
  Json list = Json::array();
  std::vector<std::string> lines;
  for (const auto* e : entries) {
    list.push_back(Json{{"name", e->name},
                        {"braid", render_braid(e->braid)},
                        {"xcode", render_crossing_list(e->crossings)},
                        {"delta", delta_json(e->expected_delta)}});
    lines.push_back(e->name + "  " + render_braid(e->braid) + "  " + pretty(e->expected_delta));
  }
  res.json["catalog"] = list;
  res.text = join(lines, "\n");
  return res;
}

Result compute(const Request& r) {
  static const std::map<std::string, std::function<Result(const Request&)>> handlers = {
      {"alexander", do_alexander}, {"burau", do_burau},   {"fiber", do_fiber}, {"strata", do_strata},
      {"virtual-class", do_virtual_class}, {"module", do_module}, {"ring", do_ring}, {"span", do_span},
      {"closure", do_closure},     {"catalog", do_catalog}};
  if (r.verb != "catalog" && r.input.empty()) throw ValidationError("missing input");
  return handlers.at(r.verb)(r);
}

int exit_code_of(const Error& e) { return e.family() == Error::Family::Input ? kInputError : kDomainError; }

// Runs one request; returns the exit code and fills `res` or `message`.
int attempt(const Request& r, Result& res, std::string& message) {
  try {
    res = compute(r);
    return kOk;
  } catch (const Error& e) {
    message = e.what();
    return exit_code_of(e);
  }
}

int run_batch(const Request& base, const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return kInputError;
  }
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    Request r = base;
    r.input = line;
    Result res;
    std::string message;
    const int code = attempt(r, res, message);
    if (code == kOk) {
      out << res.json.dump() << "\n";
    } else {
      Json failure = base_json(r);
      failure["error"] = message;
      failure["exit"] = code;
      out << failure.dump() << "\n";
    }
    worst = std::max(worst, code);
  }
  return worst;
}

std::string check_line(const std::string& route, const std::function<LaurentPoly()>& compute_delta,
                       const LaurentPoly& expected, bool& ok) {
  try {
    const auto got = compute_delta();
    if (got == expected) return {};
    ok = false;
    return route + " gave " + pretty(got);
  } catch (const std::exception& e) {
    ok = false;
    return route + " failed: " + e.what();
  }
}

}  // namespace

bool run_selftest(const std::vector<CatalogEntry>& entries, std::ostream& out) {
  std::size_t checks = 0, failures = 0;
  for (const auto& entry : entries) {
    const LaurentPoly expected = entry.expected_delta.is_zero() ? entry.expected_delta : normalize_unit(entry.expected_delta);
    const std::vector<std::pair<std::string, std::function<LaurentPoly()>>> routes = {
        {"fox", [&] { return alexander_data(alexander_matrix(entry.crossings)).delta(); }},
        {"fox-closure", [&] { return alexander_data(alexander_matrix(braid_closure(entry.braid))).delta(); }},
        {"burau", [&] { return closure_alexander(entry.braid); }},
        {"tangle", [&] { return closed_tangle_alexander(braid_closure_tangle(entry.braid)); }},
    };
    bool ok = true;
    std::vector<std::string> problems;
    for (const auto& [name, route] : routes) {
      ++checks;
      auto problem = check_line(name, route, expected, ok);
      if (!problem.empty()) problems.push_back(std::move(problem));
    }
    if (ok) {
      out << "PASS " << entry.name << "  " << pretty(expected) << "\n";
    } else {
      ++failures;
      out << "FAIL " << entry.name << ": expected " << pretty(expected) << "; " << join(problems, "; ") << "\n";
    }
  }
  out << "selftest: " << entries.size() << " entries, " << checks << " checks, " << failures << " failed\n";
  return failures == 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander invariants of knots, links and tangles", "alexkit"};
  std::string verb, format = "braid", t_spec = "generic", file;
  std::vector<std::string> inline_input;
  bool json = false;
  app.add_option("verb", verb, "Computation to run")->required()->check(CLI::IsMember(kVerbs));
  auto* input_opt = app.add_option("input", inline_input, "Inline input text");
  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"braid", "xcode", "pd", "dsl"}))
      ->capture_default_str();
  app.add_option("--t", t_spec, "Parameter: generic, p/q or a+bi")->capture_default_str();
  app.add_flag("--json", json, "Render JSON");
  app.add_option("--file", file, "Batch file, one input per line")->excludes(input_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (verb == "selftest") return run_selftest(catalog(), out) ? kOk : kFailure;

  Request r;
  r.verb = verb;
  r.format = format;
  try {
    r.field = parse_t(t_spec);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_of(e);
  }
  if (!file.empty()) return run_batch(r, file, out, err);

  r.input = join(inline_input, " ");
  Result res;
  std::string message;
  const int code = attempt(r, res, message);
  if (code != kOk) {
    err << "error: " << message << "\n";
    return code;
  }
  out << (json ? res.json.dump() : res.text) << "\n";
  return kOk;
}

}  // namespace alexkit::cli
