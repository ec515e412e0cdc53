// weyl-cocenter: batch front end for the weylcc library.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylcc/conjmin.hpp"
#include "weylcc/hecke.hpp"
#include "weylcc/newton.hpp"

using namespace weylcc;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kCap = 3, kSplit = 4 };

struct Options {
  std::string type;
  std::string twist = "all";
  std::string conj;
  int max_len = 4;
  int radius = 6;
  std::size_t cap = 1'000'000;
  std::uint64_t seed = 0;
  int trials = 20;
  std::string format = "text";
  bool strict = false;
  bool finite = false;
  std::string out;
  std::vector<std::string> elements;
  std::string suite;
};

struct Report {
  json results = json::array();
  json failures = json::array();
  std::vector<std::string> text;
  bool split = false;
};

struct Context {
  Options opts;
  std::unique_ptr<AffineGroup> g;
  SearchLimits limits;
  ConjFlavor flavor = ConjFlavor::W;
};

std::string strip_tilde(std::string label) {
  if (!label.empty() && label.back() == '~') label.pop_back();
  return label;
}

json rationals(const QVec& v, int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(to_string(v[i]));
  return a;
}

json integers(const IVec& v, int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(v[i]);
  return a;
}

std::string join(const json& a) {
  std::string s = "[";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ",";
    s += a[k].is_string() ? a[k].get<std::string>() : a[k].dump();
  }
  return s + "]";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

ExtAffineElement parse_arg(const Context& c, const std::string& text) { return parse_element(*c.g, text); }

json newton_json(const AffineGroup& g, const ExtAffineElement& x) {
  const NewtonData nd = newton_point(g, x);
  const StraightInvariant inv = straight_invariant(g, x);
  json j;
  j["nu"] = rationals(nd.nu, g.rank());
  j["nu_bar"] = rationals(nd.nu_bar, g.rank());
  j["J"] = nd.J;
  j["kappa"] = inv.kappa;
  return j;
}

json poly_v(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.get_str();
  return j;
}

json poly_u(const LaurentPoly& p) {
  json j = json::array();
  for (const auto& c : p.in_u_basis()) j.push_back(c.get_str());
  return j;
}

// ---- commands ----

void cmd_length(Context& c, Report& r) {
  for (const auto& text : c.opts.elements) {
    const auto x = parse_arg(c, text);
    json j;
    j["element"] = format_element(*c.g, x);
    j["length"] = c.g->length(x);
    j["length_by_word"] = c.g->length_by_word(x);
    j["length_by_hyperplanes"] = c.g->length_by_hyperplanes(x);
    r.text.push_back(std::to_string(c.g->length(x)));
    r.results.push_back(j);
  }
}

void cmd_newton(Context& c, Report& r) {
  for (const auto& text : c.opts.elements) {
    const auto x = parse_arg(c, text);
    json j;
    j["element"] = format_element(*c.g, x);
    j.update(newton_json(*c.g, x));
    r.text.push_back("nu=" + join(j["nu"]) + " nu_bar=" + join(j["nu_bar"]) + " J=" + join(j["J"]) +
                     " kappa=" + join(j["kappa"]));
    r.results.push_back(j);
  }
}

void cmd_straight(Context& c, Report& r) {
  const int n = c.g->rank();
  for (const auto& text : c.opts.elements) {
    const auto x = parse_arg(c, text);
    const AffineSubspace v = fixed_space(*c.g, x);
    const FiniteOrderCertificate fo = is_finite_order(*c.g, x);
    json j;
    j["element"] = format_element(*c.g, x);
    j["length"] = c.g->length(x);
    j["two_rho_nu"] = to_string(two_rho_of_newton(*c.g, x));
    j["straight"] = is_straight(*c.g, x);
    j["superstraight"] = is_straight(*c.g, x) && is_superstraight_class(*c.g, x);
    json dirs = json::array();
    for (const auto& d : v.directions) dirs.push_back(rationals(d, n));
    j["fixed_space"] = {{"base", rationals(v.base, n)}, {"directions", dirs}};
    j["finite_order"] = fo.finite;
    std::string line = "straight=" + yes_no(j["straight"]) + " length=" + std::to_string(c.g->length(x)) +
                       " <nu,2rho>=" + j["two_rho_nu"].get<std::string>() + " fixed_space=" + join(j["fixed_space"]["base"]);
    for (const auto& d : dirs) line += "+t" + join(d);
    r.text.push_back(line);
    r.results.push_back(j);
  }
}

void cmd_reduce(Context& c, Report& r) {
  std::mt19937_64 rng(c.opts.seed);
  for (const auto& text : c.opts.elements) {
    const auto x = parse_arg(c, text);
    const Reduction red = reduce_to_min(*c.g, x, c.limits, c.opts.seed ? &rng : nullptr);
    ClassIndex index(*c.g, c.flavor, c.limits);
    const ClassKey& key = index.key_of(x);
    json path = json::array();
    std::string p;
    for (const auto& s : red.path.steps) {
      path.push_back({s.index, s.length_after});
      p += std::string(p.empty() ? "" : ", ") + "(" + std::to_string(s.index) + ", " + std::to_string(s.length_after) + ")";
    }
    json j;
    j["element"] = format_element(*c.g, x);
    j["rep"] = format_element(*c.g, red.min);
    j["min_length"] = c.g->length(red.min);
    j["path"] = path;
    j["class_rep"] = format_element(*c.g, key.rep);
    j["unconfirmed_split"] = key.unconfirmed_split;
    r.split = r.split || key.unconfirmed_split;
    r.text.push_back("rep " + j["rep"].get<std::string>() + " path [" + p + "]");
    r.results.push_back(j);
  }
}

json class_row(const AffineGroup& g, ClassIndex& index, const ClassKey& k) {
  const bool straight = index.record(k.id).straight;
  json j;
  j["rep"] = format_element(g, k.rep);
  j["min_length"] = k.min_length;
  j["nu_bar"] = rationals(k.invariant.nu_bar, g.rank());
  j["kappa"] = k.invariant.kappa;
  j["straight"] = straight;
  j["superstraight"] = straight && is_superstraight_class(g, k.rep);
  j["nice"] = is_nice_class(g, k.rep).is_nice;
  j["unconfirmed_split"] = k.unconfirmed_split;
  return j;
}

void cmd_classes(Context& c, Report& r) {
  ClassIndex index(*c.g, c.flavor, c.limits);
  for (const auto& k : index.enumerate(c.opts.max_len)) {
    json j = class_row(*c.g, index, k);
    r.split = r.split || k.unconfirmed_split;
    r.text.push_back(j["rep"].get<std::string>() + " min_length=" + std::to_string(k.min_length) +
                     " nu_bar=" + join(j["nu_bar"]) + " kappa=" + join(j["kappa"]) +
                     " straight=" + yes_no(j["straight"]) + " superstraight=" + yes_no(j["superstraight"]) +
                     " nice=" + yes_no(j["nice"]) + (k.unconfirmed_split ? " unconfirmed_split" : ""));
    r.results.push_back(j);
  }
}

void cmd_classpoly(Context& c, Report& r) {
  ClassPolynomials cp(*c.g, c.limits, c.flavor);
  for (const auto& text : c.opts.elements) {
    const auto x = parse_arg(c, text);
    const ClassPolyResult res = cp.compute(x);
    json entries = json::array();
    for (const auto& e : res.entries) {
      const std::string rep = format_element(*c.g, e.cls.rep);
      entries.push_back({{"class", rep}, {"poly_v", poly_v(e.poly)}, {"poly_u", poly_u(e.poly)}});
      r.text.push_back(rep + "\t" + e.poly.to_string());
    }
    r.split = r.split || res.unconfirmed_split;
    r.results.push_back({{"element", format_element(*c.g, x)}, {"entries", entries}, {"unconfirmed_split", res.unconfirmed_split}});
  }
}

void cmd_nice(Context& c, Report& r) {
  for (const auto& text : c.opts.elements) {
    const auto x = parse_arg(c, text);
    json j;
    j["element"] = format_element(*c.g, x);
    NiceReport rep;
    if (c.opts.finite) {
      rep = brute_force_nice_finite(*c.g, finite_minimal_conjugate(*c.g, x));
    } else {
      rep = is_nice_class(*c.g, x);
    }
    j["nice"] = rep.is_nice;
    j["method"] = rep.method;
    j["support"] = rep.witness_support;
    j["weakly_elliptic"] = rep.weakly_elliptic_verdict;
    j["hyperplane_criterion"] = rep.hyperplane_verdict ? json(*rep.hyperplane_verdict) : json(nullptr);
    j["criteria_agree"] = rep.criteria_agree;
    if (!c.opts.finite && is_straight(*c.g, x)) {
      ClassIndex index(*c.g, ConjFlavor::W, c.limits);
      j["straight_criterion"] = is_nice_straight_class(index, index.key_of(x));
    }
    if (!rep.criteria_agree) r.failures.push_back({{"element", j["element"]}, {"reason", "nice criteria disagree"}});
    r.text.push_back("nice=" + yes_no(rep.is_nice) + " method=" + rep.method + " support=" + join(j["support"]));
    r.results.push_back(j);
  }
}

// ---- verification suites ----

void fail(Report& r, const AffineGroup& g, const ExtAffineElement& x, const std::string& why) {
  r.failures.push_back({{"element", format_element(g, x)}, {"reason", why}});
}

void verify_lengths(Context& c, Report& r, std::size_t& checked) {
  for (const auto& x : c.g->elements_up_to_length(c.opts.max_len)) {
    ++checked;
    const Int l = c.g->length(x);
    if (c.g->length_by_word(x) != l || c.g->length_by_hyperplanes(x) != l) fail(r, *c.g, x, "length oracles disagree");
  }
}

void verify_straight(Context& c, Report& r, std::size_t& checked) {
  for (const auto& x : all_twisted_coxeter_elements(*c.g)) {
    ++checked;
    if (!is_straight(*c.g, x)) fail(r, *c.g, x, "twisted Coxeter element not straight");
  }
  for (const auto& x : c.g->elements_up_to_length(c.opts.max_len)) {
    ++checked;
    if (Rational(c.g->length(x)) < two_rho_of_newton(*c.g, x)) fail(r, *c.g, x, "length below <nu,2rho>");
    if (is_straight(*c.g, x) != is_straight_by_powers(*c.g, x, 12)) fail(r, *c.g, x, "power test disagrees");
  }
}

void verify_cyclic(Context& c, Report& r, std::size_t& checked) {
  ClassIndex index(*c.g, c.flavor, c.limits);
  for (const auto& k : index.enumerate(c.opts.max_len)) {
    if (!index.record(k.id).straight) continue;
    ++checked;
    r.split = r.split || k.unconfirmed_split;
    if (!verify_cyclic_shift_straight(index, k)) fail(r, *c.g, k.rep, "minimal elements not in one cyclic-shift class");
  }
}

void verify_nice(Context& c, Report& r, std::size_t& checked) {
  if (c.opts.finite) {
    for (const auto& z : finite_class_minimal_reps(*c.g)) {
      ++checked;
      if (brute_force_nice_finite(*c.g, z).is_nice != is_weakly_elliptic(*c.g, z))
        fail(r, *c.g, z, "brute force and weak ellipticity disagree");
    }
    return;
  }
  ClassIndex index(*c.g, ConjFlavor::W, c.limits);
  for (const auto& k : index.enumerate(c.opts.max_len)) {
    ++checked;
    const NiceReport rep = is_nice_class(*c.g, k.rep);
    if (!rep.criteria_agree) fail(r, *c.g, k.rep, "nice criteria disagree");
    if (index.record(k.id).straight && is_nice_straight_class(index, k) != rep.is_nice)
      fail(r, *c.g, k.rep, "straight nice criterion disagrees");
  }
}

void verify_classpoly(Context& c, Report& r, std::size_t& checked) {
  ClassPolynomials cp(*c.g, c.limits, c.flavor);
  std::uint64_t salt = 0;
  for (const auto& x : c.g->elements_up_to_length(c.opts.max_len)) {
    ++checked;
    const ClassPolyResult res = cp.compute(x);
    r.split = r.split || res.unconfirmed_split;
    const int own = cp.index().key_of(x).id;
    mpz_class total = 0;
    for (const auto& e : res.entries) {
      for (const auto& u : e.poly.in_u_basis())
        if (u < 0) fail(r, *c.g, x, "negative u-coefficient");
      if (e.poly.eval_at_one() != (e.cls.id == own ? 1 : 0)) fail(r, *c.g, x, "v=1 specialization is not the class indicator");
      total += e.poly.eval_at_one();
    }
    if (total != 1) fail(r, *c.g, x, "v=1 specialization does not sum to 1");
    if (!path_independence_check(cp, x, c.opts.trials, c.opts.seed + salt++)) fail(r, *c.g, x, "schedule dependence");
  }
}

void cmd_verify(Context& c, Report& r) {
  std::size_t checked = 0;
  const std::string& s = c.opts.suite;
  if (s == "lengths") {
    verify_lengths(c, r, checked);
  } else if (s == "straight") {
    verify_straight(c, r, checked);
  } else if (s == "cyclic") {
    verify_cyclic(c, r, checked);
  } else if (s == "nice") {
    verify_nice(c, r, checked);
  } else if (s == "classpoly") {
    verify_classpoly(c, r, checked);
  } else {
    throw DomainError("unknown suite '" + s + "'");
  }
  const bool pass = r.failures.empty();
  r.results.push_back({{"suite", s}, {"checked", checked}, {"pass", pass}});
  r.text.push_back(s + ": " + (pass ? "pass" : "FAIL") + " (" + std::to_string(checked) + " checked, " +
                   std::to_string(r.failures.size()) + " failures)");
  for (const auto& f : r.failures)
    r.text.push_back("  " + f["element"].get<std::string>() + ": " + f["reason"].get<std::string>());
}

// ---- output ----

json config_json(const Context& c, const std::string& command) {
  json j;
  j["command"] = command;
  j["type"] = c.g->label();
  j["twist"] = c.opts.twist;
  j["conj"] = to_string(c.flavor);
  j["max_len"] = c.opts.max_len;
  j["radius"] = c.opts.radius;
  j["cap"] = c.opts.cap;
  j["format"] = c.opts.format;
  j["strict"] = c.opts.strict;
  j["finite"] = c.opts.finite;
  return j;
}

std::string csv_cell(const json& v, char sep) {
  std::string s = v.is_string() ? v.get<std::string>() : v.is_array() ? join(v) : v.dump();
  if (s.find(sep) != std::string::npos || s.find('"') != std::string::npos || s.find('\n') != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

void emit_table(std::ostream& os, const json& rows, char sep) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [k, v] : rows[0].items()) {
    os << (first ? "" : std::string(1, sep)) << csv_cell(k, sep);
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [k, v] : row.items()) {
      os << (first ? "" : std::string(1, sep)) << csv_cell(v, sep);
      first = false;
    }
    os << "\n";
  }
}

void emit(std::ostream& os, const Context& c, const std::string& command, const Report& r) {
  const std::string& f = c.opts.format;
  if (f == "json") {
    json j;
    j["version"] = kVersion;
    j["config"] = config_json(c, command);
    j["seed"] = c.opts.seed;
    j["results"] = r.results;
    j["failures"] = r.failures;
    os << j.dump(2) << "\n";
  } else if (f == "csv" || f == "tsv") {
    emit_table(os, r.results, f == "csv" ? ',' : '\t');
  } else {
    for (const auto& line : r.text) os << line << "\n";
  }
}

void add_common(CLI::App* sub, Options& o, bool elements) {
  sub->add_option("--type", o.type, "type label, e.g. A2~ or G2")->required();
  sub->add_option("--twist", o.twist, "diagram twists: all | none | dN")->capture_default_str();
  sub->add_option("--conj", o.conj, "conjugacy flavor: W | WG | Wext");
  sub->add_option("--max-len", o.max_len, "length bound for enumerations")->capture_default_str();
  sub->add_option("--radius", o.radius, "conjugator search radius")->capture_default_str();
  sub->add_option("--cap", o.cap, "closure size cap")->capture_default_str();
  sub->add_option("--seed", o.seed, "schedule seed")->capture_default_str();
  sub->add_option("--format", o.format, "text | json | csv | tsv")
      ->check(CLI::IsMember({"text", "json", "csv", "tsv"}))
      ->capture_default_str();
  sub->add_flag("--strict", o.strict, "exit 4 when a class split is unconfirmed");
  sub->add_flag("--finite", o.finite, "work in the finite group W0 x| Omega'");
  sub->add_option("--out", o.out, "write output to FILE");
  if (elements) sub->add_option("elements", o.elements, "element expressions")->required();
}

void report_parse_error(const ParseError& e, const Options& o) {
  std::cerr << "error: " << e.what() << "\n";
  for (const auto& text : o.elements) {
    if (e.position() > text.size()) continue;
    std::cerr << "  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
    break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy classes, straight elements and class polynomials of extended affine Weyl groups"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;
  using Handler = void (*)(Context&, Report&);
  const std::vector<std::tuple<std::string, std::string, Handler, bool>> commands = {
      {"length", "lengths by three methods", cmd_length, true},
      {"newton", "Newton point and straight invariant", cmd_newton, true},
      {"straight", "straightness, fixed space, finite order", cmd_straight, true},
      {"reduce", "reduce to a minimal-length conjugate", cmd_reduce, true},
      {"classes", "enumerate conjugacy classes up to --max-len", cmd_classes, false},
      {"classpoly", "class polynomials", cmd_classpoly, true},
      {"nice", "nice-class criteria", cmd_nice, true},
      {"verify", "run a verification suite", cmd_verify, false},
  };
  for (const auto& [name, help, handler, elements] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o, elements);
    if (name == "verify")
      sub->add_option("suite", o.suite, "lengths | straight | cyclic | nice | classpoly")
          ->required()
          ->check(CLI::IsMember({"lengths", "straight", "cyclic", "nice", "classpoly"}));
    if (name == "verify" || name == "classpoly")
      sub->add_option("--trials", o.trials, "random schedules per element")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  const CLI::App* active = app.get_subcommands().front();
  const std::string command = active->get_name();
  Handler handler = nullptr;
  for (const auto& [name, help, h, elements] : commands)
    if (name == command) handler = h;

  Context c;
  c.opts = o;
  try {
    c.g = std::make_unique<AffineGroup>(parse_cartan_type(strip_tilde(o.type)), TwistSelection::parse(o.twist));
    c.flavor = o.conj.empty() ? (command == "classpoly" || command == "verify" && o.suite == "classpoly"
                                     ? ConjFlavor::Wext
                                     : ConjFlavor::W)
                              : parse_flavor(o.conj);
    if (o.cap == 0 || o.radius < 0 || o.max_len < 0) throw DomainError("caps must be positive");
    c.limits.closure_cap = o.cap;
    c.limits.radius = o.radius;

    Report r;
    handler(c, r);

    std::ofstream file;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file) throw DomainError("cannot open output file '" + o.out + "'");
    }
    std::ostream& os = o.out.empty() ? std::cout : file;
    emit(os, c, command, r);
    if (o.strict && r.split) {
      std::cerr << "error: output contains an unconfirmed class split\n";
      return kSplit;
    }
    return r.failures.empty() ? kOk : kFailure;
  } catch (const ParseError& e) {
    report_parse_error(e, o);
    return kParse;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
