#include "loja/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "loja/engine/exponent.hpp"
#include "loja/estimator/estimator.hpp"
#include "loja/poly/parse.hpp"

namespace loja::cli {

using json = nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string sig6(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

json num6(double v) {
  if (!std::isfinite(v)) return sig6(v);
  return std::stod(sig6(v));
}

json degree_json(const Degree& d) { return d ? json(*d) : json("-inf"); }

std::string matrix_text(const RationalMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& q : r) row.push_back(to_string(q));
    rows.push_back(row);
  }
  return rows;
}

json leading_coefficients(const Branch& b, std::size_t count = 3) {
  json terms = json::array();
  for (const auto& t : b.series()) {
    if (terms.size() == count) break;
    std::complex<double> c = t.coeff.enclosure_within(1e-9).center();
    terms.push_back({{"exponent", t.exponent}, {"re", num6(c.real())}, {"im", num6(c.imag())}});
  }
  return terms;
}

// "a1: a1^2 - 2 = 0, a1 ~ 1.41421" for every level of the branch tower
std::vector<std::string> tower_lines(const Branch& b) {
  std::vector<std::string> lines;
  const TowerPtr& t = b.tower();
  for (std::size_t i = 1; i <= t->depth(); ++i) {
    const auto& lv = t->level(i);
    TowerPtr lower = t->prefix(i - 1);
    std::string eq;
    for (std::size_t k = lv.minpoly.size(); k-- > 0;) {
      std::string c = lower->format(lv.minpoly[k]);
      if (c == "0") continue;
      std::string mono = k == 0 ? "" : k == 1 ? lv.name : lv.name + "^" + std::to_string(k);
      bool compound = c.find_first_of("+- ", 1) != std::string::npos;
      std::string term = mono.empty() ? c : c == "1" ? mono : c == "-1" ? "-" + mono
                                          : (compound ? "(" + c + ")" : c) + "*" + mono;
      if (eq.empty()) eq = term;
      else if (term[0] == '-') eq += " - " + term.substr(1);
      else eq += " + " + term;
    }
    std::complex<double> r = AlgebraicNumber::generator(t, i).enclosure_within(1e-9).center();
    std::string approx = sig6(r.real());
    if (r.imag() != 0.0) approx += (r.imag() < 0 ? " - " : " + ") + sig6(std::abs(r.imag())) + "i";
    lines.push_back(lv.name + ": " + eq + " = 0, " + lv.name + " ~ " + approx);
  }
  return lines;
}

json verdict_json(const BranchVerdict& v, std::size_t index) {
  json comps = json::array();
  for (const auto& d : v.component_degrees) comps.push_back(degree_json(d));
  return {{"index", index},
          {"conjugates", v.branch.conjugacy_size()},
          {"ramification", v.branch.ramification()},
          {"deg_phi", v.deg_phi},
          {"deg_compose", degree_json(v.deg_F_compose)},
          {"component_degrees", comps},
          {"lambda", to_string(v.lambda)},
          {"exact", v.branch.exact()},
          {"series", v.branch.to_string()},
          {"tower", tower_lines(v.branch)},
          {"leading_coefficients", leading_coefficients(v.branch)}};
}

std::vector<std::string> split_components(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::string t = trim(line);
    if (!t.empty() && t[0] == '#') continue;
    std::size_t start = 0;
    while (true) {
      auto semi = t.find(';', start);
      std::string part = trim(t.substr(start, semi == std::string::npos ? semi : semi - start));
      if (!part.empty()) parts.push_back(part);
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  return parts;
}

std::vector<std::string> infer_variables(const std::vector<std::string>& parts,
                                         const std::vector<std::string>& default_vars) {
  std::vector<std::string> ids;
  for (const auto& p : parts)
    for (const auto& id : collect_identifiers(p))
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  std::vector<std::string> base = default_vars.empty() ? std::vector<std::string>{"x", "y"} : default_vars;
  if (std::all_of(ids.begin(), ids.end(),
                  [&](const std::string& id) { return std::find(base.begin(), base.end(), id) != base.end(); }))
    return base;
  static const std::regex zvar("z([1-9][0-9]*)");
  int n = 0;
  std::string offending;
  for (const auto& id : ids) {
    std::smatch m;
    if (std::regex_match(id, m, zvar)) n = std::max(n, std::stoi(m[1].str()));
    else if (std::find(base.begin(), base.end(), id) == base.end() || offending.empty())
      if (offending.empty() || std::find(base.begin(), base.end(), offending) != base.end()) offending = id;
  }
  if (!offending.empty())
    throw UsageError(offending, "unknown variable '" + offending + "' (declare variables with a 'vars:' line)");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));
  return vars;
}

}  // namespace

MappingSpec parse_mapping(const std::string& text, const std::vector<std::string>& default_vars) {
  std::vector<std::string> parts = split_components(text);
  MappingSpec f;
  if (!parts.empty() && parts[0].rfind("vars:", 0) == 0) {
    std::istringstream in(parts[0].substr(5));
    std::string v;
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    while (in >> v) {
      if (!std::regex_match(v, ident)) throw UsageError(v, "invalid variable name '" + v + "'");
      if (std::find(f.variables.begin(), f.variables.end(), v) != f.variables.end())
        throw UsageError(v, "duplicate variable '" + v + "'");
      f.variables.push_back(v);
    }
    if (f.variables.empty()) throw UsageError("vars:", "empty variable declaration 'vars:'");
    parts.erase(parts.begin());
  } else {
    f.variables = infer_variables(parts, default_vars);
  }
  if (parts.empty()) throw UsageError("", "no components given");
  for (const auto& p : parts) {
    try {
      f.components.push_back(parse_poly(p, f.variables));
    } catch (const ParseError& e) {
      throw UsageError(e.token(), std::string("in '") + p + "': " + e.what());
    }
  }
  return f;
}

namespace {

struct Job {
  std::string inline_text;
  std::string file;
  std::uint64_t seed = 0;
  bool as_json = false;
  double rmin = 1e2, rmax = 1e6, ratio = std::sqrt(10.0);
  int samples = 64;
  int probes = 64;
  std::string csv;
};

std::string read_input(const Job& job) {
  if (!job.file.empty()) {
    std::ifstream in(job.file);
    if (!in) throw UsageError(job.file, "cannot read file '" + job.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return job.inline_text;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void require_plane(const MappingSpec& f) {
  if (f.variables.size() != 2)
    throw UsageError(f.variables.empty() ? "" : f.variables.back(),
                     "the exact engine needs exactly 2 variables, got " + std::to_string(f.variables.size()));
}

json variables_json(const MappingSpec& f) { return f.variables; }

void cmd_branches(const Job& job, const MappingSpec& f, std::ostream& out) {
  require_plane(f);
  CurveBranches cb = branches_at_infinity(f, job.seed);
  for (auto& b : cb.branches) b = extend_branch(b, deg_phi(b) - 4);
  if (job.as_json) {
    json bs = json::array();
    for (std::size_t i = 0; i < cb.branches.size(); ++i) {
      const Branch& b = cb.branches[i];
      bs.push_back({{"index", i},
                    {"conjugates", b.conjugacy_size()},
                    {"ramification", b.ramification()},
                    {"deg_phi", deg_phi(b)},
                    {"exact", b.exact()},
                    {"series", b.to_string()},
                    {"tower", tower_lines(b)},
                    {"leading_coefficients", leading_coefficients(b)}});
    }
    json j = {{"command", "branches"}, {"variables", variables_json(f)}, {"seed", job.seed},
              {"transform", matrix_json(cb.transform)}, {"branches", bs}};
    if (cb.curve) j["curve"] = cb.curve->to_string();
    emit(out, j);
    return;
  }
  out << "transform: " << matrix_text(cb.transform) << '\n';
  if (cb.curve) out << "curve: " << cb.curve->to_string() << " = 0\n";
  out << "branches: " << cb.branches.size() << '\n';
  for (std::size_t i = 0; i < cb.branches.size(); ++i) {
    const Branch& b = cb.branches[i];
    out << "  #" << i << " conjugates=" << b.conjugacy_size() << " p=" << b.ramification()
        << " deg_phi=" << deg_phi(b) << "\n     " << b.to_string() << '\n';
    for (const auto& line : tower_lines(b)) out << "     " << line << '\n';
  }
}

void cmd_exponent(const Job& job, const MappingSpec& f, std::ostream& out) {
  require_plane(f);
  ExponentReport r = lojasiewicz_exponent(f, job.seed);
  if (job.as_json) {
    json bs = json::array();
    for (std::size_t i = 0; i < r.branch_verdicts.size(); ++i) bs.push_back(verdict_json(r.branch_verdicts[i], i));
    json j = {{"command", "exponent"},
              {"variables", variables_json(f)},
              {"seed", job.seed},
              {"degenerate_case", to_string(r.degenerate_case)},
              {"transform", matrix_json(r.transform)},
              {"branches", bs}};
    if (r.curve) j["curve"] = r.curve->to_string();
    j["exponent"] = to_string(r.exponent);
    j["proper"] = r.proper;
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    emit(out, j);
    return;
  }
  out << "L_inf = " << to_string(r.exponent) << '\n';
  out << "proper: " << (r.proper ? "yes" : "no") << '\n';
  out << "degenerate case: " << to_string(r.degenerate_case) << '\n';
  out << "transform: " << matrix_text(r.transform) << '\n';
  if (r.curve) out << "curve: " << r.curve->to_string() << " = 0\n";
  out << "branches: " << r.branch_verdicts.size() << '\n';
  for (std::size_t i = 0; i < r.branch_verdicts.size(); ++i) {
    const BranchVerdict& v = r.branch_verdicts[i];
    out << "  #" << i << " conjugates=" << v.branch.conjugacy_size() << " p=" << v.branch.ramification()
        << " deg_phi=" << v.deg_phi << " deg_compose=" << to_string(v.deg_F_compose)
        << " lambda=" << to_string(v.lambda) << "\n     " << v.branch.to_string() << '\n';
    for (const auto& line : tower_lines(v.branch)) out << "     " << line << '\n';
  }
  if (r.witness) out << "witness: #" << *r.witness << '\n';
}

void cmd_proper(const Job& job, const MappingSpec& f, std::ostream& out) {
  require_plane(f);
  auto [proper, e] = is_proper(f, job.seed);
  if (job.as_json) {
    emit(out, {{"command", "proper"}, {"variables", variables_json(f)}, {"seed", job.seed},
               {"proper", proper}, {"exponent", to_string(e)}});
    return;
  }
  out << (proper ? "proper" : "not proper") << " (L_inf = " << to_string(e) << ")\n";
}

json fit_json(const SlopeFit& s) {
  json pts = json::array();
  for (const auto& [x, y] : s.points) pts.push_back({num6(x), num6(y)});
  return {{"slope", num6(s.slope)},
          {"intercept", num6(s.intercept)},
          {"residual", num6(s.residual)},
          {"used_tail", s.used_tail},
          {"points", pts}};
}

void cmd_estimate(const Job& job, const MappingSpec& f, std::ostream& out) {
  RadiusLadder ladder;
  try {
    ladder = RadiusLadder::from_range(job.rmin, job.rmax, job.ratio, job.samples, job.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--rmin/--rmax/--ratio/--samples", e.what());
  }
  if (f.variables.size() < 2) throw UsageError(f.variables.empty() ? "" : f.variables[0], "estimate needs at least 2 variables");
  EstimateReport r = estimate_exponent(f, ladder);
  if (!job.csv.empty()) {
    std::ofstream csv(job.csv);
    if (!csv) throw UsageError(job.csv, "cannot write file '" + job.csv + "'");
    write_csv(r, csv);
  }
  if (job.as_json) {
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"radius", num6(row.radius)},
                      {"min_restricted", num6(row.min_restricted)},
                      {"min_full", num6(row.min_full)}});
    emit(out, {{"command", "estimate"},
               {"variables", variables_json(f)},
               {"seed", job.seed},
               {"ladder",
                {{"r0", num6(ladder.r0)},
                 {"ratio", num6(ladder.ratio)},
                 {"count", ladder.count},
                 {"samples", ladder.samples_per_radius},
                 {"multistarts", ladder.multistarts}}},
               {"restricted", fit_json(r.restricted)},
               {"full", fit_json(r.full)},
               {"agreement", num6(r.agreement)},
               {"rows", rows}});
    return;
  }
  out << "ladder: " << sig6(ladder.r0) << " .. " << sig6(ladder.radii().back()) << ", ratio "
      << sig6(ladder.ratio) << ", " << ladder.count << " radii\n";
  out << "restricted slope: " << sig6(r.restricted.slope) << " (residual " << sig6(r.restricted.residual)
      << ", tail " << r.restricted.used_tail << ")\n";
  out << "full slope: " << sig6(r.full.slope) << " (residual " << sig6(r.full.residual) << ", tail "
      << r.full.used_tail << ")\n";
  out << "agreement: " << sig6(r.agreement) << '\n';
}

int cmd_root_distance(const Job& job, const std::string& text, std::ostream& out) {
  MappingSpec f = parse_mapping(text, {"t"});
  if (f.variables.size() != 1)
    throw UsageError(f.variables.back(), "this command needs a univariate mapping");
  std::vector<QPoly> comps;
  for (const auto& c : f.components) {
    std::vector<Rational> co(static_cast<std::size_t>(c.total_degree().value_or(-1) + 1));
    for (const auto& [e, q] : c.terms()) co[e[0]] = q;
    comps.emplace_back(co);
  }
  RootDistanceResult r;
  try {
    r = root_distance_check(comps, job.probes, job.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(text, e.what());
  }
  if (job.as_json) {
    emit(out, {{"command", "check-lemma2"}, {"variables", variables_json(f)}, {"seed", job.seed},
               {"holds", r.holds}, {"worst_margin", num6(r.worst_margin)}, {"probes", r.probes}});
  } else {
    out << (r.holds ? "holds" : "VIOLATED") << " (worst margin " << sig6(r.worst_margin) << ", "
        << r.probes << " probes)\n";
  }
  return r.holds ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponent at infinity of polynomial mappings", "loja"};
  app.require_subcommand(1);
  Job job;
  auto add_input = [&](CLI::App* sub) {
    auto* e = sub->add_option("-e", job.inline_text, "components separated by ';'");
    auto* f = sub->add_option("-f", job.file, "file with one component per line");
    e->excludes(f);
    sub->add_option("--seed", job.seed, "seed for coordinates and sampling");
    sub->add_flag("--json", job.as_json, "JSON output");
  };
  auto* exp = app.add_subcommand("exponent", "exact exponent at infinity (2 variables)");
  auto* br = app.add_subcommand("branches", "branches at infinity of the zero curve");
  auto* pr = app.add_subcommand("proper", "properness verdict");
  auto* est = app.add_subcommand("estimate", "numeric slope estimate on a radius ladder");
  auto* lem = app.add_subcommand("check-lemma2", "check the root distance inequality");
  for (auto* s : {exp, br, pr, est, lem}) add_input(s);
  est->add_option("--rmin", job.rmin, "smallest radius");
  est->add_option("--rmax", job.rmax, "largest radius");
  est->add_option("--ratio", job.ratio, "radius ratio");
  est->add_option("--samples", job.samples, "samples per radius");
  est->add_option("--csv", job.csv, "write (R, min_S, min_full) rows to a CSV file");
  lem->add_option("--probes", job.probes, "random probe points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "loja: " << e.what() << '\n';
    return 2;
  }

  try {
    if (job.inline_text.empty() && job.file.empty()) throw UsageError("-e", "an input is required: -e <inline> or -f <file>");
    std::string text = read_input(job);
    if (*lem) return cmd_root_distance(job, text, out);
    MappingSpec f = parse_mapping(text);
    if (*exp) cmd_exponent(job, f, out);
    else if (*br) cmd_branches(job, f, out);
    else if (*pr) cmd_proper(job, f, out);
    else cmd_estimate(job, f, out);
    return 0;
  } catch (const UsageError& e) {
    err << "loja: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "loja: internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace loja::cli
