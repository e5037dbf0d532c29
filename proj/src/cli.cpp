#include "doldef/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>

#include "doldef/errors.hpp"

namespace doldef {

namespace {

using Json = nlohmann::ordered_json;

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string model_digest(const ModelSpec& m) { return fnv1a(model_to_json(m).dump()); }

int default_order() {
  if (const char* env = std::getenv("DOLDEF_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10;
}

}  // namespace

std::vector<GaussRational> parse_point(const ModelSpec& m, const std::string& s) {
  std::vector<GaussRational> pt(m.params ? m.params->count() : 0);
  std::string trimmed;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty() || trimmed == "0") return pt;
  size_t pos = 0;
  while (pos < trimmed.size()) {
    size_t comma = trimmed.find(',', pos);
    std::string item = trimmed.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
    pos = (comma == std::string::npos) ? trimmed.size() : comma + 1;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("point: expected name=value in '" + item + "'");
    std::string name = item.substr(0, eq);
    auto vi = m.params->var_index(name);
    if (!vi || *vi >= m.params->count())
      throw std::invalid_argument("point: unknown parameter '" + name + "'");
    pt[*vi] = GaussRational::parse(item.substr(eq + 1));
  }
  return pt;
}

namespace {

struct ClassTerm {
  Poly coeff;
  Word formword;
  std::vector<Word> factors;  // for Tangent factors a single vector index
  std::vector<bool> factor_is_vector;
};

std::vector<ClassTerm> parse_class_terms(const ModelSpec& m, const std::string& input) {
  // "(x)" separates tensor factors; rewrite it to '@' so '(' always opens a
  // coefficient group.
  std::string s;
  for (size_t i = 0; i < input.size(); ++i) {
    if (input.compare(i, 3, "(x)") == 0) {
      s += '@';
      i += 2;
    } else {
      s += input[i];
    }
  }
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto ident = [&] {
    size_t start = pos;
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };

  std::vector<ClassTerm> terms;
  skip_ws();
  if (pos == s.size()) throw std::invalid_argument("class: empty expression");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == s.size()) break;
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("class: expected +/- between terms");
    }
    first = false;

    ClassTerm term;
    term.coeff = Poly::constant(m.params, GaussRational(sign));
    bool saw_word = false;
    bool done_term = false;
    while (!done_term) {
      skip_ws();
      if (pos == s.size()) break;
      char c = s[pos];
      if (c == '(') {
        size_t close = s.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("class: unbalanced '('");
        term.coeff = term.coeff * Poly::parse(m.params, s.substr(pos + 1, close - pos - 1));
        pos = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '/' || s[pos] == 'i'))
          ++pos;
        term.coeff = term.coeff.scaled(GaussRational::parse(s.substr(start, pos - start)));
      } else if (c == 't') {
        term.coeff = term.coeff * Poly::parse(m.params, ident());
      } else if (c == 'f') {
        // A wedge word of generators.
        Word w;
        while (true) {
          w.push_back(static_cast<std::uint8_t>(m.gen_index(ident())));
          skip_ws();
          if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            continue;
          }
          break;
        }
        term.formword = std::move(w);
        saw_word = true;
      } else if (c == 'v') {
        throw std::invalid_argument("class: vector factors must follow '(x)'");
      } else {
        break;
      }
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == '@') {
        if (!saw_word && term.formword.empty()) saw_word = true;  // scalar 1 coefficient
        while (pos < s.size() && s[pos] == '@') {
          ++pos;
          skip_ws();
          if (pos < s.size() && s[pos] == 'v') {
            int vi = m.vec_index(ident());
            if (vi >= m.n)
              throw std::invalid_argument("class: only v<i> vectors are valid in classes");
            term.factors.push_back(Word{static_cast<std::uint8_t>(vi)});
            term.factor_is_vector.push_back(true);
          } else if (pos < s.size() && s[pos] == 'f') {
            Word w;
            while (true) {
              w.push_back(static_cast<std::uint8_t>(m.gen_index(ident())));
              skip_ws();
              if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip_ws();
                continue;
              }
              break;
            }
            term.factors.push_back(std::move(w));
            term.factor_is_vector.push_back(false);
          } else {
            throw std::invalid_argument("class: expected a factor after '(x)'");
          }
          skip_ws();
        }
        done_term = true;
      }
      if (pos >= s.size() || s[pos] == '+' || s[pos] == '-') done_term = true;
    }
    if (!saw_word && term.factors.empty())
      throw std::invalid_argument("class: term has no generator word");
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace

TensorForm parse_class_expr(const ModelSpec& m, const BundleSpec& bundle, const std::string& s) {
  std::vector<ClassTerm> terms = parse_class_terms(m, s);
  bool tensor_style = false;
  for (const auto& t : terms) tensor_style = tensor_style || !t.factors.empty();

  if (!tensor_style) {
    // Scalar style: words carry the full (p,q) content; the bundle must be
    // trivial or a single O^p.
    int p = bundle.is_trivial() ? 0 : bundle.factors[0].p;
    if (bundle.factors.size() > 1 ||
        (!bundle.is_trivial() && bundle.factors[0].kind != BundleSpec::Factor::WedgeOmega))
      throw std::invalid_argument("class: this bundle needs explicit '(x)' factors");
    Form f(m.n);
    for (const auto& t : terms) f.add(t.formword, t.coeff);
    return tensor_from_scalar(f, p);
  }

  TensorForm out(m.n, bundle);
  for (const auto& t : terms) {
    if (t.factors.size() != bundle.factors.size())
      throw std::invalid_argument("class: factor count does not match the bundle");
    TensorKey key;
    key.qword = t.formword;
    for (auto g : key.qword)
      if (g < m.n) throw std::invalid_argument("class: tensor-style coefficient must be an fb-word");
    for (size_t i = 0; i < t.factors.size(); ++i) {
      bool want_vec = bundle.factors[i].kind == BundleSpec::Factor::Tangent;
      if (want_vec != t.factor_is_vector[i])
        throw std::invalid_argument("class: factor kind does not match the bundle");
      if (!want_vec && static_cast<int>(t.factors[i].size()) != bundle.factors[i].p)
        throw std::invalid_argument("class: factor word has the wrong length for the bundle");
      key.factors.push_back(t.factors[i]);
    }
    out.add(std::move(key), t.coeff);
  }
  return out;
}

BeltramiSeries model_beltrami(const HodgeContext& ctx, int order) {
  const ModelSpec& m = ctx.model();
  if (m.beltrami) return asserted_beltrami(ctx, *m.beltrami, order);
  return solve_mc(ctx, order);
}

namespace {

Json point_json(const ModelSpec& m, const std::vector<GaussRational>& pt) {
  Json j = Json::object();
  for (int i = 0; i < m.params->count(); ++i)
    if (!pt[i].is_zero()) j[m.params->name(i)] = pt[i].str();
  return j;
}

std::string point_label(const ModelSpec& m, const std::vector<GaussRational>& pt) {
  std::string out;
  for (int i = 0; i < m.params->count(); ++i) {
    if (pt[i].is_zero()) continue;
    if (!out.empty()) out += ",";
    out += m.params->name(i) + "=" + pt[i].str();
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> series_by_degree(const TensorForm& x) {
  std::vector<std::string> out;
  int top = 0;
  for (const auto& [k, c] : x.terms()) top = std::max(top, c.degree());
  for (int d = 0; d <= top; ++d) {
    TensorForm part = x.coefficient_degree_part(d);
    if (!part.is_zero()) out.push_back("deg " + std::to_string(d) + ": " + part.str());
  }
  return out;
}

Json caveats_json(const BeltramiSeries& b, bool terminated_series = true) {
  Json c = Json::array();
  if (b.mc_asserted) c.push_back("asserted-mc: the Beltrami series is declared, not certified");
  if (!b.mc_certified && !b.mc_asserted)
    c.push_back("mc-residual-nonzero: Maurer-Cartan holds only on the Kuranishi locus");
  if (!terminated_series) c.push_back("truncated-formal: series did not terminate by the order");
  return c;
}

Json report_json(const ModelSpec& m, const DeformationReport& r) {
  Json j;
  j["class"] = r.sigma0.str();
  j["projected_to_harmonic"] = r.projected;
  j["method"] = r.method;
  j["order"] = r.order;
  j["max_degree"] = r.max_degree;
  j["terminated"] = r.terminated;
  j["sigma"] = r.sigma.str();
  j["sigma_by_degree"] = series_by_degree(r.sigma);
  Json obs = Json::array();
  for (size_t i = 0; i < r.obstruction_polys.size(); ++i) {
    Json o;
    o["against"] = r.obstruction_basis[i].str();
    o["poly"] = r.obstruction_polys[i].str();
    obs.push_back(o);
  }
  j["obstruction_polys"] = obs;
  Json bv = Json::array();
  for (const auto& p : r.obstruction_polys)
    if (!p.is_zero()) bv.push_back(p.str());
  j["bv_generators"] = bv;
  j["unobstructed"] = r.unobstructed;
  j["closed_identity"] = r.closed_identity;
  j["precertified_unobstructed"] = r.precertified;
  j["gauge_delbar_star"] = r.gauge_star_ok;
  j["gauge_harmonic_part"] = r.gauge_harmonic_ok;
  j["mc_certified"] = r.mc_certified;
  j["mc_asserted"] = r.mc_asserted;
  (void)m;
  return j;
}

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

void print_output(const Json& payload, const Table* table, const std::string& format,
                  std::ostream& out) {
  if (format == "json" || table == nullptr) {
    out << payload.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto cell = [](const std::string& s) {
      if (s.find_first_of(",\"") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + "\"";
    };
    for (size_t i = 0; i < table->headers.size(); ++i)
      out << (i ? "," : "") << cell(table->headers[i]);
    out << "\n";
    for (const auto& row : table->rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
      out << "\n";
    }
    return;
  }
  // markdown
  auto line = [&](const std::vector<std::string>& cells) {
    out << "|";
    for (const auto& c : cells) out << " " << c << " |";
    out << "\n";
  };
  line(table->headers);
  std::vector<std::string> dashes(table->headers.size(), "---");
  line(dashes);
  for (const auto& row : table->rows) line(row);
}

std::vector<std::string> preset_point_strings(const ModelSpec& m, const BundleSpec& bundle,
                                              int q) {
  if (m.name == "iwasawa") {
    if (bundle == BundleSpec::omega(2) && q == 0)
      return {"0", "t11=1/2", "t11=1/2,t22=1/2"};
    if (bundle == BundleSpec::omega(1) && q == 1)
      return {"t31=1/2", "t11=1/2", "t11=1/2,t22=1/2"};
    return {"0", "t31=1/2", "t11=1/2", "t11=1/2,t22=1/2"};
  }
  if (m.name == "nakamura_iii_3b")
    return {"0", "t22=1/2", "t21=1/2", "t11=1/2", "t12=1/2"};
  if (m.name.rfind("torus", 0) == 0) return {"0", "t11=1/2"};
  return {"0"};
}

struct CommonArgs {
  std::string model;
  std::string format = "json";
  int order = default_order();
};

int do_validate(const CommonArgs& c, std::ostream& out) {
  Json j;
  j["command"] = "validate";
  std::vector<std::string> issues;
  try {
    ModelSpec m = resolve_model(c.model);
    issues = validate_model(m);
    j["model"] = m.name;
    j["digest"] = model_digest(m);
  } catch (const ModelInvalid& e) {
    issues.push_back(e.what());
    j["model"] = c.model;
  }
  j["diagnostics"] = issues;
  j["valid"] = issues.empty();
  out << j.dump(2) << "\n";
  return issues.empty() ? 0 : 2;
}

int do_mc(const CommonArgs& c, std::ostream& out) {
  ModelSpec m = resolve_model(c.model);
  HodgeContext ctx(m);
  Json j;
  j["command"] = "mc";
  j["model"] = m.name;
  j["digest"] = model_digest(m);
  j["order"] = c.order;

  BeltramiSeries recursed = solve_mc(ctx, c.order);
  BeltramiSeries used = model_beltrami(ctx, c.order);
  j["phi"] = used.phi.str();
  Json by_deg = Json::array();
  for (int d = 1; d <= used.max_degree; ++d) {
    VectorForm part = used.phi.coefficient_degree_part(d);
    if (!part.is_zero()) by_deg.push_back("deg " + std::to_string(d) + ": " + part.str());
  }
  j["phi_by_degree"] = by_deg;
  j["max_degree"] = used.max_degree;
  j["terminated"] = used.terminated;
  j["residual"] = used.residual.str();
  j["residual_zero"] = used.residual.is_zero();
  j["mc_certified"] = used.mc_certified;
  j["mc_asserted"] = used.mc_asserted;
  Json obs = Json::array();
  for (const auto& p : used.kuranishi_obstructions) obs.push_back(p.str());
  j["kuranishi_obstructions"] = obs;
  if (m.beltrami) {
    j["declared"] = m.beltrami->str();
    j["recursion_matches_declared"] = recursed.phi == *m.beltrami;
  }
  j["caveats"] = caveats_json(used);
  out << j.dump(2) << "\n";
  return 0;
}

int do_deform(const CommonArgs& c, const std::string& bundle_s, int q,
              const std::string& class_s, const std::string& method, std::ostream& out) {
  ModelSpec m = resolve_model(c.model);
  HodgeContext ctx(m);
  BundleSpec bundle = BundleSpec::parse(bundle_s, m.n);
  TensorForm sigma0 = parse_class_expr(m, bundle, class_s);
  if (sigma0.q() && *sigma0.q() != q)
    throw std::invalid_argument("deform: class degree does not match --q");
  for (const auto& [key, coeff] : sigma0.terms())
    if (!coeff.is_constant())
      throw std::invalid_argument("deform: a class must have parameter-free coefficients");
  BeltramiSeries beltrami = model_beltrami(ctx, c.order);

  DeformationReport rep;
  if (method == "kahler")
    rep = kahler_deformation(ctx, sigma0, beltrami, c.order);
  else if (method == "cy")
    rep = cy_deformation(ctx, sigma0, beltrami, canonical_form(m), c.order);
  else if (q == 0)
    rep = holomorphic_section_deformation(ctx, sigma0, beltrami, c.order);
  else
    rep = canonical_deformation(ctx, sigma0, beltrami, c.order);

  Json j;
  j["command"] = "deform";
  j["model"] = m.name;
  j["digest"] = model_digest(m);
  j["bundle"] = bundle.str();
  j["q"] = q;
  j["report"] = report_json(m, rep);
  j["caveats"] = caveats_json(beltrami, rep.terminated);
  out << j.dump(2) << "\n";
  return 0;
}

int do_jump(const CommonArgs& c, const std::string& bundle_s, int q, const std::string& at,
            bool preset, bool crosscheck, std::ostream& out) {
  ModelSpec m = resolve_model(c.model);
  HodgeContext ctx(m);
  BundleSpec bundle = BundleSpec::parse(bundle_s, m.n);
  BeltramiSeries beltrami = model_beltrami(ctx, c.order);

  std::vector<std::vector<GaussRational>> points;
  if (preset) {
    for (const auto& s : preset_point_strings(m, bundle, q)) points.push_back(parse_point(m, s));
  } else {
    points.push_back(parse_point(m, at));
  }

  std::vector<TensorForm> v = harmonic_basis(ctx, bundle, q);
  VtAnalysis an = vt_analysis(ctx, v, bundle, q, beltrami, points, c.order);

  Json j;
  j["command"] = "jump";
  j["model"] = m.name;
  j["digest"] = model_digest(m);
  j["bundle"] = bundle.str();
  j["q"] = q;
  j["order"] = c.order;
  j["dim_V"] = static_cast<int>(v.size());
  Json tm = Json::array();
  for (const auto& row : an.tmatrix) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(p.str());
    tm.push_back(r);
  }
  j["tmatrix"] = tm;

  Table table;
  table.headers = {"point", "dim V_t", "dim ker f_t", "h^q(X_t)"};
  if (crosscheck) table.headers.push_back("h^q via delbar_phi");
  Json rows = Json::array();
  for (const auto& row : an.rows) {
    Json r;
    r["point"] = point_json(m, row.point);
    r["dim_V_t"] = row.dim_vt;
    r["dim_ker_f_t"] = row.dim_ker_ft;
    r["hq"] = row.hq;
    r["mc_residual_zero_at_point"] = row.mc_zero_at_point;
    r["deformations_closed_at_point"] = row.closed_at_point;
    r["representatives_independent"] = row.reps_independent;
    std::vector<std::string> cells = {point_label(m, row.point), std::to_string(row.dim_vt),
                                      std::to_string(row.dim_ker_ft), std::to_string(row.hq)};
    if (crosscheck) {
      try {
        int dim = deformed_cohomology_dim(ctx, bundle, q, beltrami, row.point);
        r["hq_via_delbar_phi"] = dim;
        r["crosscheck_equal"] = dim == row.hq;
        cells.push_back(std::to_string(dim));
      } catch (const ComputationRefused& e) {
        r["hq_via_delbar_phi"] = nullptr;
        r["crosscheck_refused"] = e.what();
        cells.push_back("refused");
      }
    }
    rows.push_back(r);
    table.rows.push_back(cells);
  }
  j["rows"] = rows;
  j["caveats"] = caveats_json(beltrami);
  print_output(j, &table, c.format, out);
  return 0;
}

int do_cohomology(const CommonArgs& c, const std::string& bundle_s, int q, const std::string& at,
                  bool crosscheck, std::ostream& out) {
  ModelSpec m = resolve_model(c.model);
  HodgeContext ctx(m);
  BundleSpec bundle = BundleSpec::parse(bundle_s, m.n);
  BeltramiSeries beltrami = model_beltrami(ctx, c.order);
  std::vector<GaussRational> pt = parse_point(m, at);

  Json j;
  j["command"] = "cohomology";
  j["model"] = m.name;
  j["digest"] = model_digest(m);
  j["bundle"] = bundle.str();
  j["q"] = q;
  j["point"] = point_json(m, pt);
  j["classical_dim"] = cohomology_dim(ctx, bundle, q);
  j["dim"] = deformed_cohomology_dim(ctx, bundle, q, beltrami, pt);
  if (crosscheck) {
    RebigradeResult res = rebigrade_crosscheck(ctx, bundle, q, beltrami, pt);
    Json cc;
    cc["dim_via_delbar_phi"] = res.dim_via_delbar_phi;
    cc["dim_via_rebigrading"] = res.dim_via_rebigrading;
    cc["dims_equal"] = res.dims_equal;
    cc["frame_integrable"] = res.frame_integrable;
    cc["dt_squares_to_zero"] = res.dt_squares_to_zero;
    cc["closedness_equivalence"] = res.closedness_equivalence;
    j["crosscheck"] = cc;
  }
  j["caveats"] = caveats_json(beltrami);
  out << j.dump(2) << "\n";
  return 0;
}

int do_identities(const CommonArgs& c, std::uint64_t seed, int cases, std::ostream& out) {
  ModelSpec m = resolve_model(c.model);
  HodgeContext ctx(m);
  std::vector<IdentityReport> reports = run_identity_suite(ctx, seed, cases);
  Json j;
  j["command"] = "identities";
  j["model"] = m.name;
  j["digest"] = model_digest(m);
  j["seed"] = seed;
  Json rows = Json::array();
  for (const auto& r : reports) {
    Json row;
    row["identity"] = r.name;
    row["cases"] = r.cases;
    row["passed"] = r.passed;
    if (!r.detail.empty()) row["detail"] = r.detail;
    rows.push_back(row);
  }
  j["results"] = rows;
  j["all_passed"] = all_passed(reports);
  out << j.dump(2) << "\n";
  return all_passed(reports) ? 0 : 3;
}

int do_catalog(std::ostream& out) {
  Json j;
  j["command"] = "catalog";
  j["builtins"] = builtin_names();
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"doldef: exact deformations of Dolbeault cohomology on invariant models"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string bundle = "1", klass, method = "generic", at, seed_s = "1";
  int q = 0, cases = 50;
  bool preset = false, crosscheck = false;

  auto add_common = [&](CLI::App* sub, bool needs_model = true) {
    if (needs_model) sub->add_option("--model", common.model, "builtin name or model file")->required();
    sub->add_option("--format", common.format, "json|csv|md")->default_val("json");
    sub->add_option("--order", common.order, "truncation order");
  };

  CLI::App* v = app.add_subcommand("validate", "validate a model file or builtin");
  add_common(v);
  CLI::App* mc = app.add_subcommand("mc", "solve the Maurer-Cartan recursion");
  add_common(mc);
  CLI::App* de = app.add_subcommand("deform", "canonical deformation of a class");
  add_common(de);
  de->add_option("--bundle", bundle)->required();
  de->add_option("--q", q)->required();
  de->add_option("--class", klass)->required();
  de->add_option("--method", method)->check(CLI::IsMember({"generic", "kahler", "cy"}));
  CLI::App* ju = app.add_subcommand("jump", "V_t / ker f_t jumping analysis");
  add_common(ju);
  ju->add_option("--bundle", bundle)->required();
  ju->add_option("--q", q)->required();
  ju->add_option("--at", at, "point like t11=1/2,t22=1/2");
  std::string preset_name;
  CLI::Option* preset_opt =
      ju->add_option("--preset", preset_name, "named point preset (paper-strata)")
          ->expected(0, 1);
  ju->add_flag("--crosscheck", crosscheck, "also compute h^q via delbar_phi");
  CLI::App* co = app.add_subcommand("cohomology", "deformed Dolbeault dimension at a point");
  add_common(co);
  co->add_option("--bundle", bundle)->required();
  co->add_option("--q", q)->required();
  co->add_option("--at", at)->required();
  co->add_flag("--crosscheck", crosscheck, "re-bigrading cross-check");
  CLI::App* id = app.add_subcommand("identities", "seeded exact identity suite");
  add_common(id);
  id->add_option("--seed", seed_s);
  id->add_option("--cases", cases);
  CLI::App* cat = app.add_subcommand("catalog", "list builtin models");
  cat->add_option("--format", common.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return 0;
    }
    err << "{\"error\": \"usage\", \"detail\": " << Json(e.what()).dump() << "}\n";
    return 1;
  }

  try {
    if (*v) return do_validate(common, out);
    if (*mc) return do_mc(common, out);
    if (*de) return do_deform(common, bundle, q, klass, method, out);
    if (*ju) {
      preset = preset_opt->count() > 0;
      if (preset && !preset_name.empty() && preset_name != "paper-strata")
        throw std::invalid_argument("jump: unknown preset '" + preset_name + "'");
      if (!preset && at.empty())
        throw std::invalid_argument("jump: need --at or --preset");
      return do_jump(common, bundle, q, at, preset, crosscheck, out);
    }
    if (*co) return do_cohomology(common, bundle, q, at, crosscheck, out);
    if (*id) return do_identities(common, std::stoull(seed_s), cases, out);
    if (*cat) return do_catalog(out);
  } catch (const ModelInvalid& e) {
    err << Json{{"error", "invalid-model"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const ComputationRefused& e) {
    err << Json{{"error", "refused"}, {"detail", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << Json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace doldef
