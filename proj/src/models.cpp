#include "doldef/models.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "doldef/errors.hpp"

namespace doldef {

namespace {

std::vector<std::string> grid_params(int n, int cols) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= cols; ++l) names.push_back("t" + std::to_string(i) + std::to_string(l));
  return names;
}

Form wedge_pair(const ModelSpec& m, const GaussRational& c, int a, int b) {
  Form f(m.n);
  f.add(Word{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)},
        Poly::constant(m.params, c));
  return f;
}

ModelSpec torus_model(int n) {
  ModelSpec m;
  m.name = "torus:" + std::to_string(n);
  m.n = n;
  m.params = make_params(grid_params(n, n));
  m.finalize();
  return m;
}

ModelSpec iwasawa_model() {
  ModelSpec m;
  m.name = "iwasawa";
  m.n = 3;
  m.params = make_params(grid_params(3, 2));
  m.set_d(m.gen_index("f3"), wedge_pair(m, GaussRational(-1), 0, 1));  // d f3 = -f1^f2
  m.finalize();

  VectorForm phi(3, VecType::T10);
  for (int i = 1; i <= 3; ++i)
    for (int l = 1; l <= 2; ++l) {
      Poly t = Poly::parse(m.params, "t" + std::to_string(i) + std::to_string(l));
      phi.add(Word{static_cast<std::uint8_t>(3 + l - 1)}, static_cast<std::uint8_t>(i - 1), t);
    }
  Poly minus_d = Poly::parse(m.params, "t21*t12 - t11*t22");
  phi.add(Word{5}, 2, minus_d);  // -D(t) fb3 (x) v3
  m.beltrami = phi;
  return m;
}

ModelSpec nakamura_iii_3b_model() {
  ModelSpec m;
  m.name = "nakamura_iii_3b";
  m.n = 3;
  m.params = make_params(grid_params(3, 3));
  m.set_d(m.gen_index("f2"), wedge_pair(m, GaussRational(1), 0, 1));    // d f2 = f1^f2
  m.set_d(m.gen_index("f3"), wedge_pair(m, GaussRational(-1), 0, 2));   // d f3 = -f1^f3
  // The invariant complex of III-(3b) is not conjugation-closed: the
  // harmonic (0,1)-generators carry holomorphic weights, so their
  // differentials are (1,1)-forms and are declared explicitly.
  m.set_d(m.gen_index("fb2"), wedge_pair(m, GaussRational(1), 0, 4));   // d fb2 = f1^fb2
  m.set_d(m.gen_index("fb3"), wedge_pair(m, GaussRational(-1), 0, 5));  // d fb3 = -f1^fb3
  m.finalize();

  VectorForm phi(3, VecType::T10);
  for (int i = 1; i <= 3; ++i)
    for (int l = 1; l <= 3; ++l) {
      Poly t = Poly::parse(m.params, "t" + std::to_string(i) + std::to_string(l));
      phi.add(Word{static_cast<std::uint8_t>(3 + l - 1)}, static_cast<std::uint8_t>(i - 1), t);
    }
  m.beltrami = phi;
  m.asserted_mc = true;
  return m;
}

}  // namespace

ModelSpec builtin_model(const std::string& name) {
  if (name.rfind("torus:", 0) == 0) {
    int n = std::stoi(name.substr(6));
    if (n < 1 || n > 6) throw std::invalid_argument("torus dimension must be 1..6");
    return torus_model(n);
  }
  if (name == "iwasawa") return iwasawa_model();
  if (name == "nakamura_iii_3b") return nakamura_iii_3b_model();
  throw std::invalid_argument("unknown builtin model '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"torus:<n>", "iwasawa", "nakamura_iii_3b"}; }

nlohmann::ordered_json model_to_json(const ModelSpec& m) {
  nlohmann::ordered_json j;
  j["name"] = m.name;
  j["dim"] = m.n;
  j["params"] = m.params ? m.params->names() : std::vector<std::string>{};
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (int g = 0; g < 2 * m.n; ++g) {
    if (!m.d_explicit.empty() && !m.d_explicit[g]) continue;
    if (m.d_table[g].is_zero() && g >= m.n) continue;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [w, c] : m.d_table[g].terms()) {
      nlohmann::ordered_json e;
      e["coeff"] = c.constant_term().str();
      std::vector<std::string> wedge;
      for (auto gi : w) wedge.push_back(m.gen_name(gi));
      e["wedge"] = wedge;
      entries.push_back(e);
    }
    if (!entries.empty()) d[m.gen_name(g)] = entries;
  }
  j["d"] = d;
  if (m.beltrami) {
    nlohmann::ordered_json b = nlohmann::ordered_json::array();
    for (const auto& [key, c] : m.beltrami->terms()) {
      nlohmann::ordered_json e;
      e["coeff"] = c.str();
      std::vector<std::string> fw;
      for (auto gi : key.first) fw.push_back(m.gen_name(gi));
      e["form"] = fw;
      e["vector"] = m.vec_name(key.second);
      b.push_back(e);
    }
    j["beltrami"] = b;
  }
  if (m.asserted_mc) j["asserted_mc"] = true;
  return j;
}

ModelSpec model_from_json(const nlohmann::json& j) {
  ModelSpec m;
  m.name = j.value("name", "unnamed");
  m.n = j.at("dim").get<int>();
  std::vector<std::string> params = j.value("params", std::vector<std::string>{});
  m.params = make_params(params);
  if (j.contains("d")) {
    for (auto it = j.at("d").begin(); it != j.at("d").end(); ++it) {
      int gen = m.gen_index(it.key());
      Form f(m.n);
      for (const auto& e : it.value()) {
        GaussRational c = GaussRational::parse(e.at("coeff").get<std::string>());
        Word w;
        for (const auto& gname : e.at("wedge"))
          w.push_back(static_cast<std::uint8_t>(m.gen_index(gname.get<std::string>())));
        f.add(std::move(w), Poly::constant(m.params, c));
      }
      m.set_d(gen, std::move(f));
    }
  }
  m.finalize();
  if (j.contains("beltrami")) {
    VectorForm phi(m.n, VecType::T10);
    for (const auto& e : j.at("beltrami")) {
      Poly c = Poly::parse(m.params, e.at("coeff").get<std::string>());
      Word w;
      for (const auto& gname : e.at("form"))
        w.push_back(static_cast<std::uint8_t>(m.gen_index(gname.get<std::string>())));
      int vec = m.vec_index(e.at("vector").get<std::string>());
      if (vec >= m.n) throw std::invalid_argument("beltrami vector must be of type v<i>");
      phi.add(std::move(w), static_cast<std::uint8_t>(vec), c);
    }
    m.beltrami = phi;
  }
  m.asserted_mc = j.value("asserted_mc", false);

  std::vector<std::string> issues = validate_model(m);
  if (!issues.empty()) {
    std::string msg = "model validation failed:";
    for (const auto& s : issues) msg += "\n  - " + s;
    throw ModelInvalid(msg);
  }
  return m;
}

ModelSpec load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("model file '" + path + "': " + e.what());
  }
  return model_from_json(j);
}

void save_model_file(const ModelSpec& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write model file '" + path + "'");
  out << model_to_json(m).dump(2) << "\n";
}

ModelSpec resolve_model(const std::string& name_or_path) {
  if (name_or_path.rfind("torus:", 0) == 0 || name_or_path == "iwasawa" ||
      name_or_path == "nakamura_iii_3b")
    return builtin_model(name_or_path);
  return load_model_file(name_or_path);
}

}  // namespace doldef
