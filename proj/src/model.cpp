#include "doldef/model.hpp"

#include <stdexcept>

namespace doldef {

const std::vector<GaussRational>& BracketTable::bracket(int x, int y) const {
  scratch_.assign(2 * n_, GaussRational(0));
  if (x == y) return scratch_;
  bool flip = x > y;
  if (flip) std::swap(x, y);
  auto it = table_.find({x, y});
  if (it == table_.end()) return scratch_;
  if (!flip) return it->second;
  scratch_ = it->second;
  for (auto& c : scratch_) c = -c;
  return scratch_;
}

void BracketTable::set(int x, int y, std::vector<GaussRational> components) {
  if (x >= y) throw std::invalid_argument("BracketTable::set expects x < y");
  table_[{x, y}] = std::move(components);
}

bool BracketTable::jacobi_holds() const {
  int m = 2 * n_;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      for (int z = y + 1; z < m; ++z) {
        std::vector<GaussRational> total(m);
        auto add_term = [&](int a, int b, int c) {
          std::vector<GaussRational> ab = bracket(a, b);
          for (int w = 0; w < m; ++w) {
            if (ab[w].is_zero()) continue;
            const auto& wc = bracket(w, c);
            for (int u = 0; u < m; ++u) total[u] += ab[w] * wc[u];
          }
        };
        add_term(x, y, z);
        add_term(y, z, x);
        add_term(z, x, y);
        for (const auto& c : total)
          if (!c.is_zero()) return false;
      }
  return true;
}

bool BracketTable::closed_under_conjugation() const {
  int m = 2 * n_;
  auto conj_idx = [&](int v) { return v < n_ ? v + n_ : v - n_; };
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      const std::vector<GaussRational> lhs = bracket(conj_idx(x), conj_idx(y));
      const std::vector<GaussRational> rhs = bracket(x, y);
      for (int w = 0; w < m; ++w)
        if (lhs[conj_idx(w)] != rhs[w].conj()) return false;
    }
  return true;
}

void ModelSpec::set_d(int gen, Form value) {
  if (d_table.empty()) {
    d_table.assign(2 * n, Form(n));
    d_explicit.assign(2 * n, false);
  }
  if (gen < 0 || gen >= 2 * n) throw std::out_of_range("ModelSpec::set_d generator index");
  d_table[gen] = std::move(value);
  d_explicit[gen] = true;
  if (gen >= n) has_explicit_fb = true;
}

void ModelSpec::finalize() {
  if (d_table.empty()) {
    d_table.assign(2 * n, Form(n));
    d_explicit.assign(2 * n, false);
  }
  for (int i = 0; i < n; ++i)
    if (!d_explicit[n + i]) d_table[n + i] = d_table[i].conj();
  brackets_ = derive_brackets(*this);
  finalized_ = true;
}

const BracketTable& ModelSpec::brackets() const {
  if (!finalized_) throw std::logic_error("ModelSpec: finalize() before brackets()");
  return brackets_;
}

Form ModelSpec::apply_d(const Form& x) const {
  Form out(n);
  for (const auto& [w, c] : x.terms()) {
    for (size_t j = 0; j < w.size(); ++j) {
      const Form& dg = d_table[w[j]];
      if (dg.is_zero()) continue;
      // (-1)^j from moving d past the first j letters.
      Poly sgn = (j % 2 == 0) ? c : -c;
      for (const auto& [dw, dc] : dg.terms()) {
        Word nw;
        nw.reserve(w.size() + 1);
        for (size_t a = 0; a < j; ++a) nw.push_back(w[a]);
        nw.insert(nw.end(), dw.begin(), dw.end());
        for (size_t a = j + 1; a < w.size(); ++a) nw.push_back(w[a]);
        out.add(std::move(nw), sgn * dc);
      }
    }
  }
  return out;
}

int ModelSpec::gen_index(const std::string& gname) const {
  bool fb = gname.rfind("fb", 0) == 0;
  bool f = !fb && gname.rfind("f", 0) == 0;
  if (!f && !fb) throw std::invalid_argument("unknown generator '" + gname + "'");
  int i = std::stoi(gname.substr(fb ? 2 : 1));
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range: '" + gname + "'");
  return fb ? n + i - 1 : i - 1;
}

std::string ModelSpec::gen_name(int index) const {
  return index < n ? "f" + std::to_string(index + 1) : "fb" + std::to_string(index - n + 1);
}

int ModelSpec::vec_index(const std::string& vname) const {
  bool vb = vname.rfind("vb", 0) == 0;
  bool v = !vb && vname.rfind("v", 0) == 0;
  if (!v && !vb) throw std::invalid_argument("unknown vector '" + vname + "'");
  int i = std::stoi(vname.substr(vb ? 2 : 1));
  if (i < 1 || i > n) throw std::invalid_argument("vector index out of range: '" + vname + "'");
  return vb ? n + i - 1 : i - 1;
}

std::string ModelSpec::vec_name(int index) const {
  return index < n ? "v" + std::to_string(index + 1) : "vb" + std::to_string(index - n + 1);
}

namespace {

GaussRational eval_two_form(const Form& f, int x, int y) {
  GaussRational out(0);
  for (const auto& [w, c] : f.terms()) {
    if (w.size() != 2) continue;
    if (w[0] == x && w[1] == y)
      out += c.constant_term();
    else if (w[0] == y && w[1] == x)
      out -= c.constant_term();
  }
  return out;
}

}  // namespace

BracketTable derive_brackets(const ModelSpec& m) {
  BracketTable table(m.n);
  int g = 2 * m.n;
  for (int x = 0; x < g; ++x)
    for (int y = x + 1; y < g; ++y) {
      std::vector<GaussRational> comps(g);
      bool any = false;
      for (int z = 0; z < g; ++z) {
        comps[z] = -eval_two_form(m.d_table[z], x, y);
        any = any || !comps[z].is_zero();
      }
      if (any) table.set(x, y, std::move(comps));
    }
  return table;
}

std::vector<std::string> validate_model(const ModelSpec& m) {
  std::vector<std::string> issues;
  if (m.n <= 0) {
    issues.push_back("model: dimension must be positive");
    return issues;
  }
  if (static_cast<int>(m.d_table.size()) != 2 * m.n) {
    issues.push_back("model: structure table incomplete (finalize not run?)");
    return issues;
  }
  for (int gen = 0; gen < 2 * m.n; ++gen) {
    const Form& dg = m.d_table[gen];
    for (const auto& [w, c] : dg.terms()) {
      if (w.size() != 2)
        issues.push_back(m.gen_name(gen) + ": d must be a 2-form");
      if (!c.is_constant())
        issues.push_back(m.gen_name(gen) + ": structure constants must be parameter-free");
    }
    Form dd = m.apply_d(dg);
    if (!dd.is_zero()) issues.push_back(m.gen_name(gen) + ": d^2 != 0");
  }
  for (int i = 0; i < m.n; ++i) {
    const Form& dg = m.d_table[i];
    if (!dg.component(0, 2).is_zero())
      issues.push_back(m.gen_name(i) + ": integrability fails (nonzero (0,2)-part of d)");
    if (!dg.component(1, 1).is_zero())
      issues.push_back(m.gen_name(i) + ": not a holomorphic frame (nonzero (1,1)-part of d)");
  }
  for (int i = 0; i < m.n; ++i) {
    if (!m.d_table[m.n + i].component(2, 0).is_zero())
      issues.push_back(m.gen_name(m.n + i) + ": integrability fails (nonzero (2,0)-part of d)");
  }
  if (m.beltrami) {
    const VectorForm& b = *m.beltrami;
    if (b.type() != VecType::T10) issues.push_back("beltrami: must be T^{1,0}-valued");
    if (!b.has_pure_01_words()) issues.push_back("beltrami: form part must be of type (0,*)");
    auto deg = b.form_degree();
    if (deg && *deg != 1) issues.push_back("beltrami: must be a (0,1)-form");
    if (!b.coefficients_holomorphic())
      issues.push_back("beltrami: coefficients must be holomorphic in t");
  }
  return issues;
}

}  // namespace doldef
