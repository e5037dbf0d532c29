#include "doldef/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace doldef {

ParamSet::ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (const auto& n : names_) {
    if (n.empty() || n[0] != 't' || (n.size() > 1 && n[1] == 'b'))
      throw std::invalid_argument("parameter name must start with 't' (not 'tb'): '" + n + "'");
  }
}

std::optional<int> ParamSet::var_index(const std::string& name) const {
  for (int i = 0; i < count(); ++i) {
    if (name == names_[i]) return i;
    if (name == conj_name(i)) return count() + i;
  }
  return std::nullopt;
}

ParamSetPtr make_params(std::vector<std::string> names) {
  return std::make_shared<const ParamSet>(std::move(names));
}

namespace {

bool mono_is_zero(const Mono& m) {
  return std::all_of(m.begin(), m.end(), [](std::uint16_t e) { return e == 0; });
}

int mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

}  // namespace

Poly Poly::constant(ParamSetPtr params, GaussRational c) {
  Poly p(std::move(params));
  if (!c.is_zero()) p.add_term(Mono(p.params_ ? 2 * p.params_->count() : 0, 0), c);
  return p;
}

Poly Poly::variable(ParamSetPtr params, int i, bool conjugated) {
  Poly p(std::move(params));
  int r = p.params_->count();
  if (i < 0 || i >= r) throw std::out_of_range("Poly::variable index");
  Mono m(2 * r, 0);
  m[conjugated ? r + i : i] = 1;
  p.add_term(m, GaussRational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_is_zero(terms_.begin()->first));
}

GaussRational Poly::constant_term() const {
  Mono zero(params_ ? 2 * params_->count() : 0, 0);
  auto it = terms_.find(zero);
  return it != terms_.end() ? it->second : GaussRational(0);
}

void Poly::add_term(const Mono& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (terms_.empty() || o.terms_.empty()) return;
  if (!params_ || !o.params_ || !(*params_ == *o.params_))
    throw std::invalid_argument("Poly: parameter-list mismatch");
}

Poly Poly::operator-() const {
  Poly out(params_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  if (!params_) params_ = o.params_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  if (!params_) params_ = o.params_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.params_ ? a.params_ : b.params_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Mono m(ma);
      for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly Poly::scaled(const GaussRational& c) const {
  Poly out(params_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

Poly Poly::conj() const {
  Poly out(params_);
  int r = params_ ? params_->count() : 0;
  for (const auto& [m, c] : terms_) {
    Mono swapped(m);
    for (int i = 0; i < r; ++i) std::swap(swapped[i], swapped[r + i]);
    out.terms_.emplace(std::move(swapped), c.conj());
  }
  return out;
}

bool Poly::is_holomorphic() const {
  int r = params_ ? params_->count() : 0;
  for (const auto& [m, c] : terms_)
    for (int i = r; i < 2 * r; ++i)
      if (m[i] != 0) return false;
  return true;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

Poly Poly::homogeneous_part(int d) const {
  Poly out(params_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) == d) out.terms_.emplace(m, c);
  return out;
}

Poly Poly::truncated(int max_degree) const {
  Poly out(params_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) <= max_degree) out.terms_.emplace(m, c);
  return out;
}

GaussRational Poly::eval(const std::vector<GaussRational>& point) const {
  if (terms_.empty()) return GaussRational(0);
  int r = params_ ? params_->count() : 0;
  if (static_cast<int>(point.size()) != r)
    throw std::invalid_argument("Poly::eval: point must assign every parameter");
  GaussRational total(0);
  for (const auto& [m, c] : terms_) {
    GaussRational v = c;
    for (int i = 0; i < r; ++i) {
      for (int e = 0; e < m[i]; ++e) v *= point[i];
      for (int e = 0; e < m[r + i]; ++e) v *= point[i].conj();
    }
    total += v;
  }
  return total;
}

Poly Poly::substituted(const std::vector<Poly>& images) const {
  ParamSetPtr target;
  for (const auto& img : images)
    if (img.params()) target = img.params();
  Poly out(target);
  if (terms_.empty()) return out;
  int r = params_ ? params_->count() : 0;
  if (static_cast<int>(images.size()) != r)
    throw std::invalid_argument("Poly::substituted: need one image per parameter");
  for (const auto& [m, c] : terms_) {
    Poly v = Poly::constant(target, c);
    for (int i = 0; i < r; ++i) {
      for (int e = 0; e < m[i]; ++e) v = v * images[i];
      if (m[r + i] > 0) {
        Poly ci = images[i].conj();
        for (int e = 0; e < m[r + i]; ++e) v = v * ci;
      }
    }
    out += v;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  int r = params_ ? params_->count() : 0;
  for (const auto& [m, c] : terms_) {
    bool negative = c.re < 0 || (c.re == 0 && c.im < 0);
    GaussRational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < 2 * r; ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += (i < r) ? params_->name(i) : params_->conj_name(i - r);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    std::string cs = mag.str();
    if (vars.empty()) {
      out += (cs.find_first_of("+-", 1) != std::string::npos) ? "(" + cs + ")" : cs;
    } else if (mag.is_one()) {
      out += vars;
    } else {
      if (cs.find_first_of("+-", 1) != std::string::npos || cs == "i") cs = "(" + cs + ")";
      out += cs + "*" + vars;
    }
  }
  return out;
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;

  explicit PolyLexer(const std::string& str) : s(str) {}
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos == s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  std::string number_like() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' || s[pos] == 'i'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

}  // namespace

Poly Poly::parse(const ParamSetPtr& params, const std::string& s) {
  PolyLexer lx(s);
  Poly out(params);
  if (lx.eof()) throw std::invalid_argument("Poly: empty string");
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else if (lx.accept('+'))
      sign = 1;
    else if (!first)
      throw std::invalid_argument("Poly: expected +/- between terms in '" + s + "'");
    first = false;

    GaussRational coeff(1);
    Mono mono(2 * params->count(), 0);
    bool saw_factor = false;
    while (true) {
      char c = lx.peek();
      if (c == '(') {
        lx.accept('(');
        size_t close = lx.s.find(')', lx.pos);
        if (close == std::string::npos) throw std::invalid_argument("Poly: unbalanced '('");
        coeff *= GaussRational::parse(lx.s.substr(lx.pos, close - lx.pos));
        lx.pos = close + 1;
        saw_factor = true;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
        std::string num = lx.number_like();
        if (num.empty()) throw std::invalid_argument("Poly: bad number in '" + s + "'");
        coeff *= GaussRational::parse(num);
        saw_factor = true;
      } else if (c == 't') {
        std::string name = lx.ident();
        auto vi = params->var_index(name);
        if (!vi) throw std::invalid_argument("Poly: unknown parameter '" + name + "'");
        int exp = 1;
        if (lx.accept('^')) {
          std::string e = lx.number_like();
          if (e.empty()) throw std::invalid_argument("Poly: bad exponent in '" + s + "'");
          exp = std::stoi(e);
        }
        mono[*vi] = static_cast<std::uint16_t>(mono[*vi] + exp);
        saw_factor = true;
      } else {
        break;
      }
      if (!lx.accept('*')) break;
    }
    if (!saw_factor) throw std::invalid_argument("Poly: empty term in '" + s + "'");
    if (sign < 0) coeff = -coeff;
    out.add_term(mono, coeff);
  }
  return out;
}

}  // namespace doldef
