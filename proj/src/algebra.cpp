#include "doldef/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace doldef {

int normalize_word(Word& w) {
  int sign = 1;
  for (size_t i = 1; i < w.size(); ++i) {
    size_t j = i;
    while (j > 0 && w[j - 1] > w[j]) {
      std::swap(w[j - 1], w[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] == w[i]) return 0;
  return sign;
}

std::string word_str(const Word& w, int n) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "^";
    int g = w[i];
    out += (g < n) ? "f" + std::to_string(g + 1) : "fb" + std::to_string(g - n + 1);
  }
  return out;
}

std::pair<int, int> word_bidegree(const Word& w, int n) {
  int p = 0, q = 0;
  for (auto g : w) (g < n ? p : q)++;
  return {p, q};
}

namespace {

std::string coeff_term_str(const Poly& c, const std::string& rest) {
  std::string cs = c.str();
  if (rest.empty() || rest == "1")
    return (cs.find(' ') != std::string::npos) ? "(" + cs + ")" : cs;
  if (cs == "1") return rest;
  if (cs == "-1") return "-" + rest;
  if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
  return cs + " * " + rest;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

}  // namespace

void Form::add(Word w, const Poly& c) {
  if (c.is_zero()) return;
  int sign = normalize_word(w);
  if (sign == 0) return;
  Poly v = (sign < 0) ? -c : c;
  auto [it, inserted] = terms_.emplace(std::move(w), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form out(n_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Form& Form::operator+=(const Form& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Form Form::scaled(const Poly& c) const {
  Form out(n_);
  for (const auto& [w, v] : terms_) out.add(w, v * c);
  return out;
}

Form Form::scaled(const GaussRational& c) const {
  Form out(n_);
  for (const auto& [w, v] : terms_) out.add(w, v.scaled(c));
  return out;
}

Form Form::conj() const {
  Form out(n_);
  for (const auto& [w, c] : terms_) {
    Word cw(w);
    for (auto& g : cw) g = static_cast<std::uint8_t>(g < n_ ? g + n_ : g - n_);
    out.add(std::move(cw), c.conj());
  }
  return out;
}

Form Form::component(int p, int q) const {
  Form out(n_);
  for (const auto& [w, c] : terms_)
    if (word_bidegree(w, n_) == std::pair<int, int>(p, q)) out.add(w, c);
  return out;
}

Form Form::degree_component(int k) const {
  Form out(n_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == k) out.add(w, c);
  return out;
}

bool Form::is_homogeneous(int* p, int* q) const {
  if (terms_.empty()) return true;
  auto [p0, q0] = word_bidegree(terms_.begin()->first, n_);
  for (const auto& [w, c] : terms_)
    if (word_bidegree(w, n_) != std::pair<int, int>(p0, q0)) return false;
  if (p) *p = p0;
  if (q) *q = q0;
  return true;
}

Form Form::evaluated(const std::vector<GaussRational>& point) const {
  Form out(n_);
  for (const auto& [w, c] : terms_) out.add(w, Poly::constant(c.params(), c.eval(point)));
  return out;
}

Form Form::coefficient_degree_part(int d) const {
  Form out(n_);
  for (const auto& [w, c] : terms_) out.add(w, c.homogeneous_part(d));
  return out;
}

std::string Form::str() const {
  std::vector<std::string> parts;
  for (const auto& [w, c] : terms_) parts.push_back(coeff_term_str(c, word_str(w, n_)));
  return join_terms(parts);
}

Form gen_form(int n, const ParamSetPtr& params, int index) {
  Form f(n);
  f.add(Word{static_cast<std::uint8_t>(index)}, Poly::constant(params, GaussRational(1)));
  return f;
}

Form wedge(const Form& a, const Form& b) {
  Form out(a.n() ? a.n() : b.n());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w(wa);
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(std::move(w), ca * cb);
    }
  return out;
}

Form interior(int vec, const Form& x) {
  Form out(x.n());
  for (const auto& [w, c] : x.terms()) {
    for (size_t j = 0; j < w.size(); ++j) {
      if (w[j] != vec) continue;
      Word rest;
      rest.reserve(w.size() - 1);
      for (size_t k = 0; k < w.size(); ++k)
        if (k != j) rest.push_back(w[k]);
      out.add(std::move(rest), (j % 2 == 0) ? c : -c);
      break;
    }
  }
  return out;
}

void VectorForm::add(Word w, std::uint8_t vec, const Poly& c) {
  if (c.is_zero()) return;
  int sign = normalize_word(w);
  if (sign == 0) return;
  Poly v = (sign < 0) ? -c : c;
  auto key = std::make_pair(std::move(w), vec);
  auto [it, inserted] = terms_.emplace(std::move(key), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VectorForm VectorForm::operator-() const {
  VectorForm out(n_, type_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

VectorForm& VectorForm::operator+=(const VectorForm& o) {
  if (n_ == 0) {
    n_ = o.n_;
    type_ = o.type_;
  }
  if (!o.terms_.empty() && o.type_ != type_)
    throw std::invalid_argument("VectorForm: mixed vector types");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

VectorForm& VectorForm::operator-=(const VectorForm& o) {
  if (n_ == 0) {
    n_ = o.n_;
    type_ = o.type_;
  }
  if (!o.terms_.empty() && o.type_ != type_)
    throw std::invalid_argument("VectorForm: mixed vector types");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

VectorForm VectorForm::scaled(const Poly& c) const {
  VectorForm out(n_, type_);
  for (const auto& [k, v] : terms_) out.add(k.first, k.second, v * c);
  return out;
}

VectorForm VectorForm::conj() const {
  VectorForm out(n_, type_ == VecType::T10 ? VecType::T01 : VecType::T10);
  for (const auto& [k, c] : terms_) {
    Word cw(k.first);
    for (auto& g : cw) g = static_cast<std::uint8_t>(g < n_ ? g + n_ : g - n_);
    out.add(std::move(cw), k.second, c.conj());
  }
  return out;
}

std::optional<int> VectorForm::form_degree() const {
  if (terms_.empty()) return std::nullopt;
  size_t d = terms_.begin()->first.first.size();
  for (const auto& [k, c] : terms_)
    if (k.first.size() != d) return std::nullopt;
  return static_cast<int>(d);
}

bool VectorForm::has_pure_01_words() const {
  for (const auto& [k, c] : terms_)
    for (auto g : k.first)
      if (g < n_) return false;
  return true;
}

VectorForm VectorForm::coefficient_degree_part(int d) const {
  VectorForm out(n_, type_);
  for (const auto& [k, c] : terms_) out.add(k.first, k.second, c.homogeneous_part(d));
  return out;
}

VectorForm VectorForm::evaluated(const std::vector<GaussRational>& point) const {
  VectorForm out(n_, type_);
  for (const auto& [k, c] : terms_)
    out.add(k.first, k.second, Poly::constant(c.params(), c.eval(point)));
  return out;
}

bool VectorForm::coefficients_holomorphic() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_holomorphic()) return false;
  return true;
}

std::string VectorForm::str() const {
  std::vector<std::string> parts;
  for (const auto& [k, c] : terms_) {
    std::string v =
        (type_ == VecType::T10 ? "v" : "vb") + std::to_string(static_cast<int>(k.second) + 1);
    parts.push_back(coeff_term_str(c, word_str(k.first, n_) + " (x) " + v));
  }
  return join_terms(parts);
}

Form contract(const VectorForm& k, const Form& x) {
  Form out(x.n() ? x.n() : k.n());
  int n = out.n();
  for (const auto& [key, c] : k.terms()) {
    int vec = (k.type() == VecType::T10) ? key.second : key.second + n;
    Form inner = interior(vec, x);
    if (inner.is_zero()) continue;
    for (const auto& [wi, ci] : inner.terms()) {
      Word w(key.first);
      w.insert(w.end(), wi.begin(), wi.end());
      out.add(std::move(w), c * ci);
    }
  }
  return out;
}

Form exp_contract(const VectorForm& k, const Form& x) {
  auto deg = k.form_degree();
  if (!k.is_zero() && deg && *deg != 1)
    throw std::invalid_argument("exp_contract: vector form part must have degree 1");
  Form acc = x;
  Form term = x;
  for (int m = 1; !term.is_zero(); ++m) {
    if (m > 2 * x.n() + 2) throw std::logic_error("exp_contract: contraction failed to nilpotate");
    term = contract(k, term).scaled(GaussRational(Rational(1, m)));
    acc += term;
  }
  return acc;
}

Form substitute_letters(const Form& x, const std::vector<Form>& images) {
  Form out(x.n());
  for (const auto& [w, c] : x.terms()) {
    Form prod(x.n());
    prod.add(Word{}, c);
    for (auto g : w) {
      prod = wedge(prod, images[g]);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

namespace {

ParamSetPtr params_of_vector(const VectorForm& v) {
  if (!v.terms().empty()) return v.terms().begin()->second.params();
  return nullptr;
}

ParamSetPtr params_of_form(const Form& f) {
  if (!f.terms().empty()) return f.terms().begin()->second.params();
  return nullptr;
}

}  // namespace

Form rho_extend(const VectorForm& phi, const Form& x) {
  if (x.is_zero()) return x;
  int n = x.n();
  ParamSetPtr params = params_of_vector(phi);
  if (!params) params = params_of_form(x);
  VectorForm phibar = phi.conj();
  std::vector<Form> images;
  images.reserve(2 * n);
  for (int g = 0; g < 2 * n; ++g) {
    Form gen = gen_form(n, params, g);
    Form img = gen;
    img += contract(phi, gen);
    img += contract(phibar, gen);
    images.push_back(std::move(img));
  }
  return substitute_letters(x, images);
}

Matrix rho_degree_one_matrix(const VectorForm& phi, const std::vector<GaussRational>& point) {
  int n = phi.n();
  ParamSetPtr params = params_of_vector(phi);
  VectorForm phi_t = phi.evaluated(point);
  VectorForm phibar_t = phi.conj().evaluated(point);
  Matrix m(2 * n, 2 * n);
  for (int g = 0; g < 2 * n; ++g) {
    Form gen = gen_form(n, params, g);
    Form img = gen;
    img += contract(phi_t, gen);
    img += contract(phibar_t, gen);
    for (const auto& [w, c] : img.terms()) {
      if (w.size() != 1) throw std::logic_error("rho: non-linear action on 1-forms");
      m.at(w[0], g) += c.constant_term();
    }
  }
  return m;
}

namespace {

Form matrix_images_substitute(const Form& x, const Matrix& m, const ParamSetPtr& params) {
  int n = x.n();
  std::vector<Form> images;
  images.reserve(2 * n);
  for (int g = 0; g < 2 * n; ++g) {
    Form img(n);
    for (int h = 0; h < 2 * n; ++h)
      img.add(Word{static_cast<std::uint8_t>(h)}, Poly::constant(params, m.at(h, g)));
    images.push_back(std::move(img));
  }
  return substitute_letters(x, images);
}

}  // namespace

Form rho_extend_at(const VectorForm& phi, const std::vector<GaussRational>& point, const Form& x) {
  if (x.is_zero()) return x;
  ParamSetPtr params = params_of_vector(phi);
  if (!params) params = params_of_form(x);
  return matrix_images_substitute(x, rho_degree_one_matrix(phi, point), params);
}

Form rho_inverse_at(const VectorForm& phi, const std::vector<GaussRational>& point, const Form& x) {
  if (x.is_zero()) return x;
  ParamSetPtr params = params_of_vector(phi);
  if (!params) params = params_of_form(x);
  Matrix m = rho_degree_one_matrix(phi, point);
  Matrix minv;
  try {
    minv = m.inverse();
  } catch (const std::domain_error&) {
    throw std::domain_error("rho_inverse: deformed frame is singular at this point");
  }
  return matrix_images_substitute(x, minv, params);
}

BundleSpec BundleSpec::omega(int p) {
  if (p < 1) throw std::invalid_argument("BundleSpec: WedgeOmega needs p >= 1");
  BundleSpec b;
  b.factors.push_back({Factor::WedgeOmega, p});
  return b;
}

BundleSpec BundleSpec::tangent() {
  BundleSpec b;
  b.factors.push_back({Factor::Tangent, 0});
  return b;
}

BundleSpec BundleSpec::canonical_power(int n, int m) {
  BundleSpec b;
  for (int i = 0; i < m; ++i) b.factors.push_back({Factor::WedgeOmega, n});
  return b;
}

BundleSpec BundleSpec::tensor(const BundleSpec& o) const {
  BundleSpec b(*this);
  b.factors.insert(b.factors.end(), o.factors.begin(), o.factors.end());
  return b;
}

std::string BundleSpec::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    if (factors[i].kind == Factor::Tangent)
      out += "T";
    else
      out += "O^" + std::to_string(factors[i].p);
  }
  return out;
}

BundleSpec BundleSpec::parse(const std::string& s, int n) {
  BundleSpec b;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    std::string tok = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    pos = (star == std::string::npos) ? s.size() : star + 1;
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok == "1" || tok.empty()) continue;
    if (tok == "T") {
      b = b.tensor(tangent());
    } else if (tok == "K") {
      b = b.tensor(omega(n));
    } else if (tok.rfind("K^", 0) == 0) {
      b = b.tensor(canonical_power(n, std::stoi(tok.substr(2))));
    } else if (tok.rfind("O^", 0) == 0) {
      b = b.tensor(omega(std::stoi(tok.substr(2))));
    } else {
      throw std::invalid_argument("BundleSpec: cannot parse '" + tok + "'");
    }
  }
  return b;
}

void TensorForm::add(TensorKey key, const Poly& c) {
  if (c.is_zero()) return;
  int sign = normalize_word(key.qword);
  if (sign == 0) return;
  for (size_t i = 0; i < key.factors.size(); ++i) {
    if (bundle_.factors[i].kind == BundleSpec::Factor::WedgeOmega) {
      int s = normalize_word(key.factors[i]);
      if (s == 0) return;
      sign *= s;
    }
  }
  Poly v = (sign < 0) ? -c : c;
  auto [it, inserted] = terms_.emplace(std::move(key), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorForm TensorForm::operator-() const {
  TensorForm out(n_, bundle_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

TensorForm& TensorForm::operator+=(const TensorForm& o) {
  if (n_ == 0) {
    n_ = o.n_;
    bundle_ = o.bundle_;
  }
  if (!o.terms_.empty() && !(o.bundle_ == bundle_))
    throw std::invalid_argument("TensorForm: bundle mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorForm& TensorForm::operator-=(const TensorForm& o) {
  if (n_ == 0) {
    n_ = o.n_;
    bundle_ = o.bundle_;
  }
  if (!o.terms_.empty() && !(o.bundle_ == bundle_))
    throw std::invalid_argument("TensorForm: bundle mismatch");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorForm TensorForm::scaled(const Poly& c) const {
  TensorForm out(n_, bundle_);
  for (const auto& [k, v] : terms_) out.add(k, v * c);
  return out;
}

TensorForm TensorForm::scaled(const GaussRational& c) const {
  TensorForm out(n_, bundle_);
  for (const auto& [k, v] : terms_) out.add(k, v.scaled(c));
  return out;
}

std::optional<int> TensorForm::q() const {
  if (terms_.empty()) return std::nullopt;
  size_t q = terms_.begin()->first.qword.size();
  for (const auto& [k, c] : terms_)
    if (k.qword.size() != q) return std::nullopt;
  return static_cast<int>(q);
}

TensorForm TensorForm::coefficient_degree_part(int d) const {
  TensorForm out(n_, bundle_);
  for (const auto& [k, c] : terms_) out.add(k, c.homogeneous_part(d));
  return out;
}

TensorForm TensorForm::evaluated(const std::vector<GaussRational>& point) const {
  TensorForm out(n_, bundle_);
  for (const auto& [k, c] : terms_) out.add(k, Poly::constant(c.params(), c.eval(point)));
  return out;
}

bool TensorForm::coefficients_holomorphic() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_holomorphic()) return false;
  return true;
}

std::string TensorForm::str() const {
  std::vector<std::string> parts;
  for (const auto& [k, c] : terms_) {
    std::string body = word_str(k.qword, n_);
    for (size_t i = 0; i < k.factors.size(); ++i) {
      body += " (x) ";
      if (bundle_.factors[i].kind == BundleSpec::Factor::Tangent)
        body += "v" + std::to_string(static_cast<int>(k.factors[i][0]) + 1);
      else
        body += word_str(k.factors[i], n_);
    }
    parts.push_back(coeff_term_str(c, body));
  }
  return join_terms(parts);
}

TensorForm tensor_from_scalar(const Form& x, int p) {
  TensorForm out(x.n(), p == 0 ? BundleSpec::trivial() : BundleSpec::omega(p));
  for (const auto& [w, c] : x.terms()) {
    Word fpart, fbpart;
    for (auto g : w) (g < x.n() ? fpart : fbpart).push_back(g);
    if (static_cast<int>(fpart.size()) != p)
      throw std::invalid_argument("tensor_from_scalar: form is not of pure f-degree " +
                                  std::to_string(p));
    int sign = (fpart.size() * fbpart.size()) % 2 ? -1 : 1;
    TensorKey key;
    key.qword = fbpart;
    if (p > 0) key.factors.push_back(fpart);
    out.add(std::move(key), sign < 0 ? -c : c);
  }
  return out;
}

Form scalar_from_tensor(const TensorForm& x) {
  const auto& factors = x.bundle().factors;
  if (factors.size() > 1 ||
      (factors.size() == 1 && factors[0].kind != BundleSpec::Factor::WedgeOmega))
    throw std::invalid_argument("scalar_from_tensor: bundle is not trivial or a single O^p");
  Form out(x.n());
  for (const auto& [k, c] : x.terms()) {
    Word w;
    size_t p = 0;
    if (!k.factors.empty()) {
      w = k.factors[0];
      p = w.size();
    }
    w.insert(w.end(), k.qword.begin(), k.qword.end());
    int sign = (p * k.qword.size()) % 2 ? -1 : 1;
    out.add(std::move(w), sign < 0 ? -c : c);
  }
  return out;
}

TensorForm tensor_from_vector(const VectorForm& x) {
  if (x.type() != VecType::T10)
    throw std::invalid_argument("tensor_from_vector: needs a T^{1,0}-valued form");
  if (!x.has_pure_01_words())
    throw std::invalid_argument("tensor_from_vector: form part must be of type (0,q)");
  TensorForm out(x.n(), BundleSpec::tangent());
  for (const auto& [k, c] : x.terms()) {
    TensorKey key;
    key.qword = k.first;
    key.factors.push_back(Word{k.second});
    out.add(std::move(key), c);
  }
  return out;
}

VectorForm vector_from_tensor(const TensorForm& x) {
  if (!(x.bundle() == BundleSpec::tangent()))
    throw std::invalid_argument("vector_from_tensor: bundle must be T");
  VectorForm out(x.n(), VecType::T10);
  for (const auto& [k, c] : x.terms()) out.add(k.qword, k.factors[0][0], c);
  return out;
}

namespace {

void subsets(int lo, int hi, int size, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int g = lo; g <= hi - (size - static_cast<int>(cur.size())) + 1; ++g) {
    cur.push_back(static_cast<std::uint8_t>(g));
    subsets(g + 1, hi, size, cur, out);
    cur.pop_back();
  }
}

std::vector<Word> words_of(int lo, int hi, int size) {
  std::vector<Word> out;
  Word cur;
  if (size <= hi - lo + 1) subsets(lo, hi, size, cur, out);
  return out;
}

}  // namespace

TensorBasis TensorBasis::enumerate(int n, const BundleSpec& bundle, int q) {
  TensorBasis b;
  b.n = n;
  b.bundle = bundle;
  b.q = q;
  std::vector<Word> qwords = words_of(n, 2 * n - 1, q);
  std::vector<std::vector<Word>> factor_words;
  for (const auto& f : bundle.factors) {
    if (f.kind == BundleSpec::Factor::Tangent) {
      std::vector<Word> vs;
      for (int i = 0; i < n; ++i) vs.push_back(Word{static_cast<std::uint8_t>(i)});
      factor_words.push_back(std::move(vs));
    } else {
      factor_words.push_back(words_of(0, n - 1, f.p));
    }
  }
  bool any_empty_factor = false;
  for (const auto& words : factor_words) any_empty_factor = any_empty_factor || words.empty();
  std::vector<int> idx(bundle.factors.size(), 0);
  for (const auto& qw : qwords) {
    if (any_empty_factor) break;
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      TensorKey key;
      key.qword = qw;
      for (size_t i = 0; i < idx.size(); ++i) key.factors.push_back(factor_words[i][idx[i]]);
      b.keys.push_back(std::move(key));
      // Odometer over the factor choices.
      int carry = static_cast<int>(idx.size()) - 1;
      while (carry >= 0 && ++idx[carry] == static_cast<int>(factor_words[carry].size()))
        idx[carry--] = 0;
      if (carry < 0) break;
    }
  }
  for (size_t i = 0; i < b.keys.size(); ++i) b.index[b.keys[i]] = static_cast<int>(i);
  return b;
}

std::vector<Poly> TensorBasis::coords(const TensorForm& x) const {
  std::vector<Poly> out(keys.size());
  for (const auto& [k, c] : x.terms()) {
    auto it = index.find(k);
    if (it == index.end()) throw std::logic_error("TensorBasis: term outside graded piece");
    out[it->second] = c;
  }
  return out;
}

std::vector<GaussRational> TensorBasis::coords_at(const TensorForm& x,
                                                  const std::vector<GaussRational>& point) const {
  std::vector<GaussRational> out(keys.size());
  for (const auto& [k, c] : x.terms()) {
    auto it = index.find(k);
    if (it == index.end()) throw std::logic_error("TensorBasis: term outside graded piece");
    out[it->second] = c.eval(point);
  }
  return out;
}

TensorForm TensorBasis::from_coords(const ParamSetPtr& params,
                                    const std::vector<GaussRational>& coords) const {
  TensorForm out(n, bundle);
  for (size_t i = 0; i < keys.size(); ++i)
    if (!coords[i].is_zero()) out.add(keys[i], Poly::constant(params, coords[i]));
  return out;
}

Poly inner_product(const TensorForm& a, const TensorForm& b) {
  if (!a.terms().empty() && !b.terms().empty() && !(a.bundle() == b.bundle()))
    throw std::invalid_argument("inner_product: bundle mismatch");
  Poly out;
  for (const auto& [k, c] : a.terms()) {
    auto it = b.terms().find(k);
    if (it != b.terms().end()) out += c * it->second.conj();
  }
  return out;
}

}  // namespace doldef
