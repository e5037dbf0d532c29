#ifndef DOLDEF_ALGEBRA_HPP
#define DOLDEF_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "doldef/matrix.hpp"
#include "doldef/poly.hpp"

namespace doldef {

/// Generator indices: 0..n-1 are the (1,0)-generators f1..fn, n..2n-1 the
/// (0,1)-generators fb1..fbn. Words are strictly increasing index lists;
/// reordering signs are absorbed into coefficients.
using Word = std::vector<std::uint8_t>;

/// Sorts a concatenation into canonical order. Returns the permutation sign,
/// or 0 if a letter repeats (the wedge vanishes).
int normalize_word(Word& w);

std::string word_str(const Word& w, int n);

/// Invariant scalar form with Poly coefficients.
class Form {
 public:
  Form() = default;
  explicit Form(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<Word, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Word w, const Poly& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  Form scaled(const Poly& c) const;
  Form scaled(const GaussRational& c) const;

  /// Complex conjugation: swaps f_i <-> fb_i and conjugates coefficients.
  Form conj() const;

  /// Keeps only terms of bidegree (p,q).
  Form component(int p, int q) const;
  /// Keeps terms whose total degree is k.
  Form degree_component(int k) const;
  bool is_homogeneous(int* p = nullptr, int* q = nullptr) const;

  Form evaluated(const std::vector<GaussRational>& point) const;
  Form coefficient_degree_part(int d) const;

  std::string str() const;

 private:
  int n_ = 0;
  std::map<Word, Poly> terms_;
};

std::pair<int, int> word_bidegree(const Word& w, int n);

Form gen_form(int n, const ParamSetPtr& params, int index);
Form wedge(const Form& a, const Form& b);

/// Interior derivative against the dual pairing <v_i, f^j> = delta_i^j
/// (and <vb_i, fb^j> likewise); `vec` in [0, 2n) with vb at n + i.
Form interior(int vec, const Form& x);

enum class VecType { T10, T01 };

/// Vector-valued form: sum of (form word) ⊗ (frame vector), homogeneous
/// vector type. The form part of every term has the same bidegree in use.
class VectorForm {
 public:
  VectorForm() = default;
  VectorForm(int n, VecType t) : n_(n), type_(t) {}

  int n() const { return n_; }
  VecType type() const { return type_; }
  const std::map<std::pair<Word, std::uint8_t>, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Word w, std::uint8_t vec, const Poly& c);

  VectorForm operator-() const;
  VectorForm& operator+=(const VectorForm& o);
  VectorForm& operator-=(const VectorForm& o);
  friend VectorForm operator+(VectorForm a, const VectorForm& b) { return a += b; }
  friend VectorForm operator-(VectorForm a, const VectorForm& b) { return a -= b; }
  friend bool operator==(const VectorForm& a, const VectorForm& b) {
    return a.type_ == b.type_ && a.terms_ == b.terms_;
  }

  VectorForm scaled(const Poly& c) const;
  VectorForm conj() const;

  /// Form-part degree if homogeneous (e.g. 1 for a Beltrami differential).
  std::optional<int> form_degree() const;
  bool has_pure_01_words() const;

  VectorForm coefficient_degree_part(int d) const;
  VectorForm evaluated(const std::vector<GaussRational>& point) const;
  bool coefficients_holomorphic() const;

  std::string str() const;

 private:
  int n_ = 0;
  VecType type_ = VecType::T10;
  std::map<std::pair<Word, std::uint8_t>, Poly> terms_;
};

/// i_K x = sum over terms xi ⊗ X of xi ∧ (X ⌟ x).
Form contract(const VectorForm& k, const Form& x);

/// e^{i_K} for a vector 1-form K; finite sum by nilpotency.
Form exp_contract(const VectorForm& k, const Form& x);

/// Replaces each generator 1-form by images[g] and extends multiplicatively.
Form substitute_letters(const Form& x, const std::vector<Form>& images);

/// Extension operator on scalar forms: every generator letter g maps to
/// g + i_phi g + i_{conj phi} g, extended multiplicatively.
Form rho_extend(const VectorForm& phi, const Form& x);

/// Matrix of (1 + i_phi + i_{conj phi}) on 1-forms at a numeric point,
/// columns indexed by generators.
Matrix rho_degree_one_matrix(const VectorForm& phi, const std::vector<GaussRational>& point);

Form rho_extend_at(const VectorForm& phi, const std::vector<GaussRational>& point, const Form& x);

/// Inverse extension operator at a numeric point (multiplicative extension of
/// the inverse degree-one matrix). Throws std::domain_error if the frame
/// degenerates at the point.
Form rho_inverse_at(const VectorForm& phi, const std::vector<GaussRational>& point, const Form& x);

/// Holomorphic tensor bundle built from Omega^p = Λ^p Ω and the tangent
/// bundle T = T^{1,0}.
struct BundleSpec {
  struct Factor {
    enum Kind { WedgeOmega, Tangent } kind;
    int p = 0;  // only for WedgeOmega, p >= 1
    friend bool operator==(const Factor& a, const Factor& b) {
      return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator<(const Factor& a, const Factor& b) {
      if (a.kind != b.kind) return a.kind < b.kind;
      return a.p < b.p;
    }
  };
  std::vector<Factor> factors;  // empty = trivial bundle

  static BundleSpec trivial() { return {}; }
  static BundleSpec omega(int p);
  static BundleSpec tangent();
  static BundleSpec canonical(int n) { return omega(n); }
  static BundleSpec canonical_power(int n, int m);
  BundleSpec tensor(const BundleSpec& o) const;

  bool is_trivial() const { return factors.empty(); }
  friend bool operator==(const BundleSpec& a, const BundleSpec& b) {
    return a.factors == b.factors;
  }
  friend bool operator<(const BundleSpec& a, const BundleSpec& b) {
    return a.factors < b.factors;
  }

  std::string str() const;
  /// Grammar: "1" (trivial), "O^p", "T", "K", "K^m", products with '*'.
  static BundleSpec parse(const std::string& s, int n);
};

/// Key of a tensor monomial: the (0,q) word plus one basis word per factor
/// (a sorted f-word for WedgeOmega(p) factors, a single vector index for
/// Tangent factors).
struct TensorKey {
  Word qword;
  std::vector<Word> factors;
  friend bool operator<(const TensorKey& a, const TensorKey& b) {
    if (a.qword != b.qword) return a.qword < b.qword;
    return a.factors < b.factors;
  }
  friend bool operator==(const TensorKey& a, const TensorKey& b) {
    return a.qword == b.qword && a.factors == b.factors;
  }
};

/// E-valued (0,q)-form with Poly coefficients. The represented object is
/// (coefficient form) ⊗ e_1 ⊗ ... ⊗ e_m with the coefficient on the left.
class TensorForm {
 public:
  TensorForm() = default;
  TensorForm(int n, BundleSpec b) : n_(n), bundle_(std::move(b)) {}

  int n() const { return n_; }
  const BundleSpec& bundle() const { return bundle_; }
  const std::map<TensorKey, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(TensorKey key, const Poly& c);

  TensorForm operator-() const;
  TensorForm& operator+=(const TensorForm& o);
  TensorForm& operator-=(const TensorForm& o);
  friend TensorForm operator+(TensorForm a, const TensorForm& b) { return a += b; }
  friend TensorForm operator-(TensorForm a, const TensorForm& b) { return a -= b; }
  friend bool operator==(const TensorForm& a, const TensorForm& b) {
    return a.bundle_ == b.bundle_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorForm& a, const TensorForm& b) { return !(a == b); }

  TensorForm scaled(const Poly& c) const;
  TensorForm scaled(const GaussRational& c) const;

  std::optional<int> q() const;

  TensorForm coefficient_degree_part(int d) const;
  TensorForm evaluated(const std::vector<GaussRational>& point) const;
  bool coefficients_holomorphic() const;

  std::string str() const;

 private:
  int n_ = 0;
  BundleSpec bundle_;
  std::map<TensorKey, Poly> terms_;
};

/// Scalar (p,q)-form <-> Omega^p-valued (0,q)-form. The identification is
/// coefficient-first: the tensor term (J; I) corresponds to fb^J ∧ f^I, so
/// converting a canonically ordered word picks up the sign (-1)^{pq}.
TensorForm tensor_from_scalar(const Form& x, int p);
Form scalar_from_tensor(const TensorForm& x);

TensorForm tensor_from_vector(const VectorForm& x);
VectorForm vector_from_tensor(const TensorForm& x);

/// Deterministic basis of the invariant (bundle, q) graded piece.
struct TensorBasis {
  int n = 0;
  BundleSpec bundle;
  int q = 0;
  std::vector<TensorKey> keys;
  std::map<TensorKey, int> index;

  static TensorBasis enumerate(int n, const BundleSpec& bundle, int q);
  int dim() const { return static_cast<int>(keys.size()); }

  std::vector<Poly> coords(const TensorForm& x) const;
  std::vector<GaussRational> coords_at(const TensorForm& x,
                                       const std::vector<GaussRational>& point) const;
  TensorForm from_coords(const ParamSetPtr& params,
                         const std::vector<GaussRational>& coords) const;
};

/// Hermitian inner product with the tensor monomials orthonormal;
/// linear in the first slot, conjugated in the second.
Poly inner_product(const TensorForm& a, const TensorForm& b);

}  // namespace doldef

#endif
