#ifndef DOLDEF_POLY_HPP
#define DOLDEF_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "doldef/rational.hpp"

namespace doldef {

/// Ordered deformation parameters t_1..t_r. Each parameter name must start
/// with 't'; its formal conjugate is named by inserting 'b' ("t11" -> "tb11").
class ParamSet {
 public:
  explicit ParamSet(std::vector<std::string> names);

  int count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  std::string conj_name(int i) const { return "tb" + names_[i].substr(1); }
  const std::vector<std::string>& names() const { return names_; }

  /// Resolves "t.." or "tb.." to a variable index in [0, 2r):
  /// plain parameters first, conjugates at r + i.
  std::optional<int> var_index(const std::string& name) const;

  friend bool operator==(const ParamSet& a, const ParamSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

ParamSetPtr make_params(std::vector<std::string> names);

/// Exponent vector over (t_1..t_r, tb_1..tb_r).
using Mono = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial over GaussRational in the parameters and
/// their formal conjugates. Terms are kept in a canonically ordered map with
/// no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(ParamSetPtr params) : params_(std::move(params)) {}

  static Poly constant(ParamSetPtr params, GaussRational c);
  static Poly variable(ParamSetPtr params, int i, bool conjugated = false);

  const ParamSetPtr& params() const { return params_; }
  const std::map<Mono, GaussRational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero polynomial has constant term 0).
  GaussRational constant_term() const;

  void add_term(const Mono& m, const GaussRational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const GaussRational& c) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Swaps t_i <-> tb_i and conjugates coefficients; an involution.
  Poly conj() const;

  /// True iff no conjugate variable occurs.
  bool is_holomorphic() const;

  /// Total degree (t and tb exponents both count); -1 for the zero polynomial.
  int degree() const;
  Poly homogeneous_part(int d) const;
  Poly truncated(int max_degree) const;

  /// Exact evaluation; point assigns every plain parameter, conjugates
  /// receive the conjugate value automatically.
  GaussRational eval(const std::vector<GaussRational>& point) const;

  /// Substitutes t_i -> images[i] (a polynomial over the images' parameter
  /// set); tb_i substitutes the conjugate image.
  Poly substituted(const std::vector<Poly>& images) const;

  std::string str() const;
  /// Parses the grammar of str(): signed monomials "c * t11^2 * tb12",
  /// "t11*t22 - t21*t12", bare constants like "1/2" or "(1+i)".
  static Poly parse(const ParamSetPtr& params, const std::string& s);

 private:
  ParamSetPtr params_;
  std::map<Mono, GaussRational> terms_;

  void check_compatible(const Poly& o) const;
};

}  // namespace doldef

#endif
