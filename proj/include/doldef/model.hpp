#ifndef DOLDEF_MODEL_HPP
#define DOLDEF_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "doldef/algebra.hpp"

namespace doldef {

/// Lie brackets of the invariant frame vectors, derived from the structure
/// equations via xi([X,Y]) = -d xi(X,Y). Vectors are indexed like generators:
/// v_i = i, vb_i = n + i.
class BracketTable {
 public:
  BracketTable() = default;
  BracketTable(int n) : n_(n) {}

  /// Components of [X, Y] over the 2n frame vectors.
  const std::vector<GaussRational>& bracket(int x, int y) const;
  void set(int x, int y, std::vector<GaussRational> components);

  bool jacobi_holds() const;
  bool closed_under_conjugation() const;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, std::vector<GaussRational>> table_;  // x < y only
  mutable std::vector<GaussRational> scratch_;
};

/// Finite invariant-form model of a compact complex manifold: generators
/// f1..fn / fb1..fbn and constant structure equations for d. The (0,1)-side
/// differentials default to the formal conjugates of the (1,0)-side; models
/// whose invariant complex is not conjugation-closed (Nakamura III-(3b))
/// override them explicitly.
class ModelSpec {
 public:
  std::string name;
  int n = 0;
  ParamSetPtr params;
  std::vector<Form> d_table;              // size 2n once finalized
  std::vector<bool> d_explicit;           // true where d was given, not derived
  bool has_explicit_fb = false;           // any fb-side d given explicitly
  std::optional<VectorForm> beltrami;     // declared phi(t), T^{1,0}-valued (0,1)
  bool asserted_mc = false;               // declared phi shipped without MC proof

  /// Sets d(generator) from structure data; gen in [0, 2n).
  void set_d(int gen, Form value);

  /// Derives missing fb-side differentials by conjugation and the bracket
  /// table; must be called once after all set_d calls.
  void finalize();
  bool finalized() const { return finalized_; }

  const BracketTable& brackets() const;

  /// Leibniz extension of the structure equations to any invariant form.
  Form apply_d(const Form& x) const;

  int gen_index(const std::string& name) const;          // "f2" -> 1, "fb3" -> n+2
  std::string gen_name(int index) const;
  int vec_index(const std::string& name) const;          // "v2" -> 1, "vb1" -> n
  std::string vec_name(int index) const;

  Form generator(int index) const { return gen_form(n, params, index); }

  bool conjugation_closed() const { return !has_explicit_fb; }

 private:
  bool finalized_ = false;
  BracketTable brackets_;
};

/// Empty iff the model satisfies every structural invariant; each violation
/// names the generator and failing condition.
std::vector<std::string> validate_model(const ModelSpec& m);

BracketTable derive_brackets(const ModelSpec& m);

}  // namespace doldef

#endif
