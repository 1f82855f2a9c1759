#pragma once

#include "reflact/arrangement.hpp"
#include "reflact/cyclotomic.hpp"
#include "reflact/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace reflact {

class OrderCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotStable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotNormal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kDefaultOrderCap = 100000;

/// Finite subgroup of GL_n over Q(zeta_m), fully enumerated.
///
/// Elements are held as permutations of a finite G-stable point set (the
/// union of the orbits of the standard basis vectors), which is faithful
/// because it contains a basis. Element 0 is the identity; the rest follow
/// in breadth-first order, a child being generator * parent.
class MatrixGroup {
 public:
  /// Throws OrderCapExceeded if more than `cap` elements turn up, and
  /// std::invalid_argument for non-square, mismatched or singular input.
  static MatrixGroup generate(const std::vector<CycMatrix>& gens, std::size_t cap = kDefaultOrderCap);

  int dim() const { return dim_; }
  int conductor() const { return conductor_; }
  std::size_t order() const { return order_; }
  std::size_t num_generators() const { return gens_.size(); }
  const std::vector<CycMatrix>& generators() const { return gens_; }
  int generator_element(std::size_t k) const { return gen_elem_[k]; }

  const CycMatrix& matrix(int g) const { return mats_[g]; }
  /// Element index of g*h.
  int multiply(int g, int h) const;
  /// Element index of gens[k] * g; a table lookup.
  int left_mul(std::size_t k, int g) const { return lmul_[k * order_ + g]; }
  int inverse(int g) const { return inv_[g]; }
  int element_order(int g) const { return elem_order_[g]; }
  /// BFS tree: g = gens[parent_gen(g)] * parent(g) for g != 0.
  int parent(int g) const { return parent_[g]; }
  int parent_gen(int g) const { return parent_gen_[g]; }
  /// Index of a matrix in the group, or -1.
  int find(const CycMatrix& m) const;

  /// Image of a column vector.
  std::vector<Cyc> apply(int g, const std::vector<Cyc>& v) const;

 private:
  using Perm = std::vector<std::uint32_t>;
  int lookup(const std::uint32_t* p) const;
  std::uint64_t perm_hash(const std::uint32_t* p) const;
  const std::uint32_t* perm(int g) const { return perms_.data() + static_cast<std::size_t>(g) * npts_; }

  int dim_ = 0;
  int conductor_ = 1;
  std::size_t order_ = 0;
  std::size_t npts_ = 0;
  std::vector<CycMatrix> gens_;
  std::vector<int> gen_elem_;
  std::vector<std::vector<Cyc>> points_;
  std::vector<std::size_t> basis_points_;
  std::vector<std::uint32_t> perms_;
  std::unordered_multimap<std::uint64_t, int> index_;
  std::vector<CycMatrix> mats_;
  std::vector<int> lmul_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  std::vector<int> parent_;
  std::vector<int> parent_gen_;
};

/// g.H = ker(alpha g^{-1}), tabulated as a permutation of hyperplane indices
/// for every element.
class HyperplaneAction {
 public:
  /// Throws NotStable if a generator maps a hyperplane outside A.
  HyperplaneAction(const MatrixGroup& g, const Arrangement& a);
  int image(int g, int h) const { return perm_[static_cast<std::size_t>(g) * n_ + h]; }
  const int* perm(int g) const { return perm_.data() + static_cast<std::size_t>(g) * n_; }
  std::size_t num_hyperplanes() const { return n_; }
  /// Sorted image of a flat key.
  FlatKey image(int g, const FlatKey& key) const;

 private:
  std::size_t n_ = 0;
  std::vector<int> perm_;
};

struct Reflection {
  int element;
  Hyperplane hyperplane;
};

std::vector<Reflection> reflections(const MatrixGroup& g);
Arrangement reflection_arrangement(const MatrixGroup& g);

struct OrbitDatum {
  int rep;                 // flat id of X_T: least key in the orbit
  std::vector<int> orbit;  // flat ids, sorted by key
  std::vector<int> Z;      // pointwise stabilizer of X_T
  std::vector<int> N;      // setwise stabilizer of X_T
  int codim = 0;
};

/// Orbits of G on L(A), ordered by codimension then representative key.
std::vector<OrbitDatum> orbits_on_lattice(const MatrixGroup& g, const HyperplaneAction& act,
                                          const IntersectionLattice& lattice);

std::vector<int> pointwise_stabilizer(const MatrixGroup& g, const Flat& x);
std::vector<int> setwise_stabilizer(const MatrixGroup& g, const HyperplaneAction& act, const Flat& x);

/// Sorted element indices of the subgroup generated by the given elements.
std::vector<int> subgroup_closure(const MatrixGroup& g, const std::vector<int>& gens);
/// Smallest normal subgroup containing the given elements.
std::vector<int> normal_closure(const MatrixGroup& g, const std::vector<int>& gens);
std::vector<int> derived_subgroup(const MatrixGroup& g);

std::vector<int> center(const MatrixGroup& g);
/// Classes ordered by least element; each class sorted.
std::vector<std::vector<int>> conjugacy_classes(const MatrixGroup& g);

/// Homomorphism G -> mu_e stored as exponents: chi(g) = zeta_e^{exp[g]}.
struct LinearCharacter {
  int e = 1;
  std::vector<int> exps;

  Cyc value(int g) const { return Cyc::zeta(e, exps[g]); }
  /// chi(g^{-1}) = conj(chi(g)).
  Cyc value_inv(int g) const { return Cyc::zeta(e, (e - exps[g]) % e); }
  bool is_trivial() const;
  friend bool operator==(const LinearCharacter& a, const LinearCharacter& b);
};

LinearCharacter trivial_character(const MatrixGroup& g);

/// All linear characters, trivial first, then in lexicographic order of the
/// generator exponents.
std::vector<LinearCharacter> linear_characters(const MatrixGroup& g);

/// det restricted to G.
LinearCharacter det_character(const MatrixGroup& g);
LinearCharacter inverse_character(const LinearCharacter& c);

/// Characters whose value on every reflection has the order of that
/// reflection. A group without reflections yields an empty list.
std::vector<LinearCharacter> determinant_like_characters(const MatrixGroup& g);

}  // namespace reflact
