#pragma once

#include "reflact/arrangement.hpp"
#include "reflact/linalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace reflact {

using Mask = std::uint64_t;
using Monomial = std::vector<int>;

/// Sparse integer combination of NBC monomials of one degree: (index, coef).
using IntTerms = std::vector<std::pair<int, std::int64_t>>;

/// Element of the degree-k piece, coefficients keyed by NBC index.
struct OSElement {
  int k = 0;
  std::map<int, Rat> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void add(int idx, const Rat& c);
};

struct BrieskornComponent {
  int flat = -1;
  int k = 0;
  std::vector<int> nbc;  // indices into nbc_basis(k)
};

/// Orlik-Solomon algebra of an arrangement over Q in the NBC basis for the
/// arrangement's hyperplane order. At most 64 hyperplanes.
///
/// Straightening tables are built per degree on first use and are read-only
/// afterwards, so every const member is safe to call from several threads.
class OSAlgebra {
 public:
  explicit OSAlgebra(Arrangement a);

  const Arrangement& arrangement() const { return a_; }
  const IntersectionLattice& lattice() const { return lattice_; }
  int rank() const { return lattice_.rank(); }
  std::size_t num_hyperplanes() const { return a_.size(); }

  /// NBC monomials of degree k in lexicographic order.
  const std::vector<Monomial>& nbc_basis(int k) const;
  std::size_t dim(int k) const { return nbc_basis(k).size(); }
  /// Flat spanned by the j-th NBC monomial of degree k.
  int nbc_flat(int k, int j) const;
  int nbc_index(int k, const Monomial& sorted) const;

  bool is_independent(Mask m) const;

  /// Image of h_{i1}...h_{ik} in the NBC basis; any order, repeats allowed.
  IntTerms straighten_terms(const Monomial& mono) const;
  OSElement straighten(const Monomial& mono) const;

  /// Same for a permuted monomial: h_{perm[i1]}...h_{perm[ik]}.
  IntTerms straighten_image(const int* perm, const Monomial& mono) const;

  /// Column j is the image of NBC monomial j under the hyperplane permutation.
  RatMatrix action_matrix(const int* perm, int k) const;

  /// d(h_1...h_k) = sum_i (-1)^{i-1} h_1...^h_i...h_k. Throws for k = 0.
  OSElement euler_derivation(const OSElement& x) const;
  /// Matrix of d from degree k to degree k-1.
  RatMatrix euler_matrix(int k) const;

  std::vector<BrieskornComponent> brieskorn_components(int k) const;

  /// Minimal dependent subsets, sorted.
  std::vector<std::vector<int>> circuits() const;

  /// Product of two elements (concatenation, then straightening).
  OSElement multiply(const OSElement& x, const OSElement& y) const;

  /// Increasing tuple from a mask.
  static Monomial to_monomial(Mask m);
  static Mask to_mask(const Monomial& sorted);

 private:
  struct Degree {
    std::vector<Monomial> nbc;
    std::vector<int> flats;
    std::unordered_map<Mask, int> nbc_idx;
    std::unordered_map<Mask, IntTerms> table;  // every independent k-subset
  };
  const Degree& degree(int k) const;
  void build_degree(int k) const;
  IntTerms reduce(Mask m, Degree& d) const;

  Arrangement a_;
  IntersectionLattice lattice_;
  mutable std::vector<std::unique_ptr<Degree>> degrees_;
  mutable std::vector<std::unique_ptr<std::once_flag>> once_;
};

/// Sorts a sequence with sign; 0 if it has a repeated entry.
int sort_with_sign(std::vector<int>& seq);

}  // namespace reflact
