#pragma once

#include "reflact/arrangement.hpp"
#include "reflact/catalog.hpp"
#include "reflact/groups.hpp"
#include "reflact/osalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace reflact {

class NonIntegral : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnlabeledPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyArrangement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An arrangement with a group permuting it, plus lazily built data: the OS
/// algebra, the hyperplane action, orbits on L(A) and the OS algebras of the
/// orbit representatives' subarrangements. Caches fill on demand, so one
/// Pair must not be shared between threads.
class Pair {
 public:
  /// Throws NotStable if G does not permute A.
  Pair(MatrixGroup g, Arrangement a, std::optional<FamilySpec> family = std::nullopt);

  const MatrixGroup& group() const { return g_; }
  const Arrangement& arrangement() const { return os_->arrangement(); }
  const OSAlgebra& os() const { return *os_; }
  const IntersectionLattice& lattice() const { return os_->lattice(); }
  const HyperplaneAction& action() const { return *act_; }
  const std::vector<OrbitDatum>& orbits() const;
  const std::optional<FamilySpec>& family() const { return family_; }

  /// Top-degree OS algebra of A_X for the representative of orbit t.
  const OSAlgebra& sub_os(std::size_t t) const;
  /// Orbit index containing a flat.
  int orbit_of(int flat) const;
  /// Display names of the orbits' stabilizer types.
  const std::vector<std::string>& orbit_names() const;

  /// Marks hyperplanes of long roots; used only for display names.
  void set_long_root(const Covector& c);
  void set_cox(std::vector<CoxEntry> cox) { cox_ = std::move(cox); }
  const std::optional<std::vector<CoxEntry>>& cox() const { return cox_; }

  std::vector<const int*> perms(const std::vector<int>& elems) const;
  std::vector<const int*> all_perms() const;

  /// tr(g | H^k) for every element, cached.
  const std::vector<std::int64_t>& global_traces(int k) const;
  /// tr(n | H^{cd T}(M(A_X))) for n in N_T (in orbits()[t].N order), cached.
  const std::vector<std::int64_t>& orbit_traces(std::size_t t) const;

 private:
  MatrixGroup g_;
  std::unique_ptr<OSAlgebra> os_;
  std::unique_ptr<HyperplaneAction> act_;
  std::optional<FamilySpec> family_;
  std::optional<std::vector<CoxEntry>> cox_;
  std::optional<std::vector<char>> long_mirror_;
  mutable std::optional<std::vector<OrbitDatum>> orbits_;
  mutable std::map<std::size_t, std::unique_ptr<OSAlgebra>> sub_os_;
  mutable std::vector<int> orbit_of_;
  mutable std::optional<std::vector<std::string>> names_;
  mutable std::map<int, std::vector<std::int64_t>> global_traces_;
  mutable std::map<std::size_t, std::vector<std::int64_t>> orbit_traces_;
  mutable std::map<std::size_t, std::vector<std::vector<int>>> sub_perms_;
};

/// (1/|S|) sum_{g in S} chi(g^{-1}) t_g, asserted to be a nonnegative integer.
long average_to_dim(const std::vector<int>& elems, const std::vector<std::int64_t>& traces, const LinearCharacter& chi);

/// dim H^k(M(A))^chi from traces over all of G.
long isotypic_dim_global(const Pair& p, const LinearCharacter& chi, int k);

/// dim K_T^chi for orbit t, from N_T acting on the top degree of A_X.
long orbit_dim(const Pair& p, const LinearCharacter& chi, std::size_t t);

/// Rank of sum_g chi(g^{-1}) M_g on degree k over the cyclotomic field.
long projection_rank_dim(const Pair& p, const LinearCharacter& chi, int k);

struct OrbitReport {
  std::size_t orbit = 0;
  int codim = 0;
  FlatKey rep_key;
  long dim = 0;
  std::string type;
};

struct InvariantReport {
  std::vector<OrbitReport> orbits;
  std::vector<long> poincare;
  std::string method;
};

InvariantReport isotypic_dims_orbitwise(const Pair& p, const LinearCharacter& chi);

/// Coefficients of P(A,G;t) for chi; orbitwise, asserted against the global method.
std::vector<long> poincare_invariants(const Pair& p, const LinearCharacter& chi);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string s) {
    ok = false;
    failures.push_back(std::move(s));
  }
};

/// dim K_T = [G:N_T] dim H^{cd T}(M(A_T)) per orbit, and the global isotypic
/// dims equal the orbitwise sums.
CheckReport lehrer_solomon_check(const Pair& p, const LinearCharacter& chi);

/// dim H^{rk A}(M(A))^G != 0. Throws EmptyArrangement.
bool high_degree_invariants(const Pair& p);

/// Alternating sum of isotypic dims vanishes, i.e. (1+t) divides P.
bool euler_identity_check(const Pair& p, const LinearCharacter& chi);

struct CoxBasisEntry {
  std::size_t orbit = 0;
  std::string type;
  std::vector<Monomial> monomials;
  std::vector<OSElement> projections;  // e_G times each monomial
};

struct Theorem4Basis {
  std::vector<CoxBasisEntry> entries;
  std::size_t cardinality = 0;
};

/// Cox monomials from the pair's explicit tuples, the catalog family, or the
/// rank-2 rule. Throws UnlabeledPair if none applies.
std::vector<CoxEntry> cox_entries(const Pair& p);

/// Builds and certifies the basis of H^*(M(A))^G: projections nonzero,
/// linearly independent per degree, one entry per orbit in CT_G with as many
/// elements as dim K_T^G, and d injective on the top-degree part.
/// Throws VerificationFailure.
Theorem4Basis theorem4_basis(const Pair& p);

/// e_G x as a vector of NBC coefficients.
OSElement project_invariant(const Pair& p, const Monomial& mono);

struct RelativeOrbit {
  std::size_t orbit = 0;
  long dim = 0;                         // dim K_T^G
  std::map<std::size_t, long> mult;     // linear character of G~ -> multiplicity
  long nonlinear_dim = 0;               // part not accounted for by linear characters
};

class ClassMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Character of G~ on each K_T^G, decomposed over the linear characters of
/// G~ (in linear_characters order). Throws NotNormal unless G is a normal
/// subgroup of G~, NotStable if G~ does not permute A.
std::vector<RelativeOrbit> relative_character(const Pair& p, const MatrixGroup& big);

/// Order-two linear character of G~ whose kernel contains `kernel`.
/// Throws std::invalid_argument unless exactly one exists.
std::size_t select_sigma(const MatrixGroup& big, const std::vector<LinearCharacter>& chars,
                         const std::vector<int>& kernel);

/// <chi_{H^k}, phi> with phi given per conjugacy class (conjugacy_classes order).
Cyc multiplicity_classfn(const Pair& p, const std::vector<Cyc>& phi, int k);

/// Every determinant-like character has multiplicity 0 in every degree.
CheckReport vanishing_check_detlike(const Pair& p);

}  // namespace reflact
