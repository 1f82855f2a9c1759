#pragma once

#include "reflact/arrangement.hpp"
#include "reflact/groups.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reflact {

class UndefinedName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CrossCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ArrKind { Braid, Full, Zero };

/// Parameters of an infinite-family pair (A_n(r) or A_n^0(r), G(r,p,n)).
struct FamilySpec {
  int r = 1, p = 1, n = 1;
  ArrKind kind = ArrKind::Full;
};

/// |G(r,p,n)| = r^n n!/p, with G(r,p,0) trivial.
long grpn_order(int r, int p, int n);

/// Generators: adjacent transpositions, diag(w^p,1,...,1) when p < r, and
/// (x1,x2) -> (w x2, w^{-1} x1) when p > 1, where w = zeta_r.
MatrixGroup make_grpn(int r, int p, int n, std::size_t cap = kDefaultOrderCap);

/// A_n^0(r) = {x_i = w^k x_j}; A_n(r) adds x_i = 0; the braid arrangement is A_n^0(1).
Arrangement make_arrangement(ArrKind kind, int r, int n);

/// Index in `a` of the hyperplane named s (x1 = 0), t_i (x_{i-1} = x_i) or
/// t_2^1 (x1 = w x2). Throws UndefinedName.
int named_hyperplane(const Arrangement& a, int r, const std::string& name);

struct OrbitLabel {
  std::vector<int> lambda;  // partition of m, weakly decreasing
  int m = 0;
  int u = 0;                // twist, < delta; nonzero only when m = n
  std::string type_name;
};

struct LabeledFlat {
  OrbitLabel label;
  int flat = -1;  // id in the lattice passed in
};

int delta(const std::vector<int>& lambda, int p);

/// Orbit labels with representatives d_0^u X_lambda located in `lattice`.
/// Throws CrossCheckFailure if a representative is not a flat of `a`.
std::vector<LabeledFlat> prop41_labels(const FamilySpec& f, const Arrangement& a, const IntersectionLattice& lattice);

/// Checks that the representatives meet every orbit exactly once.
/// Throws CrossCheckFailure otherwise.
void crosscheck_prop41(const std::vector<LabeledFlat>& labels, const std::vector<OrbitDatum>& orbits);

/// One cox monomial, or an E-pair of two, for one orbit type.
struct CoxEntry {
  std::string type;
  std::vector<std::vector<int>> monomials;
};

/// Cox monomials of the infinite family as hyperplane-index tuples of `a`.
std::vector<CoxEntry> family_cox(const FamilySpec& f, const Arrangement& a);

/// Rank-2 rule from hyperplane orbit representatives.
std::vector<CoxEntry> rank2_cox(const std::vector<OrbitDatum>& orbits, const IntersectionLattice& lattice);

/// Shipped data location: $REFLACT_DATA_DIR or the compiled-in default.
std::string data_dir();

/// Reads a group file {"conductor", "dim", "generators"}.
MatrixGroup load_group_file(const std::string& path, std::size_t cap = kDefaultOrderCap);

/// Optional "long_root" covector of a group file, marking root lengths.
std::optional<Covector> load_long_root(const std::string& path);

/// Reads a cox file {"cox": [{"type", "monomials": [[covector...]...]}]}
/// and maps covectors to indices of `a`.
std::vector<CoxEntry> load_cox_file(const std::string& path, const Arrangement& a);

/// Type of the reflection subgroup Z: components of the non-commuting graph
/// on its reflections, named by rank and reflection count. `long_orbit`
/// marks mirrors of long roots when root lengths differ.
std::string reflection_type(const MatrixGroup& g, const std::vector<int>& Z, const std::vector<char>* long_mirror,
                            const Arrangement& a);

/// Parses "G(r,p,n)", "W(n)"; returns nullopt for anything else.
std::optional<FamilySpec> parse_group_name(const std::string& s);
/// Parses "A_n(r)", "A_n^0(r)", "braid(n)".
std::optional<FamilySpec> parse_arrangement_name(const std::string& s);

}  // namespace reflact
