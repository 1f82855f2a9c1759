#pragma once

#include "reflact/cyclotomic.hpp"
#include "reflact/linalg.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace reflact {

class ZeroCovector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FlatNotInLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Covector = std::vector<Cyc>;
using FlatKey = std::vector<int>;

/// A hyperplane ker(alpha), stored by its canonical covector: the leftmost
/// nonzero coordinate is 1.
struct Hyperplane {
  Covector covector;
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.covector == b.covector;
  }
};

Hyperplane canonicalize_hyperplane(const Covector& raw);

/// Order used for hyperplanes: coordinates compared left to right, any
/// nonzero entry sorting before zero, nonzero entries compared by their
/// coefficient vectors. With it the braid covectors of C^3 come out as
/// x1-x2 < x1-x3 < x2-x3.
bool covector_less(const Covector& a, const Covector& b);

/// Central arrangement: distinct canonical hyperplanes in sorted order, all
/// covectors written over one conductor.
class Arrangement {
 public:
  Arrangement() = default;
  /// Canonicalizes, removes duplicates and sorts. Throws ZeroCovector.
  Arrangement(int dim, const std::vector<Covector>& covectors);

  int dim() const { return dim_; }
  int conductor() const { return conductor_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  /// Index of a canonical covector, or -1.
  int index_of(const Covector& canonical) const;
  /// Covector matrix restricted to a set of hyperplane indices.
  CycMatrix covector_matrix(const std::vector<int>& idx) const;
  CycMatrix covector_matrix() const;
  int rank() const;

 private:
  int dim_ = 0;
  int conductor_ = 1;
  std::vector<Hyperplane> hyperplanes_;
};

/// X in L(A), identified by A_X.
struct Flat {
  FlatKey key;
  CycMatrix basis;  // rows span X
  int codim = 0;
};

/// L(A) with flats grouped by codimension and a join table
/// join(f, i) = flat of X_f intersected with H_i.
class IntersectionLattice {
 public:
  std::size_t size() const { return flats_.size(); }
  const Flat& flat(int id) const { return flats_[id]; }
  const std::vector<Flat>& flats() const { return flats_; }
  const std::vector<int>& by_codim(int k) const { return by_codim_.at(k); }
  int rank() const { return static_cast<int>(by_codim_.size()) - 1; }
  /// Flat id for a key, or -1.
  int find(const FlatKey& key) const;
  int join(int flat, int hyperplane) const { return join_[flat * n_hyp_ + hyperplane]; }
  /// Flat spanned by the intersection of the given hyperplanes.
  int closure(const std::vector<int>& hyperplanes) const;
  int closure_mask(std::uint64_t mask) const;
  int top() const { return by_codim_.back().front(); }

 private:
  friend IntersectionLattice build_lattice(const Arrangement&);
  std::size_t n_hyp_ = 0;
  std::vector<Flat> flats_;
  std::vector<std::vector<int>> by_codim_;
  std::map<FlatKey, int> index_;
  std::vector<int> join_;
};

/// Breadth-first closure from V, one codimension at a time.
IntersectionLattice build_lattice(const Arrangement& a);

/// A_X: the hyperplanes of a whose index is in x.key, order preserved.
Arrangement subarrangement(const Arrangement& a, const IntersectionLattice& lattice, const Flat& x);

struct Essentialization {
  Arrangement arrangement;  // in C^{rk A}
  CycMatrix projection;     // rk A x n, rows a basis of the covector span
};

Essentialization essentialize(const Arrangement& a);

/// Basis of ker of the given covectors inside C^n (rows of the result).
CycMatrix kernel_rows(const CycMatrix& covectors, int n, int conductor);

}  // namespace reflact
