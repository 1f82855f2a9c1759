#include "reflact/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace reflact {
namespace {

int common_conductor(const std::vector<Covector>& vs) {
  int m = 1;
  for (const auto& v : vs)
    for (const auto& x : v) m = std::lcm(m, x.conductor());
  return m;
}

Covector lifted(const Covector& v, int m) {
  Covector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.lift(std::lcm(m, x.conductor())));
  return out;
}

bool vanishes_on(const Covector& alpha, const CycMatrix& basis) {
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Cyc s = Cyc::zero(alpha.empty() ? 1 : alpha[0].conductor());
    for (std::size_t c = 0; c < alpha.size(); ++c) {
      if (alpha[c].is_zero() || basis(r, c).is_zero()) continue;
      s += alpha[c] * basis(r, c);
    }
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

Hyperplane canonicalize_hyperplane(const Covector& raw) {
  auto lead = std::find_if(raw.begin(), raw.end(), [](const Cyc& x) { return !x.is_zero(); });
  if (lead == raw.end()) throw ZeroCovector("hyperplane covector is zero");
  int m = 1;
  for (const auto& x : raw) m = std::lcm(m, x.conductor());
  const Cyc inv = lead->inverse();
  Hyperplane h;
  h.covector.reserve(raw.size());
  for (const auto& x : raw) h.covector.push_back((x * inv).lift(m));
  return h;
}

bool covector_less(const Covector& a, const Covector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool za = a[i].is_zero(), zb = b[i].is_zero();
    if (za != zb) return zb;
    if (za) continue;
    const int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Arrangement::Arrangement(int dim, const std::vector<Covector>& covectors) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative ambient dimension");
  conductor_ = common_conductor(covectors);
  for (const auto& raw : covectors) {
    if (static_cast<int>(raw.size()) != dim)
      throw std::invalid_argument("covector length does not match ambient dimension");
    Hyperplane h = canonicalize_hyperplane(lifted(raw, conductor_));
    h.covector = lifted(h.covector, conductor_);
    hyperplanes_.push_back(std::move(h));
  }
  std::sort(hyperplanes_.begin(), hyperplanes_.end(), [](const Hyperplane& a, const Hyperplane& b) {
    return covector_less(a.covector, b.covector);
  });
  hyperplanes_.erase(std::unique(hyperplanes_.begin(), hyperplanes_.end()), hyperplanes_.end());
}

int Arrangement::index_of(const Covector& canonical) const {
  auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), canonical,
                             [](const Hyperplane& h, const Covector& v) { return covector_less(h.covector, v); });
  if (it != hyperplanes_.end() && it->covector == canonical)
    return static_cast<int>(it - hyperplanes_.begin());
  return -1;
}

CycMatrix Arrangement::covector_matrix(const std::vector<int>& idx) const {
  CycMatrix m(idx.size(), dim_, Cyc::zero(conductor_));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = hyperplanes_.at(idx[r]).covector[c];
  return m;
}

CycMatrix Arrangement::covector_matrix() const {
  std::vector<int> all(size());
  std::iota(all.begin(), all.end(), 0);
  return covector_matrix(all);
}

int Arrangement::rank() const {
  if (empty()) return 0;
  return static_cast<int>(reflact::rank(covector_matrix()));
}

CycMatrix kernel_rows(const CycMatrix& covectors, int n, int conductor) {
  if (covectors.rows() == 0) {
    CycMatrix id(n, n, Cyc::zero(conductor));
    for (int i = 0; i < n; ++i) id(i, i) = Cyc(Rat(1), conductor);
    return id;
  }
  const auto ker = kernel_basis(covectors);
  CycMatrix out(ker.size(), n, Cyc::zero(conductor));
  for (std::size_t r = 0; r < ker.size(); ++r)
    for (int c = 0; c < n; ++c) out(r, c) = ker[r][c].lift(std::lcm(conductor, ker[r][c].conductor()));
  return out;
}

int IntersectionLattice::find(const FlatKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

int IntersectionLattice::closure(const std::vector<int>& hyperplanes) const {
  int f = 0;
  for (int h : hyperplanes) f = join(f, h);
  return f;
}

int IntersectionLattice::closure_mask(std::uint64_t mask) const {
  int f = 0;
  while (mask) {
    const int h = std::countr_zero(mask);
    f = join(f, h);
    mask &= mask - 1;
  }
  return f;
}

IntersectionLattice build_lattice(const Arrangement& a) {
  IntersectionLattice L;
  const int n = a.dim();
  const int m = a.conductor();
  L.n_hyp_ = a.size();

  Flat v;
  v.basis = kernel_rows(CycMatrix(0, n), n, m);
  v.codim = 0;
  L.flats_.push_back(v);
  L.index_[v.key] = 0;
  L.by_codim_.push_back({0});

  // join_ is filled per flat once the flat is processed.
  std::vector<std::vector<int>> joins;
  for (std::size_t pos = 0; pos < L.flats_.size(); ++pos) {
    std::vector<int> row(a.size(), -1);
    const FlatKey key = L.flats_[pos].key;
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (std::binary_search(key.begin(), key.end(), static_cast<int>(h))) {
        row[h] = static_cast<int>(pos);
        continue;
      }
      FlatKey gens = key;
      gens.insert(std::upper_bound(gens.begin(), gens.end(), static_cast<int>(h)), static_cast<int>(h));
      // X cap H: keep only those hyperplanes vanishing on the new kernel.
      const CycMatrix basis = kernel_rows(a.covector_matrix(gens), n, m);
      FlatKey closed;
      for (std::size_t j = 0; j < a.size(); ++j)
        if (vanishes_on(a[j].covector, basis)) closed.push_back(static_cast<int>(j));
      auto it = L.index_.find(closed);
      if (it != L.index_.end()) {
        row[h] = it->second;
        continue;
      }
      Flat f;
      f.key = closed;
      f.basis = basis;
      f.codim = n - static_cast<int>(basis.rows());
      const int id = static_cast<int>(L.flats_.size());
      L.index_[closed] = id;
      L.flats_.push_back(std::move(f));
      const int cd = L.flats_.back().codim;
      if (static_cast<int>(L.by_codim_.size()) <= cd) L.by_codim_.resize(cd + 1);
      L.by_codim_[cd].push_back(id);
      row[h] = id;
    }
    joins.push_back(std::move(row));
  }
  L.join_.reserve(L.flats_.size() * a.size());
  for (const auto& r : joins) L.join_.insert(L.join_.end(), r.begin(), r.end());
  for (auto& ids : L.by_codim_)
    std::sort(ids.begin(), ids.end(), [&](int x, int y) { return L.flats_[x].key < L.flats_[y].key; });
  return L;
}

Arrangement subarrangement(const Arrangement& a, const IntersectionLattice& lattice, const Flat& x) {
  if (lattice.find(x.key) < 0) throw FlatNotInLattice("flat is not in the lattice of the arrangement");
  std::vector<Covector> cov;
  for (int i : x.key) cov.push_back(a[i].covector);
  return Arrangement(a.dim(), cov);
}

Essentialization essentialize(const Arrangement& a) {
  Essentialization e;
  if (a.empty()) {
    e.arrangement = Arrangement(0, {});
    e.projection = CycMatrix(0, a.dim());
    return e;
  }
  const auto r = rref(a.covector_matrix());
  const int rk = static_cast<int>(r.rank);
  const int m = a.conductor();
  e.projection = CycMatrix(rk, a.dim(), Cyc::zero(m));
  for (int i = 0; i < rk; ++i)
    for (int c = 0; c < a.dim(); ++c) e.projection(i, c) = r.reduced(i, c).lift(std::lcm(m, r.reduced(i, c).conductor()));
  // Reduced rows have identity pivot columns, so coordinates are read off there.
  std::vector<Covector> cov;
  for (const auto& h : a.hyperplanes()) {
    Covector c;
    for (int i = 0; i < rk; ++i) c.push_back(h.covector[r.pivots[i]]);
    cov.push_back(std::move(c));
  }
  e.arrangement = Arrangement(rk, cov);
  return e;
}

}  // namespace reflact
