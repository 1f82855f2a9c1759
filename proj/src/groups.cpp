#include "reflact/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace reflact {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Cyc>& v) const {
    std::size_t h = 0x9e3779b9;
    for (const auto& x : v) h = (h ^ x.hash()) * 0x100000001b3ULL;
    return h;
  }
};

std::vector<Cyc> mat_vec(const CycMatrix& m, const std::vector<Cyc>& v, int conductor) {
  std::vector<Cyc> out(m.rows(), Cyc::zero(conductor));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += m(i, j) * v[j];
    }
  for (auto& x : out) x = x.lift(std::lcm(conductor, x.conductor()));
  return out;
}

std::vector<Cyc> row_mat(const std::vector<Cyc>& v, const CycMatrix& m, int conductor) {
  std::vector<Cyc> out(m.cols(), Cyc::zero(conductor));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j).is_zero() || v[i].is_zero()) continue;
      out[j] += v[i] * m(i, j);
    }
  return out;
}

bool fixes_rows(const MatrixGroup& g, int e, const CycMatrix& rows) {
  const CycMatrix& m = g.matrix(e);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    const auto b = rows.row(r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Cyc s = Cyc::zero(g.conductor());
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && !b[j].is_zero()) s += m(i, j) * b[j];
      if (!(s == b[i])) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t MatrixGroup::perm_hash(const std::uint32_t* p) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < npts_; ++i) h = (h ^ p[i]) * 1099511628211ULL;
  return h;
}

int MatrixGroup::lookup(const std::uint32_t* p) const {
  auto [lo, hi] = index_.equal_range(perm_hash(p));
  for (auto it = lo; it != hi; ++it)
    if (std::equal(p, p + npts_, perm(it->second))) return it->second;
  return -1;
}

MatrixGroup MatrixGroup::generate(const std::vector<CycMatrix>& gens_in, std::size_t cap) {
  if (gens_in.empty()) throw std::invalid_argument("a group needs at least one generator");
  MatrixGroup G;
  G.dim_ = static_cast<int>(gens_in[0].rows());
  for (const auto& m : gens_in) {
    if (m.rows() != m.cols() || static_cast<int>(m.rows()) != G.dim_)
      throw std::invalid_argument("generators must be square matrices of one size");
    for (const auto& x : m.data()) G.conductor_ = std::lcm(G.conductor_, x.conductor());
  }
  const int n = G.dim_, mcond = G.conductor_;
  for (const auto& m : gens_in) {
    CycMatrix l(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) l(i, j) = m(i, j).lift(mcond);
    if (determinant(l).is_zero()) throw std::invalid_argument("generator is singular");
    G.gens_.push_back(std::move(l));
  }

  // Point set: orbits of the standard basis vectors.
  std::unordered_map<std::vector<Cyc>, std::size_t, VecHash> pidx;
  std::deque<std::size_t> queue;
  auto add_point = [&](std::vector<Cyc> v) -> std::size_t {
    auto it = pidx.find(v);
    if (it != pidx.end()) return it->second;
    const std::size_t id = G.points_.size();
    if (id > cap * static_cast<std::size_t>(n)) throw OrderCapExceeded("point orbit exceeds the order cap; group may be infinite");
    pidx.emplace(v, id);
    G.points_.push_back(std::move(v));
    queue.push_back(id);
    return id;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<Cyc> e(n, Cyc::zero(mcond));
    e[i] = Cyc(Rat(1), mcond);
    G.basis_points_.push_back(add_point(e));
  }
  std::vector<std::vector<std::uint32_t>> gperm(G.gens_.size());
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (const auto& g : G.gens_) add_point(mat_vec(g, G.points_[p], mcond));
  }
  G.npts_ = G.points_.size();
  for (std::size_t k = 0; k < G.gens_.size(); ++k) {
    gperm[k].resize(G.npts_);
    for (std::size_t p = 0; p < G.npts_; ++p)
      gperm[k][p] = static_cast<std::uint32_t>(pidx.at(mat_vec(G.gens_[k], G.points_[p], mcond)));
  }

  // Elements by breadth-first closure.
  std::vector<std::vector<int>> lmul(G.gens_.size());
  G.perms_.resize(G.npts_);
  std::iota(G.perms_.begin(), G.perms_.end(), 0u);
  G.index_.emplace(G.perm_hash(G.perms_.data()), 0);
  G.parent_.push_back(-1);
  G.parent_gen_.push_back(-1);
  std::vector<std::uint32_t> child(G.npts_);
  for (std::size_t cur = 0; cur < G.parent_.size(); ++cur) {
    for (std::size_t k = 0; k < G.gens_.size(); ++k) {
      const std::uint32_t* pp = G.perm(static_cast<int>(cur));
      for (std::size_t p = 0; p < G.npts_; ++p) child[p] = gperm[k][pp[p]];
      int id = G.lookup(child.data());
      if (id < 0) {
        id = static_cast<int>(G.parent_.size());
        if (static_cast<std::size_t>(id) >= cap)
          throw OrderCapExceeded("group order exceeds the cap of " + std::to_string(cap));
        G.perms_.insert(G.perms_.end(), child.begin(), child.end());
        G.index_.emplace(G.perm_hash(child.data()), id);
        G.parent_.push_back(static_cast<int>(cur));
        G.parent_gen_.push_back(static_cast<int>(k));
      }
      lmul[k].push_back(id);
    }
  }
  G.order_ = G.parent_.size();
  for (const auto& row : lmul) G.lmul_.insert(G.lmul_.end(), row.begin(), row.end());
  for (std::size_t k = 0; k < G.gens_.size(); ++k) G.gen_elem_.push_back(G.left_mul(k, 0));

  G.inv_.resize(G.order_);
  G.elem_order_.resize(G.order_);
  G.mats_.resize(G.order_);
  std::vector<std::uint32_t> inv(G.npts_);
  for (std::size_t g = 0; g < G.order_; ++g) {
    const std::uint32_t* p = G.perm(static_cast<int>(g));
    for (std::size_t i = 0; i < G.npts_; ++i) inv[p[i]] = static_cast<std::uint32_t>(i);
    G.inv_[g] = G.lookup(inv.data());
    std::vector<char> seen(G.npts_, 0);
    long ord = 1;
    for (std::size_t i = 0; i < G.npts_; ++i) {
      if (seen[i]) continue;
      long len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    G.elem_order_[g] = static_cast<int>(ord);
    CycMatrix m(n, n);
    for (int c = 0; c < n; ++c) {
      const auto& col = G.points_[p[G.basis_points_[c]]];
      for (int r = 0; r < n; ++r) m(r, c) = col[r];
    }
    G.mats_[g] = std::move(m);
  }
  return G;
}

int MatrixGroup::multiply(int g, int h) const {
  std::vector<std::uint32_t> p(npts_);
  const std::uint32_t* pg = perm(g);
  const std::uint32_t* ph = perm(h);
  for (std::size_t i = 0; i < npts_; ++i) p[i] = pg[ph[i]];
  return lookup(p.data());
}

int MatrixGroup::find(const CycMatrix& m) const {
  if (static_cast<int>(m.rows()) != dim_ || static_cast<int>(m.cols()) != dim_) return -1;
  for (std::size_t g = 0; g < order_; ++g)
    if (mats_[g] == m) return static_cast<int>(g);
  // Entries may be written over another conductor.
  CycMatrix l(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (conductor_ % m(i, j).conductor() != 0) return -1;
      l(i, j) = m(i, j).lift(conductor_);
    }
  for (std::size_t g = 0; g < order_; ++g)
    if (mats_[g] == l) return static_cast<int>(g);
  return -1;
}

std::vector<Cyc> MatrixGroup::apply(int g, const std::vector<Cyc>& v) const {
  return mat_vec(mats_[g], v, conductor_);
}

HyperplaneAction::HyperplaneAction(const MatrixGroup& g, const Arrangement& a) : n_(a.size()) {
  const std::size_t k = g.num_generators();
  std::vector<std::vector<int>> gperm(k, std::vector<int>(n_));
  for (std::size_t s = 0; s < k; ++s) {
    const CycMatrix& ginv = g.matrix(g.inverse(g.generator_element(s)));
    for (std::size_t h = 0; h < n_; ++h) {
      const auto img = canonicalize_hyperplane(row_mat(a[h].covector, ginv, g.conductor()));
      Covector c = img.covector;
      for (auto& x : c) x = x.lift(std::lcm(a.conductor(), x.conductor()));
      const int j = a.index_of(c);
      if (j < 0) throw NotStable("a generator maps hyperplane " + std::to_string(h) + " outside the arrangement");
      gperm[s][h] = j;
    }
  }
  perm_.resize(g.order() * n_);
  for (std::size_t h = 0; h < n_; ++h) perm_[h] = static_cast<int>(h);
  for (std::size_t e = 1; e < g.order(); ++e) {
    const int par = g.parent(static_cast<int>(e));
    const auto& gp = gperm[g.parent_gen(static_cast<int>(e))];
    for (std::size_t h = 0; h < n_; ++h) perm_[e * n_ + h] = gp[perm_[par * n_ + h]];
  }
}

FlatKey HyperplaneAction::image(int g, const FlatKey& key) const {
  FlatKey out;
  out.reserve(key.size());
  for (int h : key) out.push_back(image(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Reflection> reflections(const MatrixGroup& g) {
  std::vector<Reflection> out;
  const int n = g.dim();
  for (std::size_t e = 1; e < g.order(); ++e) {
    CycMatrix d = g.matrix(static_cast<int>(e));
    for (int i = 0; i < n; ++i) d(i, i) -= Cyc(1L);
    if (rank(d) != 1) continue;
    for (int r = 0; r < n; ++r) {
      auto row = d.row(r);
      if (std::all_of(row.begin(), row.end(), [](const Cyc& x) { return x.is_zero(); })) continue;
      out.push_back({static_cast<int>(e), canonicalize_hyperplane(row)});
      break;
    }
  }
  return out;
}

Arrangement reflection_arrangement(const MatrixGroup& g) {
  std::vector<Covector> cov;
  for (const auto& r : reflections(g)) cov.push_back(r.hyperplane.covector);
  return Arrangement(g.dim(), cov);
}

std::vector<int> pointwise_stabilizer(const MatrixGroup& g, const Flat& x) {
  std::vector<char> keep(g.order(), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (long e = 0; e < static_cast<long>(g.order()); ++e) keep[e] = fixes_rows(g, static_cast<int>(e), x.basis);
  std::vector<int> out;
  for (std::size_t e = 0; e < g.order(); ++e)
    if (keep[e]) out.push_back(static_cast<int>(e));
  return out;
}

std::vector<int> setwise_stabilizer(const MatrixGroup& g, const HyperplaneAction& act, const Flat& x) {
  std::vector<int> out;
  for (std::size_t e = 0; e < g.order(); ++e) {
    bool ok = true;
    for (int h : x.key)
      if (!std::binary_search(x.key.begin(), x.key.end(), act.image(static_cast<int>(e), h))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(static_cast<int>(e));
  }
  return out;
}

std::vector<OrbitDatum> orbits_on_lattice(const MatrixGroup& g, const HyperplaneAction& act,
                                          const IntersectionLattice& lattice) {
  std::vector<OrbitDatum> out;
  std::vector<char> seen(lattice.size(), 0);
  for (int cd = 0; cd <= lattice.rank(); ++cd) {
    for (int f : lattice.by_codim(cd)) {
      if (seen[f]) continue;
      OrbitDatum od;
      od.rep = f;
      od.codim = cd;
      std::deque<int> q{f};
      seen[f] = 1;
      while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        od.orbit.push_back(x);
        for (std::size_t k = 0; k < g.num_generators(); ++k) {
          const int y = lattice.find(act.image(g.generator_element(k), lattice.flat(x).key));
          if (y < 0) throw NotStable("flat image is not in the lattice");
          if (!seen[y]) {
            seen[y] = 1;
            q.push_back(y);
          }
        }
      }
      std::sort(od.orbit.begin(), od.orbit.end(),
                [&](int a, int b) { return lattice.flat(a).key < lattice.flat(b).key; });
      const Flat& x = lattice.flat(f);
      od.N = setwise_stabilizer(g, act, x);
      std::vector<char> keep(od.N.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
      for (long i = 0; i < static_cast<long>(od.N.size()); ++i) keep[i] = fixes_rows(g, od.N[i], x.basis);
      for (std::size_t i = 0; i < od.N.size(); ++i)
        if (keep[i]) od.Z.push_back(od.N[i]);
      out.push_back(std::move(od));
    }
  }
  return out;
}

std::vector<int> subgroup_closure(const MatrixGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      const int c = g.multiply(s, elems[i]);
      if (!in[c]) {
        in[c] = 1;
        elems.push_back(c);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> normal_closure(const MatrixGroup& g, const std::vector<int>& gens_in) {
  std::vector<int> gens = gens_in;
  while (true) {
    const auto h = subgroup_closure(g, gens);
    bool grew = false;
    const std::size_t ng = gens.size();
    for (std::size_t i = 0; i < ng; ++i)
      for (std::size_t k = 0; k < g.num_generators(); ++k) {
        const int s = g.generator_element(k);
        const int c = g.multiply(g.multiply(s, gens[i]), g.inverse(s));
        if (!std::binary_search(h.begin(), h.end(), c) &&
            std::find(gens.begin(), gens.end(), c) == gens.end()) {
          gens.push_back(c);
          grew = true;
        }
      }
    if (!grew) return h;
  }
}

std::vector<int> derived_subgroup(const MatrixGroup& g) {
  std::vector<int> comm;
  const std::size_t k = g.num_generators();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const int a = g.generator_element(i), b = g.generator_element(j);
      comm.push_back(g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b))));
    }
  return normal_closure(g, comm);
}

std::vector<int> center(const MatrixGroup& g) {
  std::vector<int> out;
  for (std::size_t e = 0; e < g.order(); ++e) {
    bool central = true;
    for (std::size_t k = 0; k < g.num_generators() && central; ++k) {
      const int s = g.generator_element(k);
      central = g.multiply(s, static_cast<int>(e)) == g.multiply(static_cast<int>(e), s);
    }
    if (central) out.push_back(static_cast<int>(e));
  }
  return out;
}

std::vector<std::vector<int>> conjugacy_classes(const MatrixGroup& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (seen[e]) continue;
    std::vector<int> cls{static_cast<int>(e)};
    seen[e] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t k = 0; k < g.num_generators(); ++k) {
        const int s = g.generator_element(k);
        const int c = g.multiply(g.left_mul(k, cls[i]), g.inverse(s));
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

bool LinearCharacter::is_trivial() const {
  return std::all_of(exps.begin(), exps.end(), [](int x) { return x == 0; });
}

bool operator==(const LinearCharacter& a, const LinearCharacter& b) {
  if (a.exps.size() != b.exps.size()) return false;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (static_cast<long>(a.exps[i]) * b.e != static_cast<long>(b.exps[i]) * a.e) return false;
  return true;
}

LinearCharacter trivial_character(const MatrixGroup& g) { return {1, std::vector<int>(g.order(), 0)}; }

namespace {

// Extends generator exponents along the BFS tree; empty result if the
// assignment is not a homomorphism.
std::vector<int> extend_exponents(const MatrixGroup& g, int e, const std::vector<int>& a) {
  std::vector<int> exps(g.order(), 0);
  for (std::size_t x = 1; x < g.order(); ++x)
    exps[x] = (exps[g.parent(static_cast<int>(x))] + a[g.parent_gen(static_cast<int>(x))]) % e;
  for (std::size_t k = 0; k < g.num_generators(); ++k)
    for (std::size_t x = 0; x < g.order(); ++x)
      if (exps[g.left_mul(k, static_cast<int>(x))] != (exps[x] + a[k]) % e) return {};
  return exps;
}

}  // namespace

std::vector<LinearCharacter> linear_characters(const MatrixGroup& g) {
  const std::size_t k = g.num_generators();
  int e = 1;
  for (std::size_t i = 0; i < k; ++i) e = std::lcm(e, g.element_order(g.generator_element(i)));
  std::vector<int> step(k);
  for (std::size_t i = 0; i < k; ++i) step[i] = e / g.element_order(g.generator_element(i));
  std::vector<LinearCharacter> out;
  std::vector<int> a(k, 0);
  while (true) {
    auto exps = extend_exponents(g, e, a);
    if (!exps.empty()) out.push_back({e, std::move(exps)});
    std::size_t i = k;
    while (i-- > 0) {
      a[i] += step[i];
      if (a[i] < e) break;
      a[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

LinearCharacter det_character(const MatrixGroup& g) {
  const std::size_t k = g.num_generators();
  int e = 1;
  for (std::size_t i = 0; i < k; ++i) e = std::lcm(e, g.element_order(g.generator_element(i)));
  std::vector<int> a(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    const Cyc d = determinant(g.generators()[i]);
    for (int j = 0; j < e; ++j)
      if (Cyc::zeta(e, j) == d) {
        a[i] = j;
        break;
      }
    if (a[i] < 0) throw std::logic_error("determinant of a generator is not a root of unity");
  }
  auto exps = extend_exponents(g, e, a);
  if (exps.empty()) throw std::logic_error("determinant failed to be multiplicative");
  return {e, std::move(exps)};
}

LinearCharacter inverse_character(const LinearCharacter& c) {
  LinearCharacter out = c;
  for (auto& x : out.exps) x = (c.e - x) % c.e;
  return out;
}

std::vector<LinearCharacter> determinant_like_characters(const MatrixGroup& g) {
  const auto refl = reflections(g);
  std::vector<LinearCharacter> out;
  if (refl.empty()) return out;
  for (auto& chi : linear_characters(g)) {
    bool ok = true;
    for (const auto& r : refl) {
      const int ord = chi.e / std::gcd(chi.e, chi.exps[r.element]);
      if (ord != g.element_order(r.element)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace reflact
