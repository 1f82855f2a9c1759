#include "reflact/invariants.hpp"

#include "reflact/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace reflact {
namespace {

// Sum_a zeta_e^{-a} S_a / denom, for S_a the sums of `vals` over exponent class a.
Cyc weighted_average(int e, const std::vector<Rat>& by_exp, const Rat& denom) {
  Cyc acc = Cyc::zero(e);
  for (int a = 0; a < e; ++a)
    if (!reflact::is_zero(by_exp[a])) acc += Cyc::zeta(e, -a) * Cyc(by_exp[a]);
  return acc / Cyc(denom);
}

long to_dim(const Cyc& v, const std::string& what) {
  if (!v.is_rational()) throw NonIntegral(what + ": average is not rational: " + to_string(v));
  Rat q = v.to_rat();
  if (q.get_den() != 1 || q < 0) throw NonIntegral(what + ": average is not a nonnegative integer: " + to_string(q));
  return q.get_num().get_si();
}

std::size_t rank_of_vectors(const std::vector<OSElement>& xs, std::size_t width) {
  if (xs.empty()) return 0;
  RatMatrix m(xs.size(), width, Rat(0));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (const auto& [j, c] : xs[i].coeffs) m(i, j) = c;
  return rank(m);
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ")";
  return os.str();
}

}  // namespace

Pair::Pair(MatrixGroup g, Arrangement a, std::optional<FamilySpec> family)
    : g_(std::move(g)), family_(family) {
  if (g_.dim() != a.dim()) throw std::invalid_argument("group and arrangement live in different dimensions");
  os_ = std::make_unique<OSAlgebra>(std::move(a));
  act_ = std::make_unique<HyperplaneAction>(g_, os_->arrangement());
}

const std::vector<OrbitDatum>& Pair::orbits() const {
  if (!orbits_) {
    orbits_ = orbits_on_lattice(g_, *act_, lattice());
    orbit_of_.assign(lattice().size(), -1);
    for (std::size_t t = 0; t < orbits_->size(); ++t)
      for (int f : (*orbits_)[t].orbit) orbit_of_[f] = static_cast<int>(t);
  }
  return *orbits_;
}

int Pair::orbit_of(int flat) const {
  orbits();
  return orbit_of_.at(flat);
}

const OSAlgebra& Pair::sub_os(std::size_t t) const {
  auto it = sub_os_.find(t);
  if (it != sub_os_.end()) return *it->second;
  const Flat& x = lattice().flat(orbits().at(t).rep);
  auto os = std::make_unique<OSAlgebra>(subarrangement(arrangement(), lattice(), x));
  return *sub_os_.emplace(t, std::move(os)).first->second;
}

std::vector<const int*> Pair::perms(const std::vector<int>& elems) const {
  std::vector<const int*> out;
  out.reserve(elems.size());
  for (int g : elems) out.push_back(act_->perm(g));
  return out;
}

std::vector<const int*> Pair::all_perms() const {
  std::vector<int> all(g_.order());
  std::iota(all.begin(), all.end(), 0);
  return perms(all);
}

const std::vector<std::int64_t>& Pair::global_traces(int k) const {
  auto it = global_traces_.find(k);
  if (it == global_traces_.end()) it = global_traces_.emplace(k, traces(*os_, k, all_perms())).first;
  return it->second;
}

const std::vector<std::int64_t>& Pair::orbit_traces(std::size_t t) const {
  auto it = orbit_traces_.find(t);
  if (it != orbit_traces_.end()) return it->second;
  const OrbitDatum& o = orbits().at(t);
  const FlatKey& key = lattice().flat(o.rep).key;
  std::vector<int> pos(arrangement().size(), -1);
  for (std::size_t i = 0; i < key.size(); ++i) pos[key[i]] = static_cast<int>(i);
  // N_T permutes A_X; restrict each permutation to the subarrangement's indices.
  auto& sp = sub_perms_[t];
  sp.assign(o.N.size(), std::vector<int>(key.size()));
  std::vector<const int*> ptrs;
  for (std::size_t j = 0; j < o.N.size(); ++j) {
    for (std::size_t i = 0; i < key.size(); ++i) {
      const int img = pos[act_->image(o.N[j], key[i])];
      if (img < 0) throw std::logic_error("setwise stabilizer moved a hyperplane out of A_X");
      sp[j][i] = img;
    }
    ptrs.push_back(sp[j].data());
  }
  return orbit_traces_.emplace(t, traces(sub_os(t), o.codim, ptrs)).first->second;
}

void Pair::set_long_root(const Covector& c) {
  const int h0 = arrangement().index_of(canonicalize_hyperplane(c).covector);
  if (h0 < 0) throw std::invalid_argument("long root is not orthogonal to a hyperplane of the arrangement");
  std::vector<char> mark(arrangement().size(), 0);
  for (std::size_t g = 0; g < g_.order(); ++g) mark[act_->image(static_cast<int>(g), h0)] = 1;
  long_mirror_ = std::move(mark);
  names_.reset();
}

const std::vector<std::string>& Pair::orbit_names() const {
  if (names_) return *names_;
  const auto& orb = orbits();
  std::vector<std::string> out(orb.size());
  bool done = false;
  if (family_) {
    try {
      auto labels = prop41_labels(*family_, arrangement(), lattice());
      crosscheck_prop41(labels, orb);
      for (const auto& l : labels) out[orbit_of(l.flat)] = l.label.type_name;
      done = true;
    } catch (const CrossCheckFailure&) {
      done = false;
    }
  }
  if (!done) {
    const std::vector<char>* lm = long_mirror_ ? &*long_mirror_ : nullptr;
    for (std::size_t t = 0; t < orb.size(); ++t) out[t] = reflection_type(g_, orb[t].Z, lm, arrangement());
  }
  names_ = std::move(out);
  return *names_;
}

long average_to_dim(const std::vector<int>& elems, const std::vector<std::int64_t>& tr, const LinearCharacter& chi) {
  if (elems.size() != tr.size()) throw std::invalid_argument("trace list does not match element list");
  std::vector<Rat> by_exp(chi.e, Rat(0));
  for (std::size_t i = 0; i < elems.size(); ++i) by_exp[chi.exps[elems[i]]] += Rat(static_cast<long>(tr[i]));
  return to_dim(weighted_average(chi.e, by_exp, Rat(static_cast<long>(elems.size()))), "isotypic dimension");
}

long isotypic_dim_global(const Pair& p, const LinearCharacter& chi, int k) {
  if (k < 0 || k > p.os().rank()) return 0;
  std::vector<int> all(p.group().order());
  std::iota(all.begin(), all.end(), 0);
  return average_to_dim(all, p.global_traces(k), chi);
}

long orbit_dim(const Pair& p, const LinearCharacter& chi, std::size_t t) {
  return average_to_dim(p.orbits().at(t).N, p.orbit_traces(t), chi);
}

long projection_rank_dim(const Pair& p, const LinearCharacter& chi, int k) {
  if (k < 0 || k > p.os().rank()) return 0;
  const std::size_t d = p.os().dim(k);
  const int e = chi.e;
  // Integer matrices M_a = sum of action matrices over each exponent class.
  std::vector<std::vector<std::int64_t>> M(e, std::vector<std::int64_t>(d * d, 0));
  const auto& basis = p.os().nbc_basis(k);
  for (std::size_t g = 0; g < p.group().order(); ++g) {
    auto& m = M[chi.exps[g]];
    const int* perm = p.action().perm(static_cast<int>(g));
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [i, v] : p.os().straighten_image(perm, basis[j])) m[i * d + j] += v;
  }
  CycMatrix P(d, d, Cyc::zero(e));
  for (int a = 0; a < e; ++a) {
    const Cyc z = Cyc::zeta(e, -a);
    for (std::size_t i = 0; i < d * d; ++i)
      if (M[a][i] != 0) P(i / d, i % d) += z * Cyc(static_cast<long>(M[a][i]));
  }
  return static_cast<long>(rank(P));
}

InvariantReport isotypic_dims_orbitwise(const Pair& p, const LinearCharacter& chi) {
  InvariantReport rep;
  rep.method = "orbitwise";
  rep.poincare.assign(p.os().rank() + 1, 0);
  const auto& orb = p.orbits();
  const auto& names = p.orbit_names();
  for (std::size_t t = 0; t < orb.size(); ++t) {
    OrbitReport o;
    o.orbit = t;
    o.codim = orb[t].codim;
    o.rep_key = p.lattice().flat(orb[t].rep).key;
    o.dim = orbit_dim(p, chi, t);
    o.type = names[t];
    rep.poincare[o.codim] += o.dim;
    rep.orbits.push_back(std::move(o));
  }
  return rep;
}

std::vector<long> poincare_invariants(const Pair& p, const LinearCharacter& chi) {
  auto rep = isotypic_dims_orbitwise(p, chi);
  for (int k = 0; k <= p.os().rank(); ++k)
    if (isotypic_dim_global(p, chi, k) != rep.poincare[k])
      throw std::logic_error("orbitwise and global isotypic dimensions disagree in degree " + std::to_string(k));
  return rep.poincare;
}

CheckReport lehrer_solomon_check(const Pair& p, const LinearCharacter& chi) {
  CheckReport r;
  const auto& orb = p.orbits();
  const std::size_t order = p.group().order();
  std::vector<long> sums(p.os().rank() + 1, 0);
  for (std::size_t t = 0; t < orb.size(); ++t) {
    const auto& o = orb[t];
    const std::string tag = "orbit " + std::to_string(t);
    if (order % o.N.size() != 0 || order / o.N.size() != o.orbit.size())
      r.fail(tag + ": orbit size is not [G:N_T]");
    // dim K_T from the Brieskorn blocks of the full algebra.
    std::size_t kt = 0;
    for (const auto& b : p.os().brieskorn_components(o.codim))
      if (p.orbit_of(b.flat) == static_cast<int>(t)) kt += b.nbc.size();
    const std::size_t expect = o.orbit.size() * p.sub_os(t).dim(o.codim);
    if (kt != expect)
      r.fail(tag + ": dim K_T = " + std::to_string(kt) + " but [G:N_T] dim H^top(A_X) = " + std::to_string(expect));
    // K_T^chi computed inside the full algebra by masked traces.
    std::vector<char> mask(p.lattice().size(), 0);
    for (int f : o.orbit) mask[f] = 1;
    std::vector<int> all(order);
    std::iota(all.begin(), all.end(), 0);
    const long inside = average_to_dim(all, traces(p.os(), o.codim, p.all_perms(), &mask), chi);
    const long induced = orbit_dim(p, chi, t);
    if (inside != induced)
      r.fail(tag + ": K_T^chi is " + std::to_string(inside) + " in A but " + std::to_string(induced) + " from A_X");
    sums[o.codim] += induced;
  }
  for (int k = 0; k <= p.os().rank(); ++k) {
    const long g = isotypic_dim_global(p, chi, k);
    if (g != sums[k])
      r.fail("degree " + std::to_string(k) + ": global " + std::to_string(g) + " vs orbit sum " + std::to_string(sums[k]));
  }
  return r;
}

bool high_degree_invariants(const Pair& p) {
  if (p.arrangement().empty()) throw EmptyArrangement("the arrangement has no hyperplanes");
  return isotypic_dim_global(p, trivial_character(p.group()), p.os().rank()) != 0;
}

bool euler_identity_check(const Pair& p, const LinearCharacter& chi) {
  long alt = 0;
  for (int k = 0; k <= p.os().rank(); ++k) alt += (k % 2 ? -1 : 1) * isotypic_dim_global(p, chi, k);
  return alt == 0;
}

std::vector<CoxEntry> cox_entries(const Pair& p) {
  if (p.cox()) return *p.cox();
  if (p.family() && p.family()->n >= 3) return family_cox(*p.family(), p.arrangement());
  if (p.os().rank() <= 2) return rank2_cox(p.orbits(), p.lattice());
  throw UnlabeledPair("no cox monomials known for this pair; supply them explicitly");
}

OSElement project_invariant(const Pair& p, const Monomial& mono) {
  std::map<int, std::int64_t> acc;
  for (std::size_t g = 0; g < p.group().order(); ++g)
    for (const auto& [i, v] : p.os().straighten_image(p.action().perm(static_cast<int>(g)), mono)) {
      auto& slot = acc[i];
      if (__builtin_add_overflow(slot, v, &slot)) throw std::overflow_error("projection coefficient overflow");
    }
  OSElement x;
  x.k = static_cast<int>(mono.size());
  const Rat n(static_cast<long>(p.group().order()));
  for (const auto& [i, v] : acc) {
    Rat q = Rat(static_cast<long>(v)) / n;
    q.canonicalize();
    x.add(i, q);
  }
  return x;
}

Theorem4Basis theorem4_basis(const Pair& p) {
  const auto entries = cox_entries(p);
  const auto& orb = p.orbits();
  const auto triv = trivial_character(p.group());
  const int r = p.os().rank();
  Theorem4Basis out;
  std::vector<std::vector<OSElement>> by_degree(r + 1);
  std::map<std::size_t, std::size_t> count;
  for (const auto& e : entries) {
    if (e.monomials.empty()) throw VerificationFailure(e.type + ": no monomials");
    CoxBasisEntry b;
    b.type = e.type;
    int orbit = -1;
    for (const auto& raw : e.monomials) {
      Monomial m = raw;
      if (sort_with_sign(m) == 0) throw VerificationFailure(e.type + ": repeated hyperplane in " + monomial_str(raw));
      const int k = static_cast<int>(m.size());
      if (!p.os().is_independent(OSAlgebra::to_mask(m)))
        throw VerificationFailure(e.type + ": dependent monomial " + monomial_str(raw));
      const int o = p.orbit_of(p.lattice().closure(m));
      if (orbit >= 0 && o != orbit) throw VerificationFailure(e.type + ": monomials span flats of different orbits");
      orbit = o;
      OSElement x = project_invariant(p, raw);
      if (x.is_zero()) throw VerificationFailure(e.type + ": projection of " + monomial_str(raw) + " vanishes");
      by_degree[k].push_back(x);
      b.monomials.push_back(raw);
      b.projections.push_back(std::move(x));
    }
    b.orbit = static_cast<std::size_t>(orbit);
    count[b.orbit] += b.monomials.size();
    out.cardinality += b.monomials.size();
    out.entries.push_back(std::move(b));
  }
  for (std::size_t t = 0; t < orb.size(); ++t) {
    const long want = orbit_dim(p, triv, t);
    const long have = count.count(t) ? static_cast<long>(count[t]) : 0;
    if (want != have)
      throw VerificationFailure("orbit " + std::to_string(t) + " (" + p.orbit_names()[t] + "): " +
                                std::to_string(have) + " monomials for an invariant space of dimension " +
                                std::to_string(want));
  }
  for (int k = 0; k <= r; ++k) {
    if (rank_of_vectors(by_degree[k], p.os().dim(k)) != by_degree[k].size())
      throw VerificationFailure("projections in degree " + std::to_string(k) + " are linearly dependent");
    const long pk = isotypic_dim_global(p, triv, k);
    if (pk != static_cast<long>(by_degree[k].size()))
      throw VerificationFailure("degree " + std::to_string(k) + ": " + std::to_string(by_degree[k].size()) +
                                " elements, invariant dimension " + std::to_string(pk));
  }
  if (r >= 1) {
    std::vector<OSElement> images;
    for (const auto& x : by_degree[r]) images.push_back(p.os().euler_derivation(x));
    if (rank_of_vectors(images, p.os().dim(r - 1)) != images.size())
      throw VerificationFailure("the Euler derivation is not injective on the top-degree basis");
  }
  return out;
}

std::size_t select_sigma(const MatrixGroup& big, const std::vector<LinearCharacter>& chars,
                         const std::vector<int>& kernel) {
  (void)big;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& c = chars[i];
    if (c.is_trivial()) continue;
    const bool order_two = std::all_of(c.exps.begin(), c.exps.end(), [&](int a) { return 2 * a % c.e == 0; });
    const bool kills = std::all_of(kernel.begin(), kernel.end(), [&](int g) { return c.exps[g] == 0; });
    if (order_two && kills) hits.push_back(i);
  }
  if (hits.size() != 1)
    throw std::invalid_argument("expected one order-two character with the given kernel, found " +
                                std::to_string(hits.size()));
  return hits.front();
}

std::vector<RelativeOrbit> relative_character(const Pair& p, const MatrixGroup& big) {
  const MatrixGroup& g = p.group();
  if (big.dim() != g.dim()) throw NotNormal("groups act on spaces of different dimension");
  std::vector<int> gen_img;
  for (std::size_t i = 0; i < g.num_generators(); ++i) {
    const int x = big.find(g.generators()[i]);
    if (x < 0) throw NotNormal("G is not contained in the larger group");
    gen_img.push_back(x);
  }
  const std::vector<int> sub = subgroup_closure(big, gen_img);
  if (sub.size() != g.order()) throw NotNormal("G is not contained in the larger group");
  const std::set<int> in_sub(sub.begin(), sub.end());
  for (std::size_t s = 0; s < big.num_generators(); ++s) {
    const int se = big.generator_element(s);
    for (int x : gen_img)
      if (!in_sub.count(big.multiply(big.multiply(se, x), big.inverse(se))))
        throw NotNormal("G is not normal in the larger group");
  }
  const HyperplaneAction bact(big, p.arrangement());
  std::vector<const int*> bperms;
  for (std::size_t h = 0; h < big.order(); ++h) bperms.push_back(bact.perm(static_cast<int>(h)));
  const auto chars = linear_characters(big);
  const auto triv = trivial_character(g);

  std::vector<RelativeOrbit> out;
  const auto& orb = p.orbits();
  for (std::size_t t = 0; t < orb.size(); ++t) {
    RelativeOrbit ro;
    ro.orbit = t;
    ro.dim = orbit_dim(p, triv, t);
    if (ro.dim == 0) {
      out.push_back(ro);
      continue;
    }
    std::set<FlatKey> keys;
    for (int f : orb[t].orbit) keys.insert(p.lattice().flat(f).key);
    for (std::size_t s = 0; s < big.num_generators(); ++s)
      if (!keys.count(bact.image(big.generator_element(s), p.lattice().flat(orb[t].rep).key)))
        throw NotStable("the larger group does not preserve orbit " + std::to_string(t));
    std::vector<char> mask(p.lattice().size(), 0);
    for (int f : orb[t].orbit) mask[f] = 1;
    const auto tr = traces(p.os(), orb[t].codim, bperms, &mask);
    // Character of big on K_T^G: h -> (1/|G|) sum_{x in G} tr(h x).
    std::vector<Rat> chi(big.order(), Rat(0));
    for (std::size_t h = 0; h < big.order(); ++h) {
      std::int64_t s = 0;
      for (int x : sub) s += tr[big.multiply(static_cast<int>(h), x)];
      chi[h] = Rat(static_cast<long>(s)) / Rat(static_cast<long>(g.order()));
    }
    long total = 0;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      std::vector<Rat> by_exp(chars[i].e, Rat(0));
      for (std::size_t h = 0; h < big.order(); ++h) by_exp[chars[i].exps[h]] += chi[h];
      const long m = to_dim(weighted_average(chars[i].e, by_exp, Rat(static_cast<long>(big.order()))),
                            "relative multiplicity");
      if (m) ro.mult[i] = m;
      total += m;
    }
    ro.nonlinear_dim = ro.dim - total;
    out.push_back(std::move(ro));
  }
  return out;
}

Cyc multiplicity_classfn(const Pair& p, const std::vector<Cyc>& phi, int k) {
  const MatrixGroup& g = p.group();
  const auto classes = conjugacy_classes(g);
  if (phi.size() != classes.size())
    throw ClassMismatch("class function has " + std::to_string(phi.size()) + " values for " +
                        std::to_string(classes.size()) + " classes");
  if (k < 0 || k > p.os().rank()) return Cyc(0L);
  std::vector<int> cls(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) cls[x] = static_cast<int>(c);
  const auto& tr = p.global_traces(k);
  // Group the trace sums by class to keep the cyclotomic work per class.
  std::vector<long> by_class(classes.size(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) by_class[cls[g.inverse(static_cast<int>(x))]] += tr[x];
  Cyc acc(0L);
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (by_class[c]) acc += phi[c] * Cyc(by_class[c]);
  return acc / Cyc(static_cast<long>(g.order()));
}

CheckReport vanishing_check_detlike(const Pair& p) {
  CheckReport r;
  const auto chars = determinant_like_characters(p.group());
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (int k = 0; k <= p.os().rank(); ++k) {
      const long d = isotypic_dim_global(p, chars[i], k);
      if (d != 0)
        r.fail("character " + std::to_string(i) + " occurs " + std::to_string(d) + " times in degree " +
               std::to_string(k));
    }
  return r;
}

}  // namespace reflact
