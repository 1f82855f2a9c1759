#include "doctest.h"

#include "reflact/catalog.hpp"
#include "reflact/invariants.hpp"

#include <numeric>

using namespace reflact;

namespace {

Pair family_pair(int r, int p, int n, ArrKind kind) {
  return Pair(make_grpn(r, p, n), make_arrangement(kind, r, n), FamilySpec{r, p, n, kind});
}

std::vector<long> poly(std::initializer_list<long> c) { return c; }

Pair boolean_pair(int n) {
  std::vector<Covector> cov;
  for (int i = 0; i < n; ++i) {
    Covector c(n, Cyc(0L));
    c[i] = Cyc(1L);
    cov.push_back(c);
  }
  return Pair(MatrixGroup::generate({CycMatrix::identity(n, Cyc(1L))}), Arrangement(n, cov));
}

std::map<std::vector<int>, long> dims_by_label(const Pair& p, const std::vector<LabeledFlat>& labels) {
  const auto triv = trivial_character(p.group());
  std::map<std::vector<int>, long> out;
  for (const auto& l : labels) {
    std::vector<int> key = l.label.lambda;
    key.insert(key.begin(), {l.label.m, l.label.u});
    out[key] = orbit_dim(p, triv, p.orbit_of(l.flat));
  }
  return out;
}

}  // namespace

TEST_CASE("isotypic dimensions of small pairs") {
  auto braid = family_pair(1, 1, 3, ArrKind::Zero);
  const auto t = trivial_character(braid.group());
  CHECK(isotypic_dim_global(braid, t, 0) == 1);
  CHECK(isotypic_dim_global(braid, t, 2) == 0);
  CHECK(poincare_invariants(braid, t) == poly({1, 1, 0}));
  CHECK_FALSE(high_degree_invariants(braid));

  auto a22 = family_pair(2, 1, 2, ArrKind::Full);
  const auto t2 = trivial_character(a22.group());
  CHECK(isotypic_dim_global(a22, t2, 2) == 1);
  CHECK(poincare_invariants(a22, t2) == poly({1, 2, 1}));
  CHECK(high_degree_invariants(a22));
}

TEST_CASE("corollary closed forms in rank four") {
  auto z = family_pair(2, 2, 4, ArrKind::Zero);
  CHECK(poincare_invariants(z, trivial_character(z.group())) == poly({1, 1, 0, 1, 1}));
  CHECK(high_degree_invariants(z));
  auto f = family_pair(2, 1, 4, ArrKind::Full);
  CHECK(poincare_invariants(f, trivial_character(f.group())) == poly({1, 2, 2, 2, 1}));
  auto e = family_pair(2, 2, 4, ArrKind::Full);
  CHECK(poincare_invariants(e, trivial_character(e.group())) == poly({1, 2, 2, 3, 2}));
}

TEST_CASE("orbitwise report for the braid arrangement") {
  auto braid = family_pair(1, 1, 3, ArrKind::Zero);
  auto rep = isotypic_dims_orbitwise(braid, trivial_character(braid.group()));
  REQUIRE(rep.orbits.size() == 3);
  CHECK(rep.orbits[0].dim == 1);
  CHECK(rep.orbits[1].codim == 1);
  CHECK(rep.orbits[1].dim == 1);
  CHECK(rep.orbits[2].dim == 0);
  CHECK(rep.method == "orbitwise");
}

TEST_CASE("per-orbit dims of A_4(4) under G(4,2,4)") {
  auto p = family_pair(4, 2, 4, ArrKind::Full);
  auto rep = isotypic_dims_orbitwise(p, trivial_character(p.group()));
  std::vector<long> k3;
  for (const auto& o : rep.orbits)
    if (o.codim == 3 && o.dim) k3.push_back(o.dim);
  std::sort(k3.begin(), k3.end());
  CHECK(k3 == std::vector<long>{1, 2});
  CHECK(rep.poincare[4] == 2);
}

TEST_CASE("per-orbit dims follow the partition table") {
  for (auto kind : {ArrKind::Full, ArrKind::Zero}) {
    auto p = family_pair(2, 2, 4, kind);
    auto labels = prop41_labels(*p.family(), p.arrangement(), p.lattice());
    auto d = dims_by_label(p, labels);
    const bool full = kind == ArrKind::Full;
    CHECK(d[{4, 0, 1, 1, 1, 1}] == 1);
    CHECK(d[{4, 0, 2, 1, 1}] == 1);
    CHECK(d[{2, 0, 2}] == (full ? 2 : 1));
    CHECK(d[{0, 0}] == (full ? 2 : 1));
    if (full) {
      CHECK(d[{3, 0, 1, 1, 1}] == 1);
      CHECK(d[{3, 0, 2, 1}] == 1);
      CHECK(d[{2, 0, 1, 1}] == 1);
      CHECK(d[{1, 0, 1}] == 1);
    }
    long total = 0;
    for (const auto& [k, v] : d) total += v;
    CHECK(total == (full ? 10 : 4));
  }
}

TEST_CASE("three methods agree for every linear character") {
  for (auto [r, p, n, kind] : std::vector<std::tuple<int, int, int, ArrKind>>{
           {1, 1, 3, ArrKind::Zero}, {2, 1, 2, ArrKind::Full}, {3, 1, 2, ArrKind::Full}, {2, 2, 2, ArrKind::Zero},
           {3, 3, 2, ArrKind::Zero}, {4, 2, 2, ArrKind::Full}}) {
    auto pr = family_pair(r, p, n, kind);
    if (pr.arrangement().size() > 8) continue;
    for (const auto& chi : linear_characters(pr.group())) {
      auto rep = isotypic_dims_orbitwise(pr, chi);
      for (int k = 0; k <= pr.os().rank(); ++k) {
        const long g = isotypic_dim_global(pr, chi, k);
        CHECK(g == rep.poincare[k]);
        CHECK(g == projection_rank_dim(pr, chi, k));
      }
    }
  }
}

TEST_CASE("Lehrer-Solomon check") {
  auto braid = family_pair(1, 1, 3, ArrKind::Zero);
  CHECK(lehrer_solomon_check(braid, trivial_character(braid.group())).ok);
  auto b = boolean_pair(2);
  CHECK(lehrer_solomon_check(b, trivial_character(b.group())).ok);
  auto a22 = family_pair(2, 1, 2, ArrKind::Full);
  for (const auto& chi : linear_characters(a22.group())) CHECK(lehrer_solomon_check(a22, chi).ok);
}

TEST_CASE("Euler identity") {
  auto braid = family_pair(1, 1, 3, ArrKind::Zero);
  CHECK(euler_identity_check(braid, trivial_character(braid.group())));
  auto b = boolean_pair(3);
  CHECK(euler_identity_check(b, trivial_character(b.group())));
  CHECK(poincare_invariants(b, trivial_character(b.group())) == poly({1, 3, 3, 1}));
  auto e = family_pair(3, 1, 2, ArrKind::Full);
  for (const auto& chi : linear_characters(e.group())) CHECK(euler_identity_check(e, chi));
}

TEST_CASE("high degree invariants needs a nonempty arrangement") {
  Pair empty(MatrixGroup::generate({CycMatrix::identity(2, Cyc(1L))}), Arrangement(2, {}));
  CHECK_THROWS_AS(high_degree_invariants(empty), EmptyArrangement);
}

TEST_CASE("H^1 invariants count hyperplane orbits") {
  for (auto [r, p, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 3, 3}, {4, 2, 2}}) {
    for (auto kind : {ArrKind::Full, ArrKind::Zero}) {
      auto pr = family_pair(r, p, n, kind);
      long orbits1 = 0;
      for (const auto& o : pr.orbits()) orbits1 += o.codim == 1;
      CHECK(isotypic_dim_global(pr, trivial_character(pr.group()), 1) == orbits1);
    }
  }
}

TEST_CASE("basis certification for family pairs") {
  auto p = family_pair(2, 2, 4, ArrKind::Full);
  auto b = theorem4_basis(p);
  CHECK(b.cardinality == 10);
  const Arrangement& a = p.arrangement();
  auto h = [&](const char* s) { return named_hyperplane(a, 2, s); };
  std::vector<std::vector<int>> monos;
  for (const auto& e : b.entries)
    for (const auto& m : e.monomials) monos.push_back(m);
  const std::vector<std::vector<int>> table5 = {
      {},
      {h("t_2")},
      {h("s")},
      {h("s"), h("t_3")},
      {h("s"), h("t_2")},
      {h("s"), h("t_2"), h("t_3")},
      {h("s"), h("t_2"), h("t_4")},
      {h("s"), h("t_2^1"), h("t_4")},
      {h("s"), h("t_2"), h("t_3"), h("t_4")},
      {h("s"), h("t_2^1"), h("t_3"), h("t_4")}};
  for (const auto& m : table5) CHECK(std::find(monos.begin(), monos.end(), m) != monos.end());

  auto z = family_pair(2, 2, 4, ArrKind::Zero);
  CHECK(theorem4_basis(z).cardinality == 4);
  auto odd = family_pair(3, 1, 3, ArrKind::Full);
  CHECK(theorem4_basis(odd).cardinality == 6);
}

TEST_CASE("rank-2 rule gives a basis of H^2 invariants") {
  for (auto [r, p] : std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {6, 2}, {3, 3}, {4, 4}}) {
    const ArrKind kind = p < r ? ArrKind::Full : ArrKind::Zero;
    auto pr = family_pair(r, p, 2, kind);
    auto b = theorem4_basis(pr);
    long sum = 0;
    for (long c : poincare_invariants(pr, trivial_character(pr.group()))) sum += c;
    CHECK(static_cast<long>(b.cardinality) == sum);
  }
}

TEST_CASE("wrong cox tuples are rejected") {
  auto p = family_pair(2, 1, 2, ArrKind::Full);
  p.set_cox({{"A_0", {{}}}, {"H", {{0}}}});
  CHECK_THROWS_AS(theorem4_basis(p), VerificationFailure);
  auto q = family_pair(2, 1, 4, ArrKind::Full);
  Pair bare(q.group(), q.arrangement());
  CHECK_THROWS_AS(theorem4_basis(bare), UnlabeledPair);
}

TEST_CASE("relative character of G(2,2,4) inside G(2,1,4)") {
  auto p = family_pair(2, 2, 4, ArrKind::Full);
  auto big = make_grpn(2, 1, 4);
  const auto chars = linear_characters(big);
  std::vector<int> wn;
  for (int i = 0; i < 3; ++i) wn.push_back(big.generator_element(i));
  const std::size_t sigma = select_sigma(big, chars, subgroup_closure(big, wn));
  const auto rel = relative_character(p, big);
  const auto& names = p.orbit_names();
  int doubled = 0;
  for (const auto& ro : rel) {
    if (ro.dim == 0) continue;
    CHECK(ro.nonlinear_dim == 0);
    if (ro.dim == 2) {
      ++doubled;
      CHECK(ro.mult.size() == 2);
      CHECK(ro.mult.at(0) == 1);
      CHECK(ro.mult.at(sigma) == 1);
      const std::string& n = names[ro.orbit];
      CHECK((n == "G_{r,2}^pA_1" || n == "G_{r,4}^p"));
    } else {
      CHECK(ro.mult.size() == 1);
      CHECK(ro.mult.at(0) == 1);
    }
  }
  CHECK(doubled == 2);
}

TEST_CASE("relative character with G equal to the larger group") {
  auto p = family_pair(2, 1, 3, ArrKind::Full);
  for (const auto& ro : relative_character(p, p.group())) {
    if (!ro.dim) continue;
    CHECK(ro.mult.size() == 1);
    CHECK(ro.mult.at(0) == ro.dim);
  }
}

TEST_CASE("W_4 is not normal in G(2,1,4)") {
  auto w4 = make_grpn(1, 1, 4);
  Pair p(w4, make_arrangement(ArrKind::Full, 2, 4));
  CHECK_THROWS_AS(relative_character(p, make_grpn(2, 1, 4)), NotNormal);
}

TEST_CASE("class function multiplicities") {
  auto braid = family_pair(1, 1, 3, ArrKind::Zero);
  const auto classes = conjugacy_classes(braid.group());
  const auto det = det_character(braid.group());
  std::vector<Cyc> one(classes.size(), Cyc(1L)), sgn;
  for (const auto& c : classes) sgn.push_back(det.value(c.front()));
  for (int k = 0; k <= 2; ++k) {
    CHECK(multiplicity_classfn(braid, one, k) == Cyc(isotypic_dim_global(braid, trivial_character(braid.group()), k)));
    CHECK(multiplicity_classfn(braid, sgn, k) == Cyc(0L));
  }
  CHECK_THROWS_AS(multiplicity_classfn(braid, {Cyc(1L)}, 0), ClassMismatch);

  auto a22 = family_pair(2, 1, 2, ArrKind::Full);
  const auto d2 = det_character(a22.group());
  std::vector<Cyc> phi;
  for (const auto& c : conjugacy_classes(a22.group())) phi.push_back(d2.value(c.front()));
  for (int k = 0; k <= 2; ++k) CHECK(multiplicity_classfn(a22, phi, k) == Cyc(0L));
}

TEST_CASE("determinant-like characters vanish") {
  for (auto [r, p, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 4}, {3, 1, 2}, {2, 2, 2}, {4, 2, 3}}) {
    auto g = make_grpn(r, p, n);
    Pair pr(g, reflection_arrangement(g));
    CHECK(!determinant_like_characters(g).empty());
    CHECK(vanishing_check_detlike(pr).ok);
  }
}

TEST_CASE("pointwise and setwise stabilizers give equal invariants when N = Z C(G)") {
  for (auto [r, p, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 1, 3}, {2, 2, 4}}) {
    auto pr = family_pair(r, p, n, ArrKind::Full);
    const auto& g = pr.group();
    const auto c = center(g);
    for (std::size_t t = 0; t < pr.orbits().size(); ++t) {
      const auto& o = pr.orbits()[t];
      std::vector<int> zc;
      for (int z : o.Z)
        for (int x : c) zc.push_back(g.multiply(z, x));
      std::sort(zc.begin(), zc.end());
      zc.erase(std::unique(zc.begin(), zc.end()), zc.end());
      if (zc != o.N) continue;
      // Restrict the N-traces to Z and average over Z.
      const auto& tr = pr.orbit_traces(t);
      std::vector<std::int64_t> ztr;
      for (int z : o.Z) ztr.push_back(tr[std::lower_bound(o.N.begin(), o.N.end(), z) - o.N.begin()]);
      const auto triv = trivial_character(g);
      CHECK(average_to_dim(o.N, tr, triv) == average_to_dim(o.Z, ztr, triv));
    }
  }
}
