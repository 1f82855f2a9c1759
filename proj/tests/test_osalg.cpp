#include "doctest.h"
#include "oracles.hpp"
#include "reflact/catalog.hpp"
#include "reflact/kernels.hpp"
#include "reflact/osalg.hpp"

using namespace reflact;

namespace {

Covector cv(std::vector<long> xs) {
  Covector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Arrangement> small_corpus() {
  std::vector<Arrangement> out = {
      make_arrangement(ArrKind::Braid, 1, 3), make_arrangement(ArrKind::Braid, 1, 4),
      make_arrangement(ArrKind::Full, 2, 2),  make_arrangement(ArrKind::Full, 3, 2),
      make_arrangement(ArrKind::Full, 6, 2),  make_arrangement(ArrKind::Zero, 2, 3),
      make_arrangement(ArrKind::Full, 1, 3),  make_arrangement(ArrKind::Zero, 5, 2),
      Arrangement(3, {cv({1, 0, 0}), cv({0, 1, 0}), cv({0, 0, 1})}),
      Arrangement(3, {cv({1, 0, 0}), cv({0, 1, 0}), cv({0, 0, 1}), cv({1, 1, 0}), cv({1, 1, 1}), cv({0, 1, -1})}),
  };
  const Cyc i = Cyc::zeta(4, 1);
  out.push_back(Arrangement(3, {cv({1, 0, 0}), cv({0, 1, 0}), {Cyc(1L), i, Cyc(0L)}, {Cyc(0L), Cyc(1L), -i},
                                {Cyc(1L), Cyc(0L), Cyc(1L)}}));
  return out;
}

}  // namespace

TEST_CASE("circuits") {
  const OSAlgebra boolean(Arrangement(2, {cv({1, 0}), cv({0, 1})}));
  CHECK(boolean.circuits().empty());
  const OSAlgebra braid(make_arrangement(ArrKind::Braid, 1, 3));
  CHECK(braid.circuits() == std::vector<std::vector<int>>{{0, 1, 2}});
  const OSAlgebra a22(make_arrangement(ArrKind::Full, 2, 2));
  CHECK(a22.circuits().size() == 4);
  for (const auto& a : small_corpus()) {
    auto expect = oracle::circuits(a);
    std::sort(expect.begin(), expect.end());
    CHECK(OSAlgebra(a).circuits() == expect);
  }
}

TEST_CASE("NBC bases") {
  const OSAlgebra braid(make_arrangement(ArrKind::Braid, 1, 3));
  CHECK(braid.nbc_basis(2) == std::vector<Monomial>{{0, 1}, {0, 2}});
  CHECK(braid.nbc_basis(0) == std::vector<Monomial>{{}});
  const OSAlgebra boolean(Arrangement(3, {cv({1, 0, 0}), cv({0, 1, 0}), cv({0, 0, 1})}));
  CHECK(boolean.dim(1) == 3);
  CHECK(boolean.dim(2) == 3);
  CHECK(boolean.dim(3) == 1);
}

TEST_CASE("NBC dimensions equal the brute-force quotient") {
  for (const auto& a : small_corpus()) {
    const OSAlgebra os(a);
    for (int k = 0; k <= os.rank() + 1; ++k) CHECK(os.dim(k) == oracle::os_dim(a, k));
  }
}

TEST_CASE("straightening") {
  const OSAlgebra braid(make_arrangement(ArrKind::Braid, 1, 3));
  const auto x = braid.straighten({1, 2});
  CHECK(x.coeffs.size() == 2);
  CHECK(x.coeffs.at(braid.nbc_index(2, {0, 2})) == 1);
  CHECK(x.coeffs.at(braid.nbc_index(2, {0, 1})) == -1);
  CHECK(braid.straighten({0, 0}).is_zero());
  const auto y = braid.straighten({2, 0});
  CHECK(y.coeffs.size() == 1);
  CHECK(y.coeffs.at(braid.nbc_index(2, {0, 2})) == -1);
  CHECK(braid.straighten({0, 1, 2}).is_zero());
  for (const auto& a : small_corpus()) {
    const OSAlgebra os(a);
    for (int k = 0; k <= os.rank(); ++k)
      for (std::size_t j = 0; j < os.dim(k); ++j) {
        const auto s = os.straighten(os.nbc_basis(k)[j]);
        CHECK(s.coeffs.size() == 1);
        CHECK(s.coeffs.begin()->first == static_cast<int>(j));
      }
  }
}

TEST_CASE("Brieskorn decomposition") {
  for (const auto& a : small_corpus()) {
    const OSAlgebra os(a);
    for (int k = 0; k <= os.rank(); ++k) {
      std::size_t total = 0;
      for (const auto& c : os.brieskorn_components(k)) {
        const Arrangement sub = subarrangement(a, os.lattice(), os.lattice().flat(c.flat));
        CHECK(c.nbc.size() == OSAlgebra(sub).dim(k));
        total += c.nbc.size();
      }
      CHECK(total == os.dim(k));
    }
    for (const auto& c : os.brieskorn_components(1)) CHECK(c.nbc.size() == 1);
  }
  const OSAlgebra braid(make_arrangement(ArrKind::Braid, 1, 3));
  CHECK(braid.brieskorn_components(2).size() == 1);
  CHECK(braid.brieskorn_components(2)[0].nbc.size() == 2);
}

TEST_CASE("Euler derivation") {
  const OSAlgebra braid(make_arrangement(ArrKind::Braid, 1, 3));
  const auto d1 = braid.euler_derivation(braid.straighten({1}));
  CHECK(d1.coeffs.size() == 1);
  CHECK(d1.coeffs.at(0) == 1);
  CHECK_THROWS(braid.euler_derivation(braid.straighten({})));
  const OSAlgebra boolean(Arrangement(4, {cv({1, 0, 0, 0}), cv({0, 1, 0, 0}), cv({0, 0, 1, 0}), cv({0, 0, 0, 1})}));
  const auto d = boolean.euler_derivation(boolean.straighten({0, 2}));
  CHECK(d.coeffs.at(boolean.nbc_index(1, {2})) == 1);
  CHECK(d.coeffs.at(boolean.nbc_index(1, {0})) == -1);

  for (const auto& a : small_corpus()) {
    const OSAlgebra os(a);
    for (int k = 2; k <= os.rank(); ++k) {
      const RatMatrix dd = os.euler_matrix(k - 1) * os.euler_matrix(k);
      CHECK(std::all_of(dd.data().begin(), dd.data().end(), [](const Rat& x) { return sgn(x) == 0; }));
    }
    // exactness in positive degrees
    for (int k = 1; k <= os.rank(); ++k) {
      const std::size_t rk = rank(os.euler_matrix(k));
      const std::size_t rk_next = k + 1 <= os.rank() ? rank(os.euler_matrix(k + 1)) : 0;
      CHECK(rk + rk_next == os.dim(k));
    }
  }
}

TEST_CASE("group action on the OS algebra") {
  const auto g = make_grpn(1, 1, 3);
  const auto a = make_arrangement(ArrKind::Braid, 1, 3);
  const OSAlgebra os(a);
  const HyperplaneAction act(g, a);
  CHECK(os.action_matrix(act.perm(0), 2) == RatMatrix::identity(2));
  for (std::size_t e = 0; e < g.order(); ++e) {
    int fixed = 0;
    for (int h = 0; h < 3; ++h) fixed += act.image(static_cast<int>(e), h) == h;
    const auto m = os.action_matrix(act.perm(static_cast<int>(e)), 1);
    Rat tr = 0;
    for (int i = 0; i < 3; ++i) tr += m(i, i);
    CHECK(tr == fixed);
  }
  for (auto [r, p, n, kind] : std::vector<std::tuple<int, int, int, ArrKind>>{
           {1, 1, 3, ArrKind::Braid}, {2, 1, 2, ArrKind::Full}, {2, 2, 3, ArrKind::Zero}, {3, 1, 2, ArrKind::Full}}) {
    const auto G = make_grpn(r, p, n);
    const auto A = make_arrangement(kind, r, n);
    const OSAlgebra O(A);
    const HyperplaneAction act2(G, A);
    for (int k = 1; k <= O.rank(); ++k)
      for (std::size_t s = 0; s < G.num_generators(); ++s)
        for (std::size_t t = 0; t < G.num_generators(); ++t) {
          const int gs = G.generator_element(s), gt = G.generator_element(t);
          CHECK(O.action_matrix(act2.perm(gs), k) * O.action_matrix(act2.perm(gt), k) ==
                O.action_matrix(act2.perm(G.multiply(gs, gt)), k));
          if (t == 0)
            CHECK(O.action_matrix(act2.perm(gs), k - 1) * O.euler_matrix(k) ==
                  O.euler_matrix(k) * O.action_matrix(act2.perm(gs), k));
        }
  }
}

TEST_CASE("serial and parallel trace kernels agree") {
  const auto G = make_grpn(2, 1, 3);
  const auto A = make_arrangement(ArrKind::Full, 2, 3);
  const OSAlgebra os(A);
  const HyperplaneAction act(G, A);
  std::vector<const int*> perms;
  for (std::size_t e = 0; e < G.order(); ++e) perms.push_back(act.perm(static_cast<int>(e)));
  for (int k = 0; k <= os.rank(); ++k) {
    const auto s = traces_serial(os, k, perms);
    CHECK(s == traces_parallel(os, k, perms));
    CHECK(s[0] == static_cast<std::int64_t>(os.dim(k)));
  }
}
