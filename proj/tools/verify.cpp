#include "cli.hpp"

#include "reflact/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace reflact::cli {
namespace {

const json& expected() {
  static const json j = [] {
    const std::string path = data_dir() + "/expected.json";
    std::ifstream f(path);
    if (!f) throw ValidationError("missing expected values file " + path);
    return json::parse(f);
  }();
  return j;
}

ArrKind kind_of(const std::string& s) { return s == "full" ? ArrKind::Full : ArrKind::Zero; }

std::string group_name(int r, int p, int n) {
  return "G(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

std::string arr_name(ArrKind k, int r, int n) {
  return "A_" + std::to_string(n) + (k == ArrKind::Zero ? "^0" : "") + "(" + std::to_string(r) + ")";
}

Pair family_pair(int r, int p, int n, ArrKind kind) {
  return Pair(make_grpn(r, p, n), make_arrangement(kind, r, n), FamilySpec{r, p, n, kind});
}

Pair reflection_pair(int r, int p, int n) {
  MatrixGroup g = make_grpn(r, p, n);
  Arrangement a = reflection_arrangement(g);
  const ArrKind kind = r == 1 ? ArrKind::Braid : (p < r ? ArrKind::Full : ArrKind::Zero);
  return Pair(std::move(g), std::move(a), FamilySpec{r == 1 ? 1 : r, p, n, kind});
}

Pair exceptional_pair(const std::string& name) {
  const std::string file = data_dir() + "/" + name + ".json";
  MatrixGroup g = load_group_file(file);
  Arrangement a = reflection_arrangement(g);
  Pair p(std::move(g), std::move(a));
  if (auto lr = load_long_root(file)) p.set_long_root(*lr);
  p.set_cox(load_cox_file(data_dir() + "/" + name + "_cox.json", p.arrangement()));
  return p;
}

std::vector<long> trimmed(std::vector<long> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::vector<long> poly_of(const json& e) { return trimmed(e.at("poincare").get<std::vector<long>>()); }

std::string mismatch(const std::vector<long>& got, const std::vector<long>& want) {
  return "engine " + format_poly(got) + ", expected " + format_poly(want);
}

using Job = std::function<VerifyCase()>;

VerifyCase guarded(const std::string& suite, const std::string& name, const std::function<void(VerifyCase&)>& body) {
  VerifyCase c{suite, name, false, {}};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("error: ") + e.what();
  }
  return c;
}

bool in_bounds(const json& e, int max_r, int max_n) {
  return e.at("r").get<int>() <= max_r && e.at("n").get<int>() <= max_n;
}

std::vector<Job> table1_jobs(int max_r) {
  std::vector<Job> jobs;
  for (const auto& e : expected().at("table1")) {
    if (e.at("r").get<int>() > max_r) continue;
    jobs.push_back([e] {
      const int r = e.at("r"), p = e.at("p");
      const ArrKind k = kind_of(e.at("kind"));
      return guarded("table1", group_name(r, p, 2) + " on " + arr_name(k, r, 2), [&](VerifyCase& c) {
        Pair pr = family_pair(r, p, 2, k);
        const auto got = trimmed(poincare_invariants(pr, trivial_character(pr.group())));
        long orbits1 = 0;
        for (const auto& o : pr.orbits()) orbits1 += o.codim == 1;
        const bool pattern = (got.size() > 2 ? got[2] : 0) == orbits1 - 1;
        c.pass = got == poly_of(e) && pattern;
        c.detail = c.pass ? "P = " + format_poly(got) + ", panel " + e.at("panel").get<std::string>()
                          : mismatch(got, poly_of(e)) + (pattern ? "" : "; dim H^2 != |A/G|-1");
      });
    });
  }
  return jobs;
}

std::vector<Job> poly_jobs(const std::string& suite, const char* key, int max_r, int max_n, bool reflection) {
  std::vector<Job> jobs;
  for (const auto& e : expected().at(key)) {
    if (!in_bounds(e, max_r, max_n)) continue;
    jobs.push_back([e, suite, reflection] {
      const int r = e.at("r"), p = e.at("p"), n = e.at("n");
      const ArrKind k = reflection ? ArrKind::Full : kind_of(e.at("kind"));
      const std::string name = group_name(r, p, n) + " on " + (reflection ? "its reflection arrangement" : arr_name(k, r, n));
      return guarded(suite, name, [&](VerifyCase& c) {
        Pair pr = reflection ? reflection_pair(r, p, n) : family_pair(r, p, n, k);
        const auto got = trimmed(poincare_invariants(pr, trivial_character(pr.group())));
        c.pass = got == poly_of(e);
        c.detail = c.pass ? "P = " + format_poly(got) : mismatch(got, poly_of(e));
      });
    });
  }
  return jobs;
}

std::vector<Job> exceptional_jobs() {
  std::vector<Job> jobs;
  for (const auto& e : expected().at("exceptional")) {
    jobs.push_back([e] {
      const std::string name = e.at("group");
      return guarded("cor1", name + " on its reflection arrangement", [&](VerifyCase& c) {
        Pair pr = exceptional_pair(name);
        const auto got = trimmed(poincare_invariants(pr, trivial_character(pr.group())));
        const auto rep = isotypic_dims_orbitwise(pr, trivial_character(pr.group()));
        std::multiset<std::string> ct, want;
        for (const auto& o : rep.orbits)
          for (long i = 0; i < o.dim; ++i) ct.insert(o.type);
        for (const auto& t : e.at("ct")) want.insert(t.get<std::string>());
        const bool order = pr.group().order() == e.at("order").get<std::size_t>() &&
                           reflections(pr.group()).size() == e.at("reflections").get<std::size_t>();
        c.pass = got == poly_of(e) && ct == want && order;
        std::ostringstream os;
        os << "P = " << format_poly(got) << ", CT = {";
        bool first = true;
        for (const auto& t : ct) os << (first ? "" : ", ") << t, first = false;
        os << "}";
        if (!order) os << "; order or reflection count differs";
        if (got != poly_of(e)) os << "; expected " << format_poly(poly_of(e));
        c.detail = os.str();
      });
    });
  }
  return jobs;
}

std::string label_str(const OrbitLabel& l) {
  std::ostringstream os;
  os << l.type_name << " [lambda=(";
  for (std::size_t i = 0; i < l.lambda.size(); ++i) os << (i ? "," : "") << l.lambda[i];
  os << "), m=" << l.m << ", u=" << l.u << "]";
  return os.str();
}

std::vector<Job> table2_jobs(int max_r, int max_n) {
  std::vector<Job> jobs;
  for (const auto& e : expected().at("table2")) {
    if (!in_bounds(e, max_r, max_n)) continue;
    jobs.push_back([e] {
      const int r = e.at("r"), p = e.at("p"), n = e.at("n");
      const ArrKind k = kind_of(e.at("kind"));
      return guarded("table2", group_name(r, p, n) + " on " + arr_name(k, r, n), [&](VerifyCase& c) {
        Pair pr = family_pair(r, p, n, k);
        const auto labels = prop41_labels(*pr.family(), pr.arrangement(), pr.lattice());
        crosscheck_prop41(labels, pr.orbits());
        const auto triv = trivial_character(pr.group());
        std::vector<std::string> bad;
        long nonzero = 0;
        for (const auto& l : labels) {
          long want = 0;
          for (const auto& row : e.at("orbits"))
            if (row.at("lambda").get<std::vector<int>>() == l.label.lambda && row.at("m").get<int>() == l.label.m)
              want = row.at("dim");
          const long got = orbit_dim(pr, triv, pr.orbit_of(l.flat));
          nonzero += got != 0;
          if (got != want)
            bad.push_back("(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(n) + ", " +
                          label_str(l.label) + "): " + std::to_string(got) + " vs " + std::to_string(want));
        }
        c.pass = bad.empty();
        std::string d;
        for (const auto& b : bad) d += (d.empty() ? "" : "; ") + b;
        c.detail = c.pass ? std::to_string(labels.size()) + " orbits, " + std::to_string(nonzero) + " in CT_G" : d;
      });
    });
  }
  return jobs;
}

std::vector<Job> thm4_jobs(int max_r, int max_n) {
  std::vector<Job> jobs;
  auto basis_job = [](std::string name, std::function<Pair()> make) -> Job {
    return [name, make] {
      return guarded("thm4", name, [&](VerifyCase& c) {
        Pair pr = make();
        const auto b = theorem4_basis(pr);
        c.pass = true;
        c.detail = std::to_string(b.cardinality) + " invariants certified";
      });
    };
  };
  for (const auto& e : expected().at("table1")) {
    if (e.at("r").get<int>() > max_r) continue;
    const int r = e.at("r"), p = e.at("p");
    const ArrKind k = kind_of(e.at("kind"));
    jobs.push_back(basis_job(group_name(r, p, 2) + " on " + arr_name(k, r, 2), [=] { return family_pair(r, p, 2, k); }));
  }
  for (const auto& e : expected().at("cor2")) {
    if (!in_bounds(e, max_r, max_n) || e.at("n").get<int>() < 3) continue;
    const int r = e.at("r"), p = e.at("p"), n = e.at("n");
    const ArrKind k = kind_of(e.at("kind"));
    jobs.push_back(basis_job(group_name(r, p, n) + " on " + arr_name(k, r, n), [=] { return family_pair(r, p, n, k); }));
  }
  for (const char* name : {"H3", "F4"})
    jobs.push_back(basis_job(std::string(name) + " with shipped cox tuples", [name] { return exceptional_pair(name); }));
  for (const auto& e : expected().at("table5")) {
    if (!in_bounds(e, max_r, max_n)) continue;
    jobs.push_back([e] {
      const int r = e.at("r"), p = e.at("p"), n = e.at("n");
      return guarded("thm4", "cox monomials of " + group_name(r, p, n) + " on " + arr_name(ArrKind::Full, r, n),
                     [&](VerifyCase& c) {
                       Pair pr = family_pair(r, p, n, ArrKind::Full);
                       std::multiset<std::vector<int>> got, want;
                       for (const auto& x : theorem4_basis(pr).entries)
                         for (auto m : x.monomials) got.insert(m);
                       for (const auto& names : e.at("monomials")) {
                         std::vector<int> m;
                         for (const auto& h : names) m.push_back(named_hyperplane(pr.arrangement(), r, h));
                         want.insert(m);
                       }
                       c.pass = got == want;
                       c.detail = c.pass ? "matches the published table" : "constructed monomials differ";
                     });
    });
  }
  return jobs;
}

std::vector<Job> thm6_jobs(int max_r, int max_n) {
  std::vector<Job> jobs;
  for (const auto& e : expected().at("thm6")) {
    if (!in_bounds(e, max_r, max_n)) continue;
    jobs.push_back([e] {
      const int r = e.at("r"), p = e.at("p"), n = e.at("n");
      return guarded("thm6", group_name(r, p, n) + " in " + group_name(r, 1, n) + " on " + arr_name(ArrKind::Full, r, n),
                     [&](VerifyCase& c) {
                       Pair pr = family_pair(r, p, n, ArrKind::Full);
                       const MatrixGroup big = make_grpn(r, 1, n);
                       std::vector<int> wn;
                       for (int i = 0; i + 1 < n; ++i) wn.push_back(big.generator_element(i));
                       const auto chars = linear_characters(big);
                       // an odd index leaves no order-two character to find
                       std::size_t sigma = 0;
                       if (!e.at("sigma_orbits").empty()) sigma = select_sigma(big, chars, subgroup_closure(big, wn));
                       std::map<int, std::size_t> label_of;  // orbit -> label index
                       const auto labels = prop41_labels(*pr.family(), pr.arrangement(), pr.lattice());
                       for (std::size_t i = 0; i < labels.size(); ++i) label_of[pr.orbit_of(labels[i].flat)] = i;
                       std::vector<std::string> bad;
                       int doubled = 0;
                       for (const auto& ro : relative_character(pr, big)) {
                         if (ro.dim == 0) continue;
                         const auto& l = labels.at(label_of.at(static_cast<int>(ro.orbit))).label;
                         bool in_sigma = false;
                         for (const auto& s : e.at("sigma_orbits"))
                           in_sigma = in_sigma || (s.at("lambda").get<std::vector<int>>() == l.lambda && s.at("m").get<int>() == l.m);
                         std::map<std::size_t, long> want{{0, 1}};
                         if (in_sigma) want[sigma] = 1, ++doubled;
                         if (ro.mult != want || ro.nonlinear_dim != 0) bad.push_back(label_str(l));
                       }
                       c.pass = bad.empty();
                       std::string d;
                       for (const auto& b : bad) d += (d.empty() ? "" : "; ") + b;
                       c.detail = c.pass ? std::to_string(doubled) + " orbits carry 1+sigma, the rest are trivial"
                                         : "character differs on " + d;
                     });
    });
  }
  return jobs;
}

std::vector<Job> cor5_jobs(int max_r, int max_n) {
  std::vector<Job> jobs;
  for (int r = 1; r <= max_r; ++r)
    for (int p = 1; p <= r; ++p) {
      if (r % p) continue;
      for (int n = 1; n <= max_n; ++n) {
        if (n == 1 && p == r) continue;
        jobs.push_back([=] {
          return guarded("cor5", group_name(r, p, n), [&](VerifyCase& c) {
            Pair pr = reflection_pair(r, p, n);
            const auto dl = determinant_like_characters(pr.group());
            const auto rep = vanishing_check_detlike(pr);
            c.pass = !dl.empty() && rep.ok;
            c.detail = std::to_string(dl.size()) + " determinant-like characters" +
                       (rep.ok ? ", none occurs" : ": " + rep.failures.front());
          });
        });
      }
    }
  for (const char* name : {"H3", "F4"})
    jobs.push_back([name] {
      return guarded("cor5", name, [&](VerifyCase& c) {
        Pair pr = exceptional_pair(name);
        const auto rep = vanishing_check_detlike(pr);
        c.pass = rep.ok && !determinant_like_characters(pr.group()).empty();
        c.detail = rep.ok ? "no determinant-like character occurs" : rep.failures.front();
      });
    });
  return jobs;
}

// d^2 = 0, exactness by ranks, and commuting with the generators.
void check_acyclic(const Pair& pr, VerifyCase& c) {
  const OSAlgebra& os = pr.os();
  const int r = os.rank();
  std::vector<RatMatrix> d(r + 1);
  std::vector<std::size_t> rk(r + 2, 0);
  for (int k = 1; k <= r; ++k) {
    d[k] = os.euler_matrix(k);
    rk[k] = rank(d[k]);
  }
  std::vector<std::string> bad;
  for (int k = 2; k <= r; ++k) {
    const RatMatrix z = d[k - 1] * d[k];
    if (std::any_of(z.data().begin(), z.data().end(), [](const Rat& x) { return x != 0; }))
      bad.push_back("d^2 != 0 in degree " + std::to_string(k));
  }
  for (int k = 0; k <= r; ++k)
    if (rk[k] + rk[k + 1] != os.dim(k)) bad.push_back("not exact in degree " + std::to_string(k));
  for (std::size_t s = 0; s < pr.group().num_generators(); ++s) {
    const int* perm = pr.action().perm(pr.group().generator_element(s));
    for (int k = 1; k <= r; ++k)
      if (d[k] * os.action_matrix(perm, k) != os.action_matrix(perm, k - 1) * d[k])
        bad.push_back("d does not commute with generator " + std::to_string(s) + " in degree " + std::to_string(k));
  }
  c.pass = bad.empty();
  c.detail = c.pass ? "exact in every degree, equivariant" : bad.front();
}

constexpr std::size_t kAcyclicMaxHyperplanes = 16;

std::vector<Job> acyclic_jobs(int max_r, int max_n) {
  std::vector<Job> jobs;
  for (int r = 1; r <= max_r; ++r)
    for (int n = 2; n <= max_n; ++n)
      for (ArrKind k : {ArrKind::Full, ArrKind::Zero}) {
        const Arrangement a = make_arrangement(k, r, n);
        if (a.size() > kAcyclicMaxHyperplanes) continue;
        jobs.push_back([=] {
          return guarded("acyclic", arr_name(k, r, n), [&](VerifyCase& c) {
            const int p = k == ArrKind::Full ? 1 : r;
            Pair pr(make_grpn(r, p, n), make_arrangement(k, r, n));
            check_acyclic(pr, c);
          });
        });
      }
  jobs.push_back([] {
    return guarded("acyclic", "H3 reflection arrangement", [&](VerifyCase& c) { check_acyclic(exceptional_pair("H3"), c); });
  });
  return jobs;
}

}  // namespace

std::vector<VerifyCase> verify_suite(const std::string& name, int max_r, int max_n, int jobs) {
  const int R = max_r > 0 ? max_r : (name == "table1" ? 6 : 4);
  const int N = max_n > 0 ? max_n : 4;
  std::vector<Job> js;
  if (name == "table1") js = table1_jobs(R);
  else if (name == "table2") js = table2_jobs(R, N);
  else if (name == "cor1") {
    js = poly_jobs("cor1", "cor1", R, N, true);
    for (auto& j : exceptional_jobs()) js.push_back(std::move(j));
  } else if (name == "cor2") js = poly_jobs("cor2", "cor2", R, N, false);
  else if (name == "thm4") js = thm4_jobs(R, N);
  else if (name == "thm6") js = thm6_jobs(R, N);
  else if (name == "cor5") js = cor5_jobs(R, N);
  else if (name == "acyclic") js = acyclic_jobs(R, N);
  else throw ValidationError("unknown suite " + name + " (table1, table2, cor1, cor2, thm4, thm6, cor5, acyclic)");

  std::vector<VerifyCase> out(js.size());
  const long n = static_cast<long>(js.size());
  // Each case builds its own pair, so cases share nothing mutable.
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 1 ? jobs : 1) if (jobs > 1)
  for (long i = 0; i < n; ++i) out[i] = js[i]();
  return out;
}

}  // namespace reflact::cli
