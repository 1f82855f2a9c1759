#include "reflact/catalog.hpp"

#include "reflact/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#ifndef REFLACT_DEFAULT_DATA_DIR
#define REFLACT_DEFAULT_DATA_DIR "data"
#endif

namespace reflact {
namespace {

Cyc zr(int r, long k) { return Cyc::zeta(r, k); }

Covector unit(int n, int i, int r) {
  Covector v(n, Cyc::zero(r));
  v[i] = Cyc(Rat(1), r);
  return v;
}

// x_i - w^k x_j, 0-based i < j.
Covector hij(int n, int i, int j, int r, long k) {
  Covector v = unit(n, i, r);
  v[j] = -zr(r, k);
  return v;
}

int index_or_throw(const Arrangement& a, const Covector& raw, const std::string& name) {
  const auto h = canonicalize_hyperplane(raw);
  Covector c = h.covector;
  for (auto& x : c) x = x.lift(std::lcm(a.conductor(), x.conductor()));
  const int i = a.index_of(c);
  if (i < 0) throw UndefinedName("hyperplane " + name + " is not in the arrangement");
  return i;
}

void partitions_of(int m, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(m, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_of(m - part, part, cur, out);
    cur.pop_back();
  }
}

std::string label_type(const FamilySpec& f, const std::vector<int>& lambda, int m, int u) {
  std::map<int, int, std::greater<int>> blocks;
  const int k = f.n - m;
  std::string name;
  if (k > 0) {
    if (f.r == 1) {
      if (k >= 2) blocks[k] += 1;
    } else {
      name = "G_{r," + std::to_string(k) + "}^p";
    }
  }
  for (int l : lambda)
    if (l >= 2) blocks[l] += 1;
  for (auto [l, c] : blocks) {
    const int idx = l - 1;
    name += "A_" + (idx >= 10 ? "{" + std::to_string(idx) + "}" : std::to_string(idx));
    if (c > 1) name += "^" + std::to_string(c);
  }
  if (name.empty()) name = "A_0";
  if (u > 0) name += " (u=" + std::to_string(u) + ")";
  return name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

long grpn_order(int r, int p, int n) {
  if (n == 0) return 1;
  long o = 1;
  for (int i = 0; i < n; ++i) o *= r;
  for (int i = 2; i <= n; ++i) o *= i;
  return o / p;
}

MatrixGroup make_grpn(int r, int p, int n, std::size_t cap) {
  if (r < 1 || p < 1 || n < 1 || r % p != 0)
    throw std::invalid_argument("G(r,p,n) needs r, p, n >= 1 and p | r");
  std::vector<CycMatrix> gens;
  const Cyc one(Rat(1), r), zero = Cyc::zero(r);
  for (int i = 0; i + 1 < n; ++i) {
    CycMatrix t = CycMatrix::identity(n, one);
    t(i, i) = zero;
    t(i + 1, i + 1) = zero;
    t(i, i + 1) = one;
    t(i + 1, i) = one;
    gens.push_back(t);
  }
  if (p < r) {
    CycMatrix d = CycMatrix::identity(n, one);
    d(0, 0) = zr(r, p);
    gens.push_back(d);
  }
  if (p > 1 && n >= 2) {
    CycMatrix s = CycMatrix::identity(n, one);
    s(0, 0) = zero;
    s(1, 1) = zero;
    s(0, 1) = zr(r, 1);
    s(1, 0) = zr(r, -1);
    gens.push_back(s);
  }
  if (gens.empty()) gens.push_back(CycMatrix::identity(n, one));
  return MatrixGroup::generate(gens, cap);
}

Arrangement make_arrangement(ArrKind kind, int r, int n) {
  if (n < 1 || r < 1) throw std::invalid_argument("arrangement needs n, r >= 1");
  if (kind == ArrKind::Braid) r = 1;
  std::vector<Covector> cov;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < r; ++k) cov.push_back(hij(n, i, j, r, k));
  if (kind == ArrKind::Full)
    for (int i = 0; i < n; ++i) cov.push_back(unit(n, i, r));
  return Arrangement(n, cov);
}

int named_hyperplane(const Arrangement& a, int r, const std::string& name) {
  const int n = a.dim();
  static const std::regex t_re(R"(t_?\{?(\d+)\}?)");
  std::smatch mt;
  if (name == "s") {
    if (r < 2) throw UndefinedName("s is undefined for r = 1");
    return index_or_throw(a, unit(n, 0, r), name);
  }
  if (name == "t_2^1" || name == "t2^1") {
    if (n < 2) throw UndefinedName(name + " needs n >= 2");
    return index_or_throw(a, hij(n, 0, 1, r, 1), name);
  }
  if (std::regex_match(name, mt, t_re)) {
    const int i = std::stoi(mt[1]);
    if (i < 2 || i > n) throw UndefinedName("t_i needs 2 <= i <= n");
    return index_or_throw(a, hij(n, i - 2, i - 1, r, 0), name);
  }
  throw UndefinedName("unknown hyperplane name '" + name + "'");
}

int delta(const std::vector<int>& lambda, int p) {
  int d = p;
  for (int l : lambda) d = std::gcd(d, l);
  return d;
}

std::vector<LabeledFlat> prop41_labels(const FamilySpec& f, const Arrangement& a, const IntersectionLattice& lattice) {
  const int n = f.n;
  const int r = f.kind == ArrKind::Braid ? 1 : f.r;
  std::vector<int> ms;
  for (int m = 0; m <= n; ++m) {
    if (f.kind != ArrKind::Full) {
      if (r == 1 && m != n) continue;
      if (m == n - 1) continue;
    }
    ms.push_back(m);
  }
  std::vector<LabeledFlat> out;
  for (int m : ms) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(m, m, cur, parts);
    for (const auto& lambda : parts) {
      const int d = (m == n) ? delta(lambda, f.p) : 1;
      for (int u = 0; u < d; ++u) {
        CycMatrix rows(lambda.size(), n, Cyc::zero(std::max(r, 1)));
        int pos = n - m;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
          for (int j = 0; j < lambda[i]; ++j) rows(i, pos + j) = Cyc(Rat(1), r);
          pos += lambda[i];
        }
        if (u > 0) rows(0, n - m) = zr(r, u);
        FlatKey key;
        for (std::size_t h = 0; h < a.size(); ++h) {
          bool vanish = true;
          for (std::size_t i = 0; i < rows.rows() && vanish; ++i) {
            Cyc s(0L);
            for (int c = 0; c < n; ++c) s += a[h].covector[c] * rows(i, c);
            vanish = s.is_zero();
          }
          if (vanish) key.push_back(static_cast<int>(h));
        }
        const int id = lattice.find(key);
        if (id < 0 || lattice.flat(id).codim != n - static_cast<int>(lambda.size()))
          throw CrossCheckFailure("representative for " + label_type(f, lambda, m, u) + " is not a flat");
        OrbitLabel lab{lambda, m, u, label_type(f, lambda, m, u)};
        out.push_back({lab, id});
      }
    }
  }
  return out;
}

void crosscheck_prop41(const std::vector<LabeledFlat>& labels, const std::vector<OrbitDatum>& orbits) {
  std::map<int, int> orbit_of;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (int f : orbits[i].orbit) orbit_of[f] = static_cast<int>(i);
  std::vector<int> hits(orbits.size(), 0);
  for (const auto& l : labels) {
    auto it = orbit_of.find(l.flat);
    if (it == orbit_of.end()) throw CrossCheckFailure("representative of " + l.label.type_name + " is in no orbit");
    if (hits[it->second]++) throw CrossCheckFailure("two labels share the orbit of " + l.label.type_name);
  }
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (!hits[i]) throw CrossCheckFailure("orbit " + std::to_string(i) + " has no label");
}

std::vector<CoxEntry> family_cox(const FamilySpec& f, const Arrangement& a) {
  const int n = f.n, r = f.kind == ArrKind::Braid ? 1 : f.r, p = f.p;
  if (n < 3) throw std::invalid_argument("family cox tuples need n >= 3; use the rank-2 rule");
  const bool even = p % 2 == 0 && n % 2 == 0;
  // h(1) is x1 = 0, h(i) is x_{i-1} = x_i, h21 is x1 = w x2.
  auto h = [&](int i) {
    return i == 1 ? index_or_throw(a, unit(n, 0, r), "h1") : index_or_throw(a, hij(n, i - 2, i - 1, r, 0), "h" + std::to_string(i));
  };
  auto h21 = [&]() { return index_or_throw(a, hij(n, 0, 1, r, 1), "h2^1"); };
  auto with_h21 = [&](std::vector<int> mono) {
    const int h2 = h(2);
    for (auto& x : mono)
      if (x == h2) x = h21();
    return mono;
  };
  auto k_str = [](int k) { return std::to_string(k); };
  std::vector<CoxEntry> out;
  out.push_back({"A_0", {{}}});
  if (f.kind == ArrKind::Full) {
    for (int k = 1; k <= n - 1; ++k) {
      std::vector<int> mono;
      for (int i = 1; i <= k; ++i) mono.push_back(h(i));
      out.push_back({"G_{r," + k_str(k) + "}^p", {mono}});
    }
    for (int k = 1; k <= n - 1; ++k) {
      std::vector<int> mono;
      for (int i = 1; i <= k - 1; ++i) mono.push_back(h(i));
      mono.push_back(h(k + 1));
      const std::string type = k == 1 ? "A_1" : "G_{r," + k_str(k - 1) + "}^p A_1";
      if (even && k == n - 1) out.push_back({type, {mono, with_h21(mono)}});
      else out.push_back({type, {mono}});
    }
    std::vector<int> top;
    for (int i = 1; i <= n; ++i) top.push_back(h(i));
    if (even) out.push_back({"G", {top, with_h21(top)}});
    else out.push_back({"G", {top}});
  } else {
    out.push_back({"A_1", {{h(2)}}});
    if (even && r > 1) {
      std::vector<int> tp{h(2), h21()};
      for (int i = 3; i <= n - 2; ++i) tp.push_back(h(i));
      tp.push_back(h(n));
      out.push_back({"T'", {tp}});
      std::vector<int> top{h(2), h21()};
      for (int i = 3; i <= n; ++i) top.push_back(h(i));
      out.push_back({"G", {top}});
    }
  }
  return out;
}

std::vector<CoxEntry> rank2_cox(const std::vector<OrbitDatum>& orbits, const IntersectionLattice& lattice) {
  std::vector<CoxEntry> out;
  out.push_back({"A_0", {{}}});
  std::vector<int> reps;
  for (const auto& o : orbits)
    if (o.codim == 1) reps.push_back(lattice.flat(o.rep).key.front());
  std::sort(reps.begin(), reps.end());
  for (std::size_t i = 0; i < reps.size(); ++i) out.push_back({"H" + std::to_string(i + 1), {{reps[i]}}});
  if (reps.size() >= 2) {
    CoxEntry top{"G", {}};
    for (std::size_t j = 1; j < reps.size(); ++j) top.monomials.push_back({reps[0], reps[j]});
    out.push_back(top);
  }
  return out;
}

std::string data_dir() {
  if (const char* env = std::getenv("REFLACT_DATA_DIR"); env && *env) return env;
  return REFLACT_DEFAULT_DATA_DIR;
}

MatrixGroup load_group_file(const std::string& path, std::size_t cap) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed group file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators") || !j.contains("conductor"))
    throw std::invalid_argument("group file needs conductor, dim and generators");
  const int n = j.at("dim").get<int>();
  const int m = j.at("conductor").get<int>();
  if (n < 1 || m < 1) throw std::invalid_argument("group file: dim and conductor must be positive");
  std::vector<CycMatrix> gens;
  for (const auto& g : j.at("generators")) {
    CycMatrix mat = matrix_from_json(g);
    if (static_cast<int>(mat.rows()) != n || static_cast<int>(mat.cols()) != n)
      throw std::invalid_argument("group file: generator shape does not match dim");
    for (const auto& x : mat.data())
      if (m % x.conductor() != 0) throw std::invalid_argument("group file: entry outside Q(zeta_conductor)");
    gens.push_back(std::move(mat));
  }
  if (gens.empty()) throw std::invalid_argument("group file: no generators");
  return MatrixGroup::generate(gens, cap);
}

std::optional<Covector> load_long_root(const std::string& path) {
  const json j = json::parse(read_file(path));
  if (!j.contains("long_root")) return std::nullopt;
  return covector_from_json(j.at("long_root"));
}

std::vector<CoxEntry> load_cox_file(const std::string& path, const Arrangement& a) {
  const json j = json::parse(read_file(path));
  std::vector<CoxEntry> out;
  for (const auto& e : j.at("cox")) {
    CoxEntry c{e.at("type").get<std::string>(), {}};
    for (const auto& mono : e.at("monomials")) {
      std::vector<int> idx;
      for (const auto& cov : mono) idx.push_back(index_or_throw(a, covector_from_json(cov), "in " + c.type));
      c.monomials.push_back(idx);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string reflection_type(const MatrixGroup& g, const std::vector<int>& Z, const std::vector<char>* long_mirror,
                            const Arrangement& a) {
  const auto refl = reflections(g);
  std::map<int, int> mirror;
  for (const auto& r : refl) {
    Covector c = r.hyperplane.covector;
    for (auto& x : c) x = x.lift(std::lcm(a.conductor(), x.conductor()));
    mirror[r.element] = a.index_of(c);
  }
  std::vector<int> rs;
  for (int z : Z)
    if (mirror.count(z)) rs.push_back(z);
  std::vector<int> comp(rs.size(), -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < rs.size(); ++y)
        if (comp[y] < 0 && g.multiply(rs[x], rs[y]) != g.multiply(rs[y], rs[x])) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  static const std::map<std::pair<int, int>, std::string> names = {
      {{1, 1}, "A1"},  {{2, 3}, "A2"},  {{2, 4}, "B2"},   {{2, 5}, "I2(5)"}, {{2, 6}, "G2"},
      {{3, 6}, "A3"},  {{3, 9}, "B3"},  {{3, 15}, "H3"},  {{4, 10}, "A4"},   {{4, 12}, "D4"},
      {{4, 16}, "B4"}, {{4, 24}, "F4"}, {{4, 60}, "H4"}};
  std::vector<std::string> parts;
  for (int c = 0; c < ncomp; ++c) {
    std::set<int> hs;
    int nrefl = 0, nlong = 0;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (comp[i] == c) {
        ++nrefl;
        hs.insert(mirror[rs[i]]);
      }
    for (int h : hs)
      if (long_mirror && h >= 0 && (*long_mirror)[h]) ++nlong;
    std::vector<int> idx(hs.begin(), hs.end());
    const int rk = static_cast<int>(rank(a.covector_matrix(idx)));
    auto it = names.find({rk, nrefl});
    if (it == names.end()) return "rank-" + std::to_string(rk) + " subgroup, order " + std::to_string(Z.size());
    std::string nm = it->second;
    const int nmir = static_cast<int>(hs.size());
    if (long_mirror) {
      if (nlong == 0 && (nm[0] == 'A')) nm = "Ã" + nm.substr(1);
      if ((nm == "B3" || nm == "B4") && nlong < nmir - nlong) nm[0] = 'C';
    }
    parts.push_back(nm);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out += parts[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "A0" : out;
}

std::optional<FamilySpec> parse_group_name(const std::string& s) {
  static const std::regex g_re(R"(\s*G\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  static const std::regex w_re(R"(\s*W\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(s, m, g_re)) return FamilySpec{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), ArrKind::Full};
  if (std::regex_match(s, m, w_re)) return FamilySpec{1, 1, std::stoi(m[1]), ArrKind::Full};
  return std::nullopt;
}

std::optional<FamilySpec> parse_arrangement_name(const std::string& s) {
  static const std::regex full_re(R"(\s*A_\{?(\d+)\}?\(\s*(\d+)\s*\)\s*)");
  static const std::regex zero_re(R"(\s*A_\{?(\d+)\}?\^\{?0\}?\(\s*(\d+)\s*\)\s*)");
  static const std::regex braid_re(R"(\s*braid\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(s, m, full_re)) return FamilySpec{std::stoi(m[2]), 1, std::stoi(m[1]), ArrKind::Full};
  if (std::regex_match(s, m, zero_re)) return FamilySpec{std::stoi(m[2]), 1, std::stoi(m[1]), ArrKind::Zero};
  if (std::regex_match(s, m, braid_re)) return FamilySpec{1, 1, std::stoi(m[1]), ArrKind::Braid};
  return std::nullopt;
}

}  // namespace reflact
