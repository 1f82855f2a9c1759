#include "reflact/osalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace reflact {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("straightening coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("straightening coefficient overflow");
  return r;
}

}  // namespace

void OSElement::add(int idx, const Rat& c) {
  if (reflact::is_zero(c)) return;
  auto [it, inserted] = coeffs.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (reflact::is_zero(it->second)) coeffs.erase(it);
  }
}

int sort_with_sign(std::vector<int>& seq) {
  int sign = 1;
  // insertion sort; sequences are short
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i - 1] == seq[i]) return 0;
  return sign;
}

Monomial OSAlgebra::to_monomial(Mask m) {
  Monomial out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask OSAlgebra::to_mask(const Monomial& sorted) {
  Mask m = 0;
  for (int i : sorted) m |= Mask{1} << i;
  return m;
}

OSAlgebra::OSAlgebra(Arrangement a) : a_(std::move(a)) {
  if (a_.size() > 64) throw std::invalid_argument("the OS algebra supports at most 64 hyperplanes");
  lattice_ = build_lattice(a_);
  const int r = lattice_.rank();
  degrees_.resize(r + 1);
  for (int k = 0; k <= r; ++k) once_.push_back(std::make_unique<std::once_flag>());
}

bool OSAlgebra::is_independent(Mask m) const {
  return lattice_.flat(lattice_.closure_mask(m)).codim == std::popcount(m);
}

const OSAlgebra::Degree& OSAlgebra::degree(int k) const {
  static const Degree empty;
  if (k < 0 || k > rank()) return empty;
  std::call_once(*once_[k], [&] { build_degree(k); });
  return *degrees_[k];
}

void OSAlgebra::build_degree(int k) const {
  auto d = std::make_unique<Degree>();
  const int nh = static_cast<int>(a_.size());
  // Independent k-subsets in lexicographic order, via lattice joins.
  std::vector<Mask> indep;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int start, int flat) -> void {
    if (static_cast<int>(stack.size()) == k) {
      indep.push_back(to_mask(stack));
      return;
    }
    for (int h = start; h < nh; ++h) {
      const int f = lattice_.join(flat, h);
      if (lattice_.flat(f).codim != static_cast<int>(stack.size()) + 1) continue;
      stack.push_back(h);
      self(self, h + 1, f);
      stack.pop_back();
    }
  };
  dfs(dfs, 0, 0);

  for (Mask m : indep) {
    const Monomial s = to_monomial(m);
    int f = 0;
    bool nbc = true;
    for (int j = k - 1; j >= 0 && nbc; --j) {
      f = lattice_.join(f, s[j]);
      nbc = lattice_.flat(f).key.front() == s[j];
    }
    if (nbc) {
      d->nbc_idx[m] = static_cast<int>(d->nbc.size());
      d->nbc.push_back(s);
      d->flats.push_back(lattice_.closure_mask(m));
    }
  }
  for (Mask m : indep) d->table[m] = reduce(m, *d);
  degrees_[k] = std::move(d);
}

// Rewrites h_S by the circuit relation at the rightmost broken suffix. Every
// produced monomial is lexicographically smaller, so it is already tabulated.
IntTerms OSAlgebra::reduce(Mask m, Degree& d) const {
  if (auto it = d.nbc_idx.find(m); it != d.nbc_idx.end()) return {{it->second, 1}};
  const Monomial s = to_monomial(m);
  const int k = static_cast<int>(s.size());
  int f = 0, j = k - 1, c = -1;
  for (; j >= 0; --j) {
    f = lattice_.join(f, s[j]);
    c = lattice_.flat(f).key.front();
    if (c != s[j]) break;
  }
  if (j < 0) throw std::logic_error("independent monomial classified as broken without witness");
  // Minimal T within the suffix whose closure still contains c.
  std::vector<int> T(s.begin() + j, s.end());
  for (std::size_t i = 0; i < T.size();) {
    std::vector<int> trial = T;
    trial.erase(trial.begin() + i);
    const auto& key = lattice_.flat(lattice_.closure(trial)).key;
    if (std::binary_search(key.begin(), key.end(), c)) T = std::move(trial);
    else ++i;
  }
  std::vector<int> rest;
  std::set_difference(s.begin(), s.end(), T.begin(), T.end(), std::back_inserter(rest));
  std::vector<int> tr = T;
  tr.insert(tr.end(), rest.begin(), rest.end());
  const int eps = sort_with_sign(tr);

  std::map<int, std::int64_t> acc;
  for (std::size_t i = 0; i < T.size(); ++i) {
    std::vector<int> seq{c};
    for (std::size_t t = 0; t < T.size(); ++t)
      if (t != i) seq.push_back(T[t]);
    seq.insert(seq.end(), rest.begin(), rest.end());
    const int sg = sort_with_sign(seq);
    if (sg == 0) continue;
    auto it = d.table.find(to_mask(seq));
    if (it == d.table.end()) continue;  // dependent support
    const std::int64_t coef = eps * sg * ((i % 2 == 0) ? 1 : -1);
    for (const auto& [idx, v] : it->second) acc[idx] = checked_add(acc[idx], checked_mul(coef, v));
  }
  IntTerms out;
  for (const auto& [idx, v] : acc)
    if (v != 0) out.emplace_back(idx, v);
  return out;
}

const std::vector<Monomial>& OSAlgebra::nbc_basis(int k) const { return degree(k).nbc; }

int OSAlgebra::nbc_flat(int k, int j) const { return degree(k).flats.at(j); }

int OSAlgebra::nbc_index(int k, const Monomial& sorted) const {
  const auto& d = degree(k);
  auto it = d.nbc_idx.find(to_mask(sorted));
  return it == d.nbc_idx.end() ? -1 : it->second;
}

IntTerms OSAlgebra::straighten_terms(const Monomial& mono) const {
  std::vector<int> seq = mono;
  const int sg = sort_with_sign(seq);
  const int k = static_cast<int>(seq.size());
  if (sg == 0 || k > rank()) return {};
  for (int i : seq)
    if (i < 0 || i >= static_cast<int>(a_.size())) throw std::out_of_range("hyperplane index out of range");
  const auto& d = degree(k);
  auto it = d.table.find(to_mask(seq));
  if (it == d.table.end()) return {};
  IntTerms out = it->second;
  if (sg < 0)
    for (auto& t : out) t.second = -t.second;
  return out;
}

IntTerms OSAlgebra::straighten_image(const int* perm, const Monomial& mono) const {
  Monomial img(mono.size());
  for (std::size_t i = 0; i < mono.size(); ++i) img[i] = perm[mono[i]];
  return straighten_terms(img);
}

OSElement OSAlgebra::straighten(const Monomial& mono) const {
  OSElement x;
  x.k = static_cast<int>(mono.size());
  for (const auto& [idx, v] : straighten_terms(mono)) x.add(idx, Rat(static_cast<long>(v)));
  return x;
}

RatMatrix OSAlgebra::action_matrix(const int* perm, int k) const {
  const auto& basis = nbc_basis(k);
  RatMatrix m(basis.size(), basis.size(), Rat(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [idx, v] : straighten_image(perm, basis[j])) m(idx, j) = Rat(static_cast<long>(v));
  return m;
}

OSElement OSAlgebra::euler_derivation(const OSElement& x) const {
  if (x.k < 1) throw std::invalid_argument("the Euler derivation needs degree >= 1");
  OSElement out;
  out.k = x.k - 1;
  const auto& basis = nbc_basis(x.k);
  for (const auto& [idx, c] : x.coeffs) {
    const Monomial& s = basis[idx];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Monomial sub = s;
      sub.erase(sub.begin() + i);
      const long sign = (i % 2 == 0) ? 1 : -1;
      for (const auto& [j, v] : straighten_terms(sub)) out.add(j, c * Rat(sign * v));
    }
  }
  return out;
}

RatMatrix OSAlgebra::euler_matrix(int k) const {
  RatMatrix m(dim(k - 1), dim(k), Rat(0));
  for (std::size_t j = 0; j < dim(k); ++j) {
    OSElement e;
    e.k = k;
    e.add(static_cast<int>(j), Rat(1));
    for (const auto& [i, v] : euler_derivation(e).coeffs) m(i, j) = v;
  }
  return m;
}

std::vector<BrieskornComponent> OSAlgebra::brieskorn_components(int k) const {
  std::vector<BrieskornComponent> out;
  if (k < 0 || k > rank()) return out;
  std::map<int, std::size_t> pos;
  for (int f : lattice_.by_codim(k)) {
    pos[f] = out.size();
    out.push_back({f, k, {}});
  }
  const auto& d = degree(k);
  for (std::size_t j = 0; j < d.nbc.size(); ++j) out[pos.at(d.flats[j])].nbc.push_back(static_cast<int>(j));
  return out;
}

std::vector<std::vector<int>> OSAlgebra::circuits() const {
  std::vector<std::vector<int>> out;
  const int nh = static_cast<int>(a_.size());
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int start, int flat) -> void {
    for (int h = start; h < nh; ++h) {
      const int f = lattice_.join(flat, h);
      stack.push_back(h);
      if (lattice_.flat(f).codim == static_cast<int>(stack.size())) {
        self(self, h + 1, f);
      } else {
        bool minimal = true;
        for (std::size_t i = 0; i + 1 < stack.size() && minimal; ++i) {
          std::vector<int> sub = stack;
          sub.erase(sub.begin() + i);
          minimal = lattice_.flat(lattice_.closure(sub)).codim == static_cast<int>(sub.size());
        }
        if (minimal) out.push_back(stack);
      }
      stack.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

OSElement OSAlgebra::multiply(const OSElement& x, const OSElement& y) const {
  OSElement out;
  out.k = x.k + y.k;
  const auto& bx = nbc_basis(x.k);
  const auto& by = nbc_basis(y.k);
  for (const auto& [i, a] : x.coeffs)
    for (const auto& [j, b] : y.coeffs) {
      Monomial m = bx[i];
      m.insert(m.end(), by[j].begin(), by[j].end());
      for (const auto& [idx, v] : straighten_terms(m)) out.add(idx, a * b * Rat(static_cast<long>(v)));
    }
  return out;
}

}  // namespace reflact
