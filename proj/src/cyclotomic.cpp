#include "reflact/cyclotomic.hpp"

#include "reflact/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace reflact {
namespace {

// Per-conductor data: Phi_m and the residues of x^j for 0 <= j < m.
struct FieldData {
  int phi = 0;
  std::vector<std::int64_t> poly;
  std::vector<std::vector<std::int64_t>> xpow;
};

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("inexact cyclotomic division");
  return q;
}

std::unique_ptr<FieldData> build_field(int m, const std::vector<std::int64_t>& poly) {
  auto f = std::make_unique<FieldData>();
  f->poly = poly;
  f->phi = static_cast<int>(poly.size()) - 1;
  const int phi = f->phi;
  f->xpow.resize(m);
  std::vector<std::int64_t> cur(phi, 0);
  if (phi > 0) cur[0] = 1;
  for (int j = 0; j < m; ++j) {
    f->xpow[j] = cur;
    // multiply by x and reduce: x^phi = -sum poly[i] x^i
    std::vector<std::int64_t> next(phi, 0);
    const std::int64_t top = phi > 0 ? cur[phi - 1] : 0;
    for (int i = phi - 1; i >= 1; --i) next[i] = cur[i - 1];
    for (int i = 0; i < phi; ++i) next[i] -= top * poly[i];
    cur = std::move(next);
  }
  return f;
}

class FieldCache {
 public:
  const FieldData& get(int m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    {
      std::shared_lock lock(mu_);
      auto it = fields_.find(m);
      if (it != fields_.end()) return *it->second;
    }
    // Divisors first, outside the exclusive lock.
    std::vector<std::int64_t> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    std::vector<std::int64_t> poly = num;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) poly = poly_divide_exact(poly, get(d).poly);
    auto built = build_field(m, poly);
    std::unique_lock lock(mu_);
    auto [it, inserted] = fields_.try_emplace(m, std::move(built));
    return *it->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<int, std::unique_ptr<FieldData>> fields_;
};

FieldCache& cache() {
  static FieldCache c;
  return c;
}

// Reduces a length-m raw vector (exponents taken mod m) to a Cyc.
Cyc reduce_mod_m(int m, const std::vector<Rat>& raw) {
  const FieldData& f = cache().get(m);
  std::vector<Rat> c(f.phi);
  for (int j = 0; j < m; ++j) {
    if (is_zero(raw[j])) continue;
    const auto& xp = f.xpow[j];
    for (int i = 0; i < f.phi; ++i)
      if (xp[i] != 0) c[i] += raw[j] * Rat(static_cast<long>(xp[i]));
  }
  return Cyc::normalize(m, std::span<const Rat>(c.data(), c.size()));
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) { return cache().get(m).poly; }

int euler_phi(int m) { return cache().get(m).phi; }

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

Cyc::Cyc(const Rat& q, int m) : m_(m), c_(euler_phi(m)) { c_[0] = q; }

Cyc Cyc::normalize(int m, std::span<const Rat> raw) {
  const FieldData& f = cache().get(m);
  Cyc out = Cyc::zero(m);
  if (static_cast<int>(raw.size()) <= f.phi) {
    for (std::size_t i = 0; i < raw.size(); ++i) out.c_[i] = raw[i];
    return out;
  }
  std::vector<Rat> folded(m);
  for (std::size_t i = 0; i < raw.size(); ++i) folded[i % m] += raw[i];
  for (int j = 0; j < m; ++j) {
    if (reflact::is_zero(folded[j])) continue;
    const auto& xp = f.xpow[j];
    for (int i = 0; i < f.phi; ++i)
      if (xp[i] != 0) out.c_[i] += folded[j] * Rat(static_cast<long>(xp[i]));
  }
  return out;
}

Cyc Cyc::zeta(int m, long k) {
  const FieldData& f = cache().get(m);
  long e = k % m;
  if (e < 0) e += m;
  Cyc out = Cyc::zero(m);
  for (int i = 0; i < f.phi; ++i) out.c_[i] = Rat(static_cast<long>(f.xpow[e][i]));
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (!reflact::is_zero(x)) return false;
  return true;
}

bool Cyc::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!reflact::is_zero(c_[i])) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!reflact::is_zero(c_[i])) return false;
  return true;
}

Rat Cyc::to_rat() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string(*this));
  return c_[0];
}

Cyc Cyc::lift(int big_m) const {
  if (big_m == m_) return *this;
  if (big_m % m_ != 0) throw std::invalid_argument("lift target is not a multiple of the conductor");
  const int step = big_m / m_;
  std::vector<Rat> raw(static_cast<std::size_t>(step) * c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  return normalize(big_m, raw);
}

Cyc Cyc::conj() const {
  std::vector<Rat> raw(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) raw[(m_ - static_cast<int>(i) % m_) % m_] += c_[i];
  return normalize(m_, raw);
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in Q(zeta_" + std::to_string(m_) + ")");
  const int phi = static_cast<int>(c_.size());
  if (phi == 1) return Cyc(Rat(1) / c_[0], m_);
  // Solve (multiplication by *this) y = 1 in the power basis.
  RatMatrix aug(phi, phi + 1, Rat(0));
  for (int j = 0; j < phi; ++j) {
    const Cyc col = *this * Cyc::zeta(m_, j);
    for (int i = 0; i < phi; ++i) aug(i, j) = col.c_[i];
  }
  aug(0, phi) = 1;
  const auto r = rref(aug);
  Cyc out = Cyc::zero(m_);
  for (int i = 0; i < phi; ++i) out.c_[i] = r.reduced(i, phi);
  return out;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& b) {
  if (b.m_ != m_) {
    const int l = std::lcm(m_, b.m_);
    *this = lift(l);
    return *this += b.lift(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& b) {
  if (b.m_ != m_) {
    const int l = std::lcm(m_, b.m_);
    *this = lift(l);
    return *this -= b.lift(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& b) {
  if (b.m_ != m_) {
    const int l = std::lcm(m_, b.m_);
    *this = lift(l);
    return *this *= b.lift(l);
  }
  const std::size_t phi = c_.size();
  if (phi == 1) {
    c_[0] *= b.c_[0];
    return *this;
  }
  if (b.is_rational()) {
    for (auto& x : c_) x *= b.c_[0];
    return *this;
  }
  std::vector<Rat> raw(m_);
  for (std::size_t i = 0; i < phi; ++i) {
    if (reflact::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (reflact::is_zero(b.c_[j])) continue;
      raw[(i + j) % m_] += c_[i] * b.c_[j];
    }
  }
  *this = reduce_mod_m(m_, raw);
  return *this;
}

Cyc& Cyc::operator/=(const Cyc& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Q(zeta_" + std::to_string(b.m_) + ")");
  if (b.is_rational()) {
    const Rat q = b.c_[0];
    for (auto& x : c_) x /= q;
    return *this;
  }
  return *this *= b.inverse();
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const int l = std::lcm(a.m_, b.m_);
  return a.lift(l).c_ == b.lift(l).c_;
}

int compare(const Cyc& a, const Cyc& b) {
  if (a.m_ != b.m_) {
    const int l = std::lcm(a.m_, b.m_);
    return compare(a.lift(l), b.lift(l));
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::size_t Cyc::hash() const {
  std::size_t h = 0x345678;
  for (const auto& x : c_) h = (h ^ hash_value(x)) * 0x100000001b3ULL;
  return h;
}

int root_of_unity_order(const Cyc& x) {
  if (x.is_zero()) return 0;
  const int m = x.conductor();
  const int bound = (m % 2 == 0) ? m : 2 * m;
  Cyc p = x;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= x;
  }
  return 0;
}

std::string to_string(const Cyc& x) {
  if (x.is_rational()) return to_string(x.coeffs()[0]);
  std::ostringstream os;
  bool first = true;
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    Rat v = c[i];
    if (!first) {
      os << (sgn(v) < 0 ? " - " : " + ");
      if (sgn(v) < 0) v = -v;
    }
    if (i == 0) {
      os << to_string(v);
    } else {
      if (v == -1) os << "-";
      else if (v != 1) os << to_string(v) << "*";
      os << "z" << x.conductor();
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace reflact
