#pragma once

#include "reflact/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace reflact {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
/// Computed once per conductor and cached; safe to call from any thread.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

/// Euler's totient, equal to deg Phi_m.
int euler_phi(int m);

/// An element of Q(zeta_m) stored as its residue modulo Phi_m in the power
/// basis 1, zeta_m, ..., zeta_m^{phi(m)-1}.
///
/// Binary operations on operands with different conductors lift both to
/// the lcm first. Equality does the same, so a value compares equal across
/// representations. Hashing is only meaningful between values of one
/// conductor; containers that hash Cyc keep a single conductor throughout.
class Cyc {
 public:
  Cyc() : m_(1), c_(1) {}
  Cyc(const Rat& q, int m = 1);
  Cyc(long q) : Cyc(Rat(q)) {}

  static Cyc zero(int m) { return Cyc(Rat(0), m); }

  /// Residue of sum raw[i] zeta_m^i modulo Phi_m. Empty input is zero.
  static Cyc normalize(int m, std::span<const Rat> raw);
  /// zeta_m^k for any integer k.
  static Cyc zeta(int m, long k);

  int conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Rational value; throws std::domain_error unless is_rational().
  Rat to_rat() const;

  /// Same field element written over Q(zeta_M); requires m | M.
  Cyc lift(int big_m) const;
  /// Complex conjugate, i.e. zeta -> zeta^{-1}.
  Cyc conj() const;
  Cyc inverse() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& b);
  Cyc& operator-=(const Cyc& b);
  Cyc& operator*=(const Cyc& b);
  Cyc& operator/=(const Cyc& b);

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);

  /// Total order on coefficient vectors (same conductor after lifting).
  /// Not a field order; used only for deterministic sorting.
  friend int compare(const Cyc& a, const Cyc& b);

  std::size_t hash() const;

 private:
  int m_;
  std::vector<Rat> c_;
};

inline bool is_zero(const Cyc& x) { return x.is_zero(); }

int lcm_conductor(int a, int b);

/// Multiplicative order of a root of unity, or 0 if x is not one.
int root_of_unity_order(const Cyc& x);

/// Human-readable form such as "1 + 2*z3 - 1/2*z3^2" (z<m> is zeta_m).
std::string to_string(const Cyc& x);

struct CycHash {
  std::size_t operator()(const Cyc& x) const { return x.hash(); }
};

}  // namespace reflact
