#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N) and exact matrix rank over them.
//
// A scalar is stored as the unique residue modulo the N-th cyclotomic polynomial,
// i.e. phi(N) rational coefficients on the power basis 1, zeta_N, ..., zeta_N^{phi(N)-1}.
// Binary operations first embed both operands into Q(zeta_lcm).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jumploci/exponent.hpp"

namespace jumploci {

std::uint32_t euler_phi(std::uint32_t n);

/// Integer coefficients of Phi_n, lowest degree first. Memoized, thread-safe.
const std::vector<mpz_class>& cyclotomic_polynomial(std::uint32_t n);

class CycScalar {
 public:
  /// Zero in Q = Q(zeta_1).
  CycScalar();
  explicit CycScalar(const mpq_class& value, std::uint32_t conductor = 1);
  explicit CycScalar(long value) : CycScalar(mpq_class(value)) {}

  static CycScalar zero() { return CycScalar(); }
  static CycScalar one() { return CycScalar(1L); }
  /// zeta_n^k.
  static CycScalar zeta(std::uint32_t n, std::int64_t k = 1);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  /// Same value expressed in Q(zeta_m); m must be a multiple of conductor().
  CycScalar embed(std::uint32_t m) const;

  bool is_zero() const;
  bool is_one() const;

  CycScalar inverse() const;
  CycScalar pow(std::int64_t e) const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);

  std::string to_string() const;

 private:
  CycScalar(std::uint32_t conductor, std::vector<mpq_class> coeffs);
  void unify_with(CycScalar& other);

  std::uint32_t conductor_;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& s);

/// exp(2 pi i q) with conductor = denominator of q (after reduction mod 1).
CycScalar root_of_unity(const Exponent& q);
/// Same, from a raw numerator/denominator; a zero denominator raises invalid_exponent.
CycScalar root_of_unity(std::int64_t num, std::int64_t den);

/// Dense matrix whose entries all live in one field Q(zeta_N).
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols);
  explicit CycMatrix(const std::vector<std::vector<CycScalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t conductor() const { return conductor_; }

  const CycScalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, CycScalar value);

  CycMatrix transpose() const;

  /// Exact rank by fraction-free (Bareiss) elimination.
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t conductor_ = 1;
  std::vector<CycScalar> entries_;
};

inline std::size_t rank(const CycMatrix& m) { return m.rank(); }

}  // namespace jumploci
