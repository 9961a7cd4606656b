#include "jumploci/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "jumploci/error.hpp"

namespace jumploci {

namespace {

using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int mobius(std::uint32_t n) {
  int result = 1;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact quotient of a by a monic divisor b.
ZPoly div_exact_monic(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  return q;
}

ZPoly compute_cyclotomic(std::uint32_t n) {
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
  ZPoly num{1};
  std::vector<ZPoly> dens;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    ZPoly f(d + 1);
    f[0] = -1;
    f[d] = 1;
    if (mu == 1) {
      num = mul(num, f);
    } else {
      dens.push_back(std::move(f));
    }
  }
  for (const auto& f : dens) num = div_exact_monic(std::move(num), f);
  return num;
}

// Remainder of p modulo the monic integer polynomial m, padded to deg(m) coefficients.
QPoly reduce(QPoly p, const ZPoly& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    const mpq_class c = p[i];
    for (std::size_t k = 0; k <= d; ++k) p[i - d + k] -= c * m[k];
  }
  p.resize(d);
  return p;
}

// Polynomial long division over Q; b must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  const std::size_t db = b.size() - 1;
  QPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const mpq_class c = a[i] / b[db];
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<const ZPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<const ZPoly>(compute_cyclotomic(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n, std::move(poly));
  return *it->second;
}

CycScalar::CycScalar() : conductor_(1), coeffs_(1) {}

CycScalar::CycScalar(const mpq_class& value, std::uint32_t conductor)
    : conductor_(conductor), coeffs_(euler_phi(conductor)) {
  coeffs_[0] = value;
}

CycScalar::CycScalar(std::uint32_t conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycScalar CycScalar::zeta(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw Error(Errc::invalid_exponent, "root of unity of order 0");
  k %= static_cast<std::int64_t>(n);
  if (k < 0) k += n;
  QPoly p(static_cast<std::size_t>(k) + 1);
  p[static_cast<std::size_t>(k)] = 1;
  return CycScalar(n, reduce(std::move(p), cyclotomic_polynomial(n)));
}

CycScalar CycScalar::embed(std::uint32_t m) const {
  if (m == conductor_) return *this;
  if (m == 0 || m % conductor_ != 0) {
    throw Error(Errc::invalid_exponent, "cannot embed conductor " + std::to_string(conductor_) +
                                            " into " + std::to_string(m));
  }
  const std::size_t step = m / conductor_;
  QPoly p((coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  auto reduced = reduce(std::move(p), cyclotomic_polynomial(m));
  return CycScalar(m, std::move(reduced));
}

void CycScalar::unify_with(CycScalar& other) {
  if (conductor_ == other.conductor_) return;
  const std::uint32_t m = std::lcm(conductor_, other.conductor_);
  if (m != conductor_) *this = embed(m);
  if (m != other.conductor_) other = other.embed(m);
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  if (rhs.conductor_ == conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  CycScalar other = rhs;
  unify_with(other);
  return *this += other;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
  if (rhs.conductor_ == conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  CycScalar other = rhs;
  unify_with(other);
  return *this -= other;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  if (rhs.conductor_ != conductor_) {
    CycScalar other = rhs;
    unify_with(other);
    return *this *= other;
  }
  const std::size_t d = coeffs_.size();
  if (d == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  QPoly prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce(std::move(prod), cyclotomic_polynomial(conductor_));
  return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  CycScalar x = a;
  CycScalar y = b;
  x.unify_with(y);
  return x.coeffs_ == y.coeffs_;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  if (coeffs_.size() == 1) return CycScalar(conductor_, {1 / coeffs_[0]});

  const auto& phi = cyclotomic_polynomial(conductor_);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{1};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    auto s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_N is irreducible, so the gcd r0 is a nonzero constant.
  const mpq_class g = r0[0];
  for (auto& c : s0) c /= g;
  return CycScalar(conductor_, reduce(std::move(s0), phi));
}

CycScalar CycScalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(mpq_class(1), conductor_);
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i > 0) os << "*z" << conductor_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.to_string(); }

CycScalar root_of_unity(const Exponent& q) {
  const Exponent r = mod_one(q);
  return CycScalar::zeta(static_cast<std::uint32_t>(r.denominator()), r.numerator());
}

CycScalar root_of_unity(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::invalid_exponent, "zero denominator");
  return root_of_unity(Exponent(num, den));
}

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

CycMatrix::CycMatrix(const std::vector<std::vector<CycScalar>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(Errc::arity, "ragged matrix rows");
    for (const auto& e : row) {
      conductor_ = std::lcm(conductor_, e.conductor());
      entries_.push_back(e);
    }
  }
  for (auto& e : entries_) e = e.embed(conductor_);
}

void CycMatrix::set(std::size_t i, std::size_t j, CycScalar value) {
  if (value.conductor() != conductor_) {
    const std::uint32_t m = std::lcm(conductor_, value.conductor());
    if (m != conductor_) {
      for (auto& e : entries_) e = e.embed(m);
      conductor_ = m;
    }
    value = value.embed(m);
  }
  entries_[i * cols_ + j] = std::move(value);
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  t.conductor_ = conductor_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
  }
  return t;
}

std::size_t CycMatrix::rank() const {
  std::vector<CycScalar> a = entries_;
  auto el = [&](std::size_t i, std::size_t j) -> CycScalar& { return a[i * cols_ + j]; };

  CycScalar prev_inv(mpq_class(1), conductor_);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t p = r;
    while (p < rows_ && el(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(el(p, j), el(r, j));
    }
    const CycScalar pivot = el(r, col);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      const CycScalar factor = el(i, col);
      for (std::size_t j = col + 1; j < cols_; ++j) {
        if (factor.is_zero()) {
          el(i, j) = pivot * el(i, j) * prev_inv;
        } else {
          el(i, j) = (pivot * el(i, j) - factor * el(r, j)) * prev_inv;
        }
      }
      el(i, col) = CycScalar(mpq_class(0), conductor_);
    }
    prev_inv = pivot.inverse();
    ++r;
  }
  return r;
}

}  // namespace jumploci
