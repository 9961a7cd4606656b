#include "jumploci/puiseux.hpp"

#include <algorithm>
#include <numeric>

#include "jumploci/error.hpp"

namespace jumploci {

namespace {

using UPoly = std::vector<mpq_class>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly truncated_mul(const UPoly& a, const UPoly& b, std::optional<int> precision) {
  if (a.empty() || b.empty()) return {};
  std::size_t size = a.size() + b.size() - 1;
  if (precision) size = std::min(size, static_cast<std::size_t>(*precision));
  UPoly out(size);
  for (std::size_t i = 0; i < a.size() && i < size; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < size; ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

Series::Series(std::vector<std::pair<mpq_class, int>> terms, std::optional<int> precision)
    : precision_(precision) {
  if (precision_ && *precision_ <= 0) throw Error(Errc::parse, "series precision must be positive");
  for (const auto& [c, e] : terms) {
    if (e < 0) throw Error(Errc::parse, "negative exponent in series");
    if (precision_ && e >= *precision_) {
      throw Error(Errc::parse, "term s^" + std::to_string(e) + " at or beyond truncation order " +
                                   std::to_string(*precision_));
    }
    if (coeffs_.size() <= static_cast<std::size_t>(e)) coeffs_.resize(static_cast<std::size_t>(e) + 1);
    coeffs_[static_cast<std::size_t>(e)] += c;
  }
  trim(coeffs_);
}

Series Series::from_coeffs(std::vector<mpq_class> coeffs, std::optional<int> precision) {
  Series s;
  s.precision_ = precision;
  if (precision && coeffs.size() > static_cast<std::size_t>(*precision)) {
    coeffs.resize(static_cast<std::size_t>(*precision));
  }
  trim(coeffs);
  s.coeffs_ = std::move(coeffs);
  return s;
}

std::optional<int> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

int BivariatePoly::degree_in_y() const {
  int d = 0;
  for (const auto& m : terms) {
    if (m.coeff != 0) d = std::max(d, m.y_degree);
  }
  return d;
}

std::optional<int> Parametrization::precision() const {
  if (x.precision() && y.precision()) return std::min(*x.precision(), *y.precision());
  return x.precision() ? x.precision() : y.precision();
}

void Branch::validate() const {
  if (!poly && !param) throw Error(Errc::parse, "branch '" + name + "' has neither poly nor param");
  if (poly) {
    for (const auto& m : poly->terms) {
      if (m.x_degree < 0 || m.y_degree < 0) throw Error(Errc::parse, "negative degree in '" + name + "'");
    }
  }
  if (param) {
    int g = 0;
    bool any = false;
    for (const Series* s : {&param->x, &param->y}) {
      const auto& c = s->coeffs();
      if (!c.empty() && c[0] != 0) {
        throw Error(Errc::parse, "parametrization of '" + name + "' does not pass through the origin");
      }
      for (std::size_t e = 1; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        g = std::gcd(g, static_cast<int>(e));
        any = true;
      }
    }
    if (!any) throw Error(Errc::parse, "parametrization of '" + name + "' is constant");
    if (g != 1) throw Error(Errc::parse, "parametrization of '" + name + "' is not primitive");
  }
}

Series compose(const BivariatePoly& f, const Parametrization& p) {
  const auto precision = p.precision();
  const UPoly& x = p.x.coeffs();
  const UPoly& y = p.y.coeffs();
  int max_i = 0;
  int max_j = 0;
  for (const auto& m : f.terms) {
    max_i = std::max(max_i, m.x_degree);
    max_j = std::max(max_j, m.y_degree);
  }
  std::vector<UPoly> x_pow{UPoly{1}};
  std::vector<UPoly> y_pow{UPoly{1}};
  for (int i = 1; i <= max_i; ++i) x_pow.push_back(truncated_mul(x_pow.back(), x, precision));
  for (int j = 1; j <= max_j; ++j) y_pow.push_back(truncated_mul(y_pow.back(), y, precision));

  UPoly out;
  for (const auto& m : f.terms) {
    if (m.coeff == 0) continue;
    const auto term = truncated_mul(x_pow[static_cast<std::size_t>(m.x_degree)],
                                    y_pow[static_cast<std::size_t>(m.y_degree)], precision);
    if (out.size() < term.size()) out.resize(term.size());
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += m.coeff * term[k];
  }
  return Series::from_coeffs(std::move(out), precision);
}

int intersection_multiplicity(const BivariatePoly& a, const Parametrization& b) {
  const Series composed = compose(a, b);
  if (const auto v = composed.valuation()) return *v;
  if (composed.is_exact()) {
    throw Error(Errc::non_reduced_input, "parametrized branch lies on the curve");
  }
  throw Error(Errc::insufficient_truncation,
              "composition vanishes up to order " + std::to_string(*composed.precision()));
}

int intersection_multiplicity(const Branch& a, const Branch& b) {
  if (a.poly && b.poly && a.poly == b.poly) {
    throw Error(Errc::non_reduced_input, "branches '" + a.name + "' and '" + b.name + "' coincide");
  }
  if (!a.poly || !b.param) {
    throw Error(Errc::parse, "need an equation for '" + a.name + "' and a parametrization for '" + b.name + "'");
  }
  return intersection_multiplicity(*a.poly, *b.param);
}

LinkingMatrix linking_matrix_from_branches(const std::vector<Branch>& branches) {
  for (const auto& b : branches) b.validate();
  LinkingMatrix out(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      const auto& a = branches[i];
      const auto& b = branches[j];
      int value = 0;
      if (a.poly && b.param) {
        value = intersection_multiplicity(a, b);
      } else if (b.poly && a.param) {
        value = intersection_multiplicity(b, a);
      } else {
        throw Error(Errc::parse, "branches '" + a.name + "' and '" + b.name + "' lack an equation/parametrization pair");
      }
      out.set_pair(i, j, value);
    }
  }
  return out;
}

namespace {

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

UPoly div_exact(UPoly a, const UPoly& b) {
  trim(a);
  if (a.empty()) return {};
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw Error(Errc::contradiction, "inexact polynomial division");
  UPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const mpq_class c = a[i] / b[db];
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  trim(a);
  if (!a.empty()) throw Error(Errc::contradiction, "inexact polynomial division");
  trim(q);
  return q;
}

// Coefficients of f as a polynomial in y over Q[x], index = y-degree.
std::vector<UPoly> as_poly_in_y(const BivariatePoly& f) {
  std::vector<UPoly> out(static_cast<std::size_t>(f.degree_in_y()) + 1);
  for (const auto& m : f.terms) {
    if (m.coeff == 0) continue;
    auto& c = out[static_cast<std::size_t>(m.y_degree)];
    if (c.size() <= static_cast<std::size_t>(m.x_degree)) c.resize(static_cast<std::size_t>(m.x_degree) + 1);
    c[static_cast<std::size_t>(m.x_degree)] += m.coeff;
  }
  for (auto& c : out) trim(c);
  return out;
}

// Bareiss determinant over Q[x].
UPoly determinant(std::vector<std::vector<UPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return UPoly{1};
  UPoly prev{1};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].empty()) ++p;
      if (p == n) return {};
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = div_exact(sub(truncated_mul(a[k][k], a[i][j], std::nullopt),
                                truncated_mul(a[i][k], a[k][j], std::nullopt)),
                            prev);
      }
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  UPoly det = a[n - 1][n - 1];
  if (negate) {
    for (auto& c : det) c = -c;
  }
  return det;
}

}  // namespace

int resultant_valuation(const BivariatePoly& f, const BivariatePoly& g) {
  const auto fc = as_poly_in_y(f);
  const auto gc = as_poly_in_y(g);
  const std::size_t m = fc.size() - 1;
  const std::size_t n = gc.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<UPoly>> sylvester(size, std::vector<UPoly>(size));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) sylvester[row][row + k] = fc[m - k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) sylvester[n + row][row + k] = gc[n - k];
  }
  UPoly res = size == 0 ? UPoly{1} : determinant(std::move(sylvester));
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (res[i] != 0) return static_cast<int>(i);
  }
  throw Error(Errc::non_reduced_input, "resultant vanishes identically");
}

}  // namespace jumploci
