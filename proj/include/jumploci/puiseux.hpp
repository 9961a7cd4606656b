#pragma once

// Branches of plane curve germs and their intersection multiplicities.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jumploci/braid.hpp"

namespace jumploci {

/// Power series in s with rational coefficients. Coefficients of s^e are
/// known for e < precision; an exact series (a polynomial) has no precision.
class Series {
 public:
  Series() = default;
  /// terms are (coefficient, exponent) pairs; exponents must lie below `precision`.
  Series(std::vector<std::pair<mpq_class, int>> terms, std::optional<int> precision);
  /// Dense coefficients; entries at or beyond `precision` are dropped.
  static Series from_coeffs(std::vector<mpq_class> coeffs, std::optional<int> precision);

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  std::optional<int> precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  /// Smallest exponent with a nonzero coefficient, if any.
  std::optional<int> valuation() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<mpq_class> coeffs_;
  std::optional<int> precision_;
};

struct Monomial {
  mpq_class coeff;
  int x_degree = 0;
  int y_degree = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// f(x, y) = sum of c x^i y^j.
struct BivariatePoly {
  std::vector<Monomial> terms;

  int degree_in_y() const;
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
};

struct Parametrization {
  Series x;
  Series y;

  /// Truncation of the pair (min of the two precisions), nullopt if both exact.
  std::optional<int> precision() const;
  friend bool operator==(const Parametrization&, const Parametrization&) = default;
};

/// An irreducible germ given by its equation, a parametrization, or both.
struct Branch {
  std::string name;
  std::optional<BivariatePoly> poly;
  std::optional<Parametrization> param;

  /// Throws Error(parse) unless the parametrization passes through the origin
  /// and is primitive (gcd of the exponents is 1), and at least one form is present.
  void validate() const;
  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Series f(x(s), y(s)), truncated at the parametrization precision.
Series compose(const BivariatePoly& f, const Parametrization& p);

/// ord_s f_a(x_b(s), y_b(s)). Throws Error(non_reduced_input) when b lies in
/// {f_a = 0} and Error(insufficient_truncation) when the composition vanishes
/// to the available precision.
int intersection_multiplicity(const BivariatePoly& a, const Parametrization& b);
int intersection_multiplicity(const Branch& a, const Branch& b);

/// l_ij = intersection multiplicity of branches i and j.
LinkingMatrix linking_matrix_from_branches(const std::vector<Branch>& branches);

/// ord_x Res_y(f, g). Throws Error(non_reduced_input) if the resultant vanishes.
int resultant_valuation(const BivariatePoly& f, const BivariatePoly& g);

}  // namespace jumploci
