#pragma once

// Twisted cohomology of presentation 2-complexes at torsion characters,
// computed by evaluating Fox derivatives.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "jumploci/cyclotomic.hpp"
#include "jumploci/exponent.hpp"
#include "jumploci/presentation.hpp"

namespace jumploci {

/// Character t = (exp(2 pi i q_1), ..., exp(2 pi i q_r)) with all q_i rational.
/// Exponents are kept reduced into [0, 1).
class TorsionCharacter {
 public:
  TorsionCharacter() = default;
  explicit TorsionCharacter(std::vector<Exponent> exponents);
  static TorsionCharacter trivial(std::size_t r);

  std::size_t size() const { return q_.size(); }
  const std::vector<Exponent>& exponents() const { return q_; }
  const Exponent& operator[](std::size_t i) const { return q_[i]; }

  /// lcm of the coordinate orders.
  std::int64_t order() const { return common_order(q_); }
  bool is_trivial() const;
  bool is_trivial_at(std::size_t i) const { return is_zero(q_[i]); }
  TorsionCharacter inverse() const;
  CycScalar coordinate(std::size_t i) const { return root_of_unity(q_[i]); }

  std::string to_string() const;

  friend bool operator==(const TorsionCharacter&, const TorsionCharacter&) = default;
  friend bool operator<(const TorsionCharacter& a, const TorsionCharacter& b) { return a.q_ < b.q_; }

 private:
  std::vector<Exponent> q_;
};

struct CohomologyDims {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;

  long euler_characteristic() const {
    return static_cast<long>(h0) - static_cast<long>(h1) + static_cast<long>(h2);
  }
  std::size_t degree(int i) const;
  std::string to_string() const;

  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Image of dw/dx_j under x_i -> images[i]. `j` is 0-based.
CycScalar fox_derivative(const FreeWord& w, std::size_t j, const std::vector<CycScalar>& images);

/// Same, with x_i -> t_{labels[i]}.
CycScalar fox_derivative(const FreeWord& w, std::size_t j, const TorsionCharacter& t,
                         const std::vector<std::size_t>& labels);

/// Relators x generators matrix of Fox derivatives evaluated at t.
CycMatrix fox_jacobian(const Presentation& p, const TorsionCharacter& t);

/// dim H^i(U, L_t) for i = 0, 1, 2, where U is modelled by the presentation
/// 2-complex of p. Computed as homology of the chain complex twisted by t^{-1}.
/// Throws Error(arity) if t has the wrong number of coordinates.
CohomologyDims twisted_dims(const Presentation& p, const TorsionCharacter& t);

/// dim H^degree(U, L_t) >= k.
bool jump_membership(const Presentation& p, const TorsionCharacter& t, int degree, std::size_t k);

}  // namespace jumploci
