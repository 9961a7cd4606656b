#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jumploci {

/// Word in a free group. Letter +j / -j stands for x_j / x_j^{-1}, j >= 1.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);
/// Concatenation followed by free reduction.
FreeWord free_product(const FreeWord& a, const FreeWord& b);
std::string format_word(const FreeWord& w);

/// Finite presentation of a link group whose generators are meridians.
/// labels[j] is the (0-based) component of generator x_{j+1}.
struct Presentation {
  std::size_t generators = 0;
  std::size_t components = 0;
  std::vector<std::size_t> labels;
  std::vector<FreeWord> relators;

  /// Throws Error(arity) / Error(parse) if letters, labels or component
  /// count are inconsistent, and Error(malformed_braid) if some relator does
  /// not abelianize to zero.
  void validate() const;

  /// Exponent sum of each relator per component.
  std::vector<std::vector<long>> abelianized_relators() const;
};

}  // namespace jumploci
