#pragma once

// Links of plane curve germs as closed braids.
//
// Strands and component labels are 0-based. Braid letters follow the usual
// signed convention: +k is sigma_k, -k is sigma_k^{-1}, 1 <= k <= strands-1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/presentation.hpp"

namespace jumploci {

class BraidWord {
 public:
  BraidWord() : BraidWord(1, {}) {}
  /// Throws Error(malformed_braid) on strands == 0 or an out-of-range letter.
  BraidWord(std::size_t strands, std::vector<int> letters);

  std::size_t strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_positive() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  std::string to_string() const;

 private:
  std::size_t strands_;
  std::vector<int> letters_;
};

/// sigma_1^{2m}: two smooth branches with contact order m.
BraidWord contact_pair_braid(int contact);
/// (sigma_1 ... sigma_{r-1})^r: r concurrent lines.
BraidWord concurrent_lines_braid(std::size_t lines);

struct ComponentPartition {
  std::vector<std::size_t> label;  // per strand
  std::size_t count = 0;

  std::vector<std::size_t> strands_of(std::size_t component) const;
};

/// Cycles of the braid permutation, labelled in order of their smallest strand.
ComponentPartition components(const BraidWord& b);

/// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
class LinkingMatrix {
 public:
  LinkingMatrix() = default;
  explicit LinkingMatrix(std::size_t r) : r_(r), data_(r * r, 0) {}
  /// Throws Error(arity) unless square, symmetric, zero diagonal.
  explicit LinkingMatrix(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return r_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data_[i * r_ + j]; }
  void set_pair(std::size_t i, std::size_t j, std::int64_t value);

  /// Matrix with row and column c removed.
  LinkingMatrix without(std::size_t c) const;
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<std::int64_t> data_;
};

/// Half the signed count of crossings between strands of distinct components.
LinkingMatrix linking_matrix(const BraidWord& b);

/// Number of crossings between strands of different components (unsigned).
std::size_t inter_component_crossings(const BraidWord& b);

/// Presentation of the complement of the braid closure through the Artin
/// action: one generator per strand, relators beta(x_j) x_j^{-1}. The relator
/// for strand `dropped` (default: the last one) is omitted.
Presentation artin_presentation(const BraidWord& b, std::optional<std::size_t> dropped = std::nullopt);

/// Removes every strand of component c together with all crossings touching it.
/// Throws Error(component_underflow) for a one-component braid and
/// Error(invalid_component) for an unknown label.
BraidWord delete_component(const BraidWord& b, std::size_t c);

}  // namespace jumploci
