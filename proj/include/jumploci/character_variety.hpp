#pragma once

// Torsion points of the character torus (C^*)^r: grids, torsion-translated
// subtori, Galois orbits and jump-locus scans.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/fox.hpp"

namespace jumploci {

inline constexpr std::size_t kDefaultBudget = 20000;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Row-style Hermite normal form: zero rows dropped, positive pivots,
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

/// Inserts a trivial coordinate at `position` (0-based): (t_2..t_r) -> (1, t_2..t_r) at position 0.
TorsionCharacter embed_deleted(const TorsionCharacter& t, std::size_t position);

/// Drops the coordinates listed in `removed`.
TorsionCharacter restrict_character(const TorsionCharacter& t, const std::vector<std::size_t>& removed);

/// rho * T where T = { s : prod_i s_i^{a_i} = 1 for every row a of the equation matrix }.
class TorsionCoset {
 public:
  TorsionCoset(TorsionCharacter translate, IntMatrix equations);
  static TorsionCoset whole_torus(std::size_t r);
  static TorsionCoset point(const TorsionCharacter& t);

  const TorsionCharacter& translate() const { return translate_; }
  const IntMatrix& equations() const { return equations_; }
  std::size_t ambient_dimension() const { return translate_.size(); }
  std::size_t dimension() const { return translate_.size() - equations_.size(); }

  bool contains(const TorsionCharacter& t) const;

 private:
  TorsionCharacter translate_;
  IntMatrix equations_;
};

inline bool coset_contains(const TorsionCoset& k, const TorsionCharacter& t) { return k.contains(t); }

/// N^r, or nullopt on overflow.
std::optional<std::size_t> grid_size(std::int64_t order, std::size_t r);

/// All characters with exponents in {0, 1/N, ..., (N-1)/N}; coordinates in
/// `fixed_trivial` are held at 0. Throws Error(budget_exceeded) if more than
/// `budget` points would be produced.
std::vector<TorsionCharacter> grid(std::size_t r, std::int64_t order, std::size_t budget = kDefaultBudget,
                                   const std::vector<std::size_t>& fixed_trivial = {});

std::vector<TorsionCharacter> enumerate_coset(const TorsionCoset& k, std::int64_t order,
                                              std::size_t budget = kDefaultBudget);

/// { (a q_1 mod 1, ..., a q_r mod 1) : gcd(a, N) = 1 }, sorted.
std::vector<TorsionCharacter> galois_orbit(const TorsionCharacter& t);

struct JumpRequest {
  int degree = 1;
  std::size_t multiplicity = 1;
  friend auto operator<=>(const JumpRequest&, const JumpRequest&) = default;
};

struct ScanRecord {
  TorsionCharacter character;
  CohomologyDims dims;
  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ScanReport {
  std::string presentation_id;
  std::int64_t order = 1;
  std::size_t components = 0;
  /// Coordinates held trivial during the scan (empty for a full grid).
  std::vector<std::size_t> fixed_trivial;
  /// Sorted by character.
  std::vector<ScanRecord> records;
  /// V^i_k restricted to the scanned points, keyed by (i, k).
  std::map<JumpRequest, std::vector<TorsionCharacter>> loci;

  const CohomologyDims* find(const TorsionCharacter& t) const;
  const std::vector<TorsionCharacter>& locus(int degree, std::size_t k) const;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct ScanOptions {
  std::size_t budget = kDefaultBudget;
  std::size_t jobs = 0;  // 0: hardware concurrency
  std::vector<std::size_t> fixed_trivial;
  /// Empty: every (i, k) with 1 <= k <= max h_i on the scanned points.
  std::vector<JumpRequest> requests;
};

/// twisted_dims over a list of characters, in parallel; result order matches input.
std::vector<CohomologyDims> evaluate_all(const Presentation& p, const std::vector<TorsionCharacter>& chars,
                                         std::size_t jobs);

ScanReport scan(const Presentation& p, std::int64_t order, const ScanOptions& options = {},
                std::string presentation_id = {});

/// Assembles V^i_k lists for the given records.
std::map<JumpRequest, std::vector<TorsionCharacter>> assemble_loci(const std::vector<ScanRecord>& records,
                                                                   const std::vector<JumpRequest>& requests);

}  // namespace jumploci
