#pragma once

// Deletion-restriction for germ complements: how twisted cohomology changes
// when branches are removed, governed by the linking numbers.
//
// For U = B - (C_1 u ... u C_r) and a character t with t_i = 1 for i in S,
// each deleted branch contributes the circle local system on C_i^* with
// monodromy lambda_i(t) = prod_{j != i} t_j^{l_ij}. The complement V with
// the branches in S removed satisfies
//
//   h1(V) = h1(U) - #{ i in S : lambda_i(t) = 1 }
//
// and likewise for h2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/braid.hpp"
#include "jumploci/character_variety.hpp"
#include "jumploci/fox.hpp"

namespace jumploci {

struct DeletionScenario {
  std::string name;
  BraidWord braid;
  /// Components to delete (0-based, sorted, distinct).
  std::vector<std::size_t> deleted;
  LinkingMatrix linking;
  BraidWord deleted_braid;

  std::size_t components() const { return linking.size(); }
  std::size_t remaining() const { return components() - deleted.size(); }
};

/// Builds the scenario; the linking matrix defaults to the braid's.
/// Throws Error(invalid_component) / Error(component_underflow).
DeletionScenario make_scenario(std::string name, const BraidWord& braid, std::vector<std::size_t> deleted,
                               std::optional<LinkingMatrix> linking = std::nullopt);

struct MeridianMonodromy {
  Exponent exponent;  // lambda = exp(2 pi i exponent)
  CycScalar lambda;
  /// dim H^0 = dim H^1 of the punctured branch with coefficients in lambda.
  std::size_t circle_dim = 0;

  bool is_trivial() const { return circle_dim == 1; }
};

/// lambda_i(t). Throws Error(hypothesis_violation) unless t_i = 1.
MeridianMonodromy meridian_scalar(const TorsionCharacter& t, std::size_t i, const LinkingMatrix& l);

/// h1 of the complement with one branch removed. Throws Error(contradiction)
/// when lambda = 1 and h1_u = 0.
std::size_t predict_deleted_h1(std::size_t h1_u, const CycScalar& lambda);

enum class Route {
  /// Requires t_i != 1 outside S (unless t is trivial).
  strict,
  /// Enlarges S to every trivial coordinate, then adds the extra branches back.
  enlarged,
  /// Applies the count formula with S as given.
  direct,
};

std::string_view to_string(Route route);

/// Dimensions for the complement with the branches in S removed.
CohomologyDims predict_multi_deleted(const CohomologyDims& dims_u, const TorsionCharacter& t,
                                     const std::vector<std::size_t>& deleted, const LinkingMatrix& l,
                                     Route route = Route::enlarged);

/// Deletes the branches of S one at a time (highest label first).
CohomologyDims predict_iterated(const CohomologyDims& dims_u, const TorsionCharacter& t,
                                const std::vector<std::size_t>& deleted, const LinkingMatrix& l);

/// Predicted V^1_k of the complement with branch `deleted` removed, read off
/// the slice {t_deleted = 1} of a scan of U. Characters are returned in the
/// coordinates of the smaller complement, sorted.
std::vector<TorsionCharacter> transform_jump_locus(const ScanReport& report_u, std::size_t k, const LinkingMatrix& l,
                                                   std::size_t deleted);

struct VerificationRow {
  TorsionCharacter character;          // on U
  TorsionCharacter restricted;         // on the smaller complement
  CohomologyDims dims_u;
  std::vector<Exponent> lambdas;       // one per deleted branch
  std::optional<CohomologyDims> predicted;
  std::optional<CohomologyDims> predicted_direct;
  std::optional<CohomologyDims> computed;
  bool match = false;
  std::string note;
};

struct SetCheck {
  std::size_t k = 1;
  std::vector<TorsionCharacter> predicted;  // in U coordinates
  std::vector<TorsionCharacter> computed;   // j#-image of the scan of the smaller complement
  bool match = false;
};

struct VerificationReport {
  std::string scenario;
  std::string braid;
  std::vector<std::size_t> deleted;
  std::int64_t order = 1;
  std::vector<VerificationRow> rows;
  std::vector<SetCheck> set_checks;
  bool passed = false;

  std::size_t mismatches() const;
};

struct VerifyOptions {
  std::size_t budget = kDefaultBudget;
  std::size_t jobs = 0;
  /// Multiplicities for the set-level check (single deletions only).
  std::vector<std::size_t> multiplicities{1, 2};
};

/// Scans U on the slice {t_i = 1 : i in S} and the smaller complement on its
/// full grid, then compares predictions with computed dimensions character by
/// character. Prediction failures are recorded as mismatching rows.
VerificationReport verify_deletion(const DeletionScenario& scenario, std::int64_t order,
                                   const VerifyOptions& options = {});

}  // namespace jumploci
