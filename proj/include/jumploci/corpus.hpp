#pragma once

// Built-in germs with independently known answers.

#include <string>
#include <string_view>
#include <vector>

#include "jumploci/braid.hpp"
#include "jumploci/character_variety.hpp"
#include "jumploci/puiseux.hpp"

namespace jumploci {

struct CorpusFact {
  std::string statement;
  std::string provenance;  // "trivial", "derived" or "reference"
};

struct CorpusEntry {
  std::string name;
  std::string germ;  // human-readable equation
  BraidWord braid;
  std::vector<Branch> branches;  // empty if none recorded
  LinkingMatrix expected_linking;
  std::size_t default_deleted = 0;
  std::int64_t default_order = 6;
  /// Known torsion-translated components of V^1_1 away from the trivial character.
  std::vector<TorsionCoset> v1_cosets;
  std::vector<CorpusFact> facts;
};

const std::vector<std::string>& corpus_names();

/// Throws Error(unknown_corpus).
CorpusEntry corpus(std::string_view name);

}  // namespace jumploci
