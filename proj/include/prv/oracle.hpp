#pragma once

#include "prv/generators.hpp"
#include "prv/pairs.hpp"

#include <map>
#include <vector>

namespace prv {

/// Exact weight multiplicities of one irreducible module, stored on the
/// dominant weights only; the full character is the W-orbit spread.
struct CharacterTable {
  Vec highest;
  std::map<Vec, Int, VecLess> dominant;
  Int dimension = 0;  // sum of multiplicities over all weights
};

/// Multiset of irreducible constituents: dominant highest weight ->
/// multiplicity >= 1.
using Decomposition = std::map<Vec, Int, VecLess>;

/// Freudenthal recursion on the dominant cone, factor by factor for product
/// groups; memoized per (group, highest weight), hence the reference return.
const CharacterTable& weight_multiplicities(const RootSystem& g, const Vec& lambda);

/// Product over positive roots of <lambda+delta, gamma^vee> / <delta,
/// gamma^vee>, exact integer result.
Int weyl_dimension(const RootSystem& g, const Vec& lambda);

/// All weights of the module with their multiplicities (orbit spread).
std::vector<std::pair<Vec, Int>> expand_character(const RootSystem& g, const CharacterTable& table);

/// Brauer-Klimyk: iterates over the character of the factor with fewer
/// weights (ties toward nu), delta-shifted straightening with signs.
Decomposition tensor_decompose(const RootSystem& g, const Vec& mu, const Vec& nu);

/// Branching by character restriction and greedy peeling of highest
/// weights.  peel_seed = 0 picks the deterministic maximal element (height,
/// then lexicographic); any other seed picks randomly among dominance-maximal
/// elements, which must not change the result.
Decomposition branch(const SphericalPair& pair, const Vec& nuhat, unsigned peel_seed = 0);

struct TagTally {
  Tag tag = Tag::Prv;
  Int count = 0;     // weights carrying this tag
  Int fresh = 0;     // weights not produced by any earlier tag in kTagOrder
};

struct VerificationReport {
  std::vector<TagTally> tallies;      // in kTagOrder
  std::vector<Vec> violations;        // generated weights absent from the truth
  Int generated_total = 0;            // distinct generated weights
  Int truth_total = 0;                // distinct weights in the oracle decomposition
  bool sound() const { return violations.empty(); }
  /// "12 +7 +0 +7 +0 = 26 / 32"
  std::string summary() const;
};

VerificationReport verify_components(const std::vector<TaggedComponent>& generated,
                                     const Decomposition& truth);

}  // namespace prv
