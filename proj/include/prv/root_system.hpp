#pragma once

#include "prv/common.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prv {

/// One simple factor of a reductive group type, e.g. A3, B2, G2.
struct SimpleFactor {
  char family = 'A';  // 'A','B','C','D','G'
  int rank = 1;
};

/// Reductive group type: a product of simple factors (Bourbaki numbering
/// inside each factor) and an optional central torus.  Weights are integer
/// vectors in the fundamental-weight basis, factor blocks concatenated and
/// torus coordinates appended as free integers.
struct GroupType {
  std::vector<SimpleFactor> factors;
  int torus_rank = 0;

  /// Parses "C3", "A1xA1", "G2xT2", ... Throws ParseError on anything else.
  static GroupType parse(const std::string& text);
  std::string str() const;

  int semisimple_rank() const;
  int total_rank() const { return semisimple_rank() + torus_rank; }
  bool operator==(const GroupType& other) const;
};

/// A Weyl-group element given as a word in simple reflections, 0-based
/// indices; the rightmost letter acts first.  Words are not reduced; equal
/// group elements are recognized by equal action on weights.
using WeylWord = std::vector<int>;

inline WeylWord inverse_word(const WeylWord& w) { return WeylWord(w.rbegin(), w.rend()); }

struct PositiveRoot {
  Vec fund;           // fundamental-basis coordinates, full rank (torus slots 0)
  Vec simple_coords;  // expansion over simple roots (semisimple rank)
  Vec coroot;         // <x, gamma^vee> = coroot . x over the semisimple slots
  Int half_norm = 1;  // (gamma,gamma)/2, short roots of each factor normalized to 2
};

/// Exact root-system and Weyl-group combinatorics for one reductive group.
/// Immutable after construction; all operations are pure and safe for
/// concurrent use.
class RootSystem {
 public:
  explicit RootSystem(GroupType type);

  const GroupType& type() const { return type_; }
  int rank() const { return total_; }
  int ss_rank() const { return ss_; }
  const Mat& cartan() const { return cartan_; }
  Int simple_half_norm(int i) const { return d_[static_cast<size_t>(i)]; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  const Vec& weyl_vector() const { return delta_; }
  Int weyl_order() const { return weyl_order_; }
  const std::string& signature() const { return signature_; }

  /// Fundamental-basis coordinates of simple root i, full-rank vector.
  Vec simple_root(int i) const;

  /// <lambda, alpha_i^vee>: the i-th fundamental coordinate.
  Int pairing(const Vec& lambda, int i) const;

  /// <x, gamma^vee> for a positive root of this system.
  Int coroot_pairing(const Vec& x, const PositiveRoot& gamma) const;

  Vec reflect(const Vec& lambda, int i) const;

  /// Reflection in an arbitrary root given by fundamental coordinates:
  /// requires the coroot functional of the root.
  Vec reflect_root(const Vec& lambda, const PositiveRoot& gamma) const;

  Vec apply_word(const Vec& lambda, const WeylWord& u) const;

  bool is_dominant(const Vec& lambda) const;
  bool is_strictly_dominant(const Vec& lambda) const;

  /// The unique dominant weight in the W-orbit together with a word mapping
  /// lambda to it.
  std::pair<Vec, WeylWord> dominant_representative(const Vec& lambda) const;

  /// Full W-orbit, breadth-first from lambda; deterministic order.
  std::vector<Vec> weyl_orbit(const Vec& lambda) const;

  /// Orbit points paired with a witness word u such that u(lambda) = point.
  std::vector<std::pair<Vec, WeylWord>> orbit_with_words(const Vec& lambda) const;

  /// Length of the group element represented by the word: the number of
  /// positive roots sent to negative roots.
  Int length(const WeylWord& u) const;

  WeylWord longest_element() const;

  /// Solves x = sum c_i alpha_i exactly; throws Internal if x is not in the
  /// root lattice (torus slots of x must be zero).
  Vec simple_coordinates(const Vec& x) const;
  bool in_positive_root_cone(const Vec& x) const;  // x in N-span of simple roots

  /// <x, 2 delta^vee>: positive on nonzero elements of the positive root
  /// cone; used as a height functional for dominance-maximal selection.
  Int height(const Vec& x) const;

  /// Index of the simple root equal to x, if any.
  std::optional<int> simple_root_index(const Vec& x) const;

  /// Per-factor spans (offset, rank) over the semisimple block.
  const std::vector<std::pair<int, int>>& factor_spans() const { return spans_; }

 private:
  void check_index(int i) const;

  GroupType type_;
  int ss_ = 0;
  int total_ = 0;
  Mat cartan_;
  std::vector<Int> d_;
  std::vector<PositiveRoot> positive_;
  Vec delta_;
  Vec height_functional_;
  Mat cartan_t_adj_;  // adj(cartan^T), for exact root-coordinate solves
  Int cartan_t_det_ = 1;
  Int weyl_order_ = 1;
  std::vector<std::pair<int, int>> spans_;
  std::string signature_;
};

}  // namespace prv
