#pragma once

#include "prv/root_system.hpp"

#include <memory>
#include <string>
#include <vector>

namespace prv {

/// Fiber of a simple root of G under the restriction map: the ambient simple
/// roots mapping onto it.  Size 1 (Delta_1) or 2 with orthogonal members
/// (Delta_2) for a valid pair.
struct Fiber {
  int sub_root = -1;
  std::vector<int> amb_roots;
};

struct PairCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<PairCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// A spherical pair of minimal rank G in Ghat, consumed as data: the two
/// root systems, the integer restriction matrix rho (fundamental bases on
/// both sides), the Delta_1/Delta_2 fiber classification derived from rho,
/// and the induced Weyl embedding W into What.  Immutable after
/// construction; operations are pure.
class SphericalPair {
 public:
  /// G diagonally embedded in G x G; rho = [I | I].
  static SphericalPair diagonal(const GroupType& g);

  /// G2 in Spin7: rho sends the three fundamental weights of Spin7 to
  /// (pi_1, pi_2, pi_1) of G2.
  static SphericalPair g2_spin7();

  /// Builds a pair from raw data; classifies fibers and derives the Weyl
  /// embedding.  Throws InvalidPair if classification fails outright.
  static SphericalPair from_data(std::string name, GroupType sub, GroupType amb, Mat rho);

  /// Like from_data but never rejects the classification: validate() on the
  /// result reports what failed.  Generators must not be run on such a pair.
  static SphericalPair from_data_unchecked(std::string name, GroupType sub, GroupType amb, Mat rho);

  /// Resolves "diag:<type>" and "g2-spin7".  Throws ParseError otherwise.
  static SphericalPair by_name(const std::string& name);

  /// Parses the JSON pair-definition document (fields sub_type, amb_type,
  /// rho).  Throws ParseError on malformed documents and InvalidPair when
  /// the data fails validation.
  static SphericalPair from_json_text(const std::string& text);
  static SphericalPair from_json_file(const std::string& path);

  static std::vector<std::string> builtin_names();

  const std::string& name() const { return name_; }
  const RootSystem& sub() const { return *sub_; }
  const RootSystem& amb() const { return *amb_; }
  const Mat& rho() const { return rho_; }

  /// rho applied to an ambient weight.
  Vec restrict_weight(const Vec& chi) const;

  /// Fibers indexed by sub simple root; empty amb_roots never occurs on a
  /// constructed pair.
  const std::vector<Fiber>& fibers() const { return fibers_; }
  std::vector<int> delta1() const;
  std::vector<int> delta2() const;

  /// Letter-wise substitution through the fiber map.
  WeylWord embed_weyl(const WeylWord& u) const;

  /// True for pairs built as diagonal(g) or loaded data recognizably equal
  /// to one: amb = g x g block-wise and rho = [I | I].
  bool is_diagonal() const { return diagonal_; }

  /// For a diagonal pair, splits an ambient weight into its two G halves,
  /// or builds the ambient weight from them.
  std::pair<Vec, Vec> split_diagonal(const Vec& nuhat) const;
  Vec join_diagonal(const Vec& mu, const Vec& nu) const;

  /// Runs every structural check the theorems rely on; never throws, the
  /// report carries failures.
  ValidationReport validate() const;

 private:
  SphericalPair() = default;
  void classify();
  bool detect_diagonal() const;

  std::string name_;
  std::shared_ptr<const RootSystem> sub_;
  std::shared_ptr<const RootSystem> amb_;
  Mat rho_;
  std::vector<Fiber> fibers_;
  std::vector<WeylWord> embedding_;  // per sub simple reflection
  bool classified_ = false;
  std::string classify_error_;
  bool diagonal_ = false;
};

}  // namespace prv
