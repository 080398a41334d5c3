#pragma once

#include "prv/pairs.hpp"

#include <set>
#include <string>
#include <vector>

namespace prv {

enum class Tag { Prv, MainSegment, OrthoRect, SymSegment, SymRect };

/// Fixed reporting order; incremental tallies follow it.
inline constexpr Tag kTagOrder[] = {Tag::Prv, Tag::MainSegment, Tag::OrthoRect, Tag::SymSegment,
                                    Tag::SymRect};

std::string tag_name(Tag t);
Tag tag_from_name(const std::string& name);

/// Which construction produced an object and from which data: either a word
/// for the ambient orbit point (PRV, main segments, ortho rectangles) or a
/// pair of words (v, w) for the tensor constructions, plus the direction
/// roots used.
struct Provenance {
  Tag tag = Tag::Prv;
  WeylWord amb_word;
  WeylWord v_word;
  WeylWord w_word;
  std::vector<Vec> axes;  // direction roots, fundamental coordinates
  std::string describe() const;
};

/// Closed line segment in weight space with integral endpoints whose
/// difference is an integer multiple of the direction root.
struct Segment {
  Vec start;
  Vec end;
  Vec direction;
  Provenance prov;

  /// Number of lattice steps between the endpoints.
  Int step_count() const;
  /// All lattice points from start to end inclusive, in order.
  std::vector<Vec> points() const;
};

/// Axis-aligned box: corner - sum k_i * root_i with 0 <= k_i <= extent_i.
/// Axis roots are pairwise orthogonal, extents nonnegative.
struct Hyperrectangle {
  Vec corner;
  std::vector<std::pair<Vec, Int>> axes;  // (direction root, extent)
  Provenance prov;

  std::vector<Vec> points() const;
};

struct TaggedComponent {
  Vec weight;
  std::set<Tag> tags;
  std::vector<Provenance> witnesses;  // one per tag, first witness found
};

std::vector<Vec> segment_dominant_points(const RootSystem& g, const Segment& s);
std::vector<Vec> rectangle_dominant_points(const RootSystem& g, const Hyperrectangle& r);

/// Dominant restrictions of the ambient Weyl orbit of nuhat.
std::set<Vec, VecLess> prv_components(const SphericalPair& pair, const Vec& nuhat);

/// Case-split closed form of the four PRV components of G2 in Spin7;
/// agrees with prv_components(g2-spin7, nuhat) for every dominant nuhat.
std::set<Vec, VecLess> g2_spin7_prv_closed_form(const Vec& nuhat);

/// One segment per (ambient orbit point with dominant restriction, Delta_2
/// root): from the restriction, against the direction of the root, with as
/// many steps as the smaller fiber pairing (negative pairings walk the other
/// way).  Zero-length segments are kept; duplicates by point set dropped.
std::vector<Segment> main_segments(const SphericalPair& pair, const Vec& nuhat);

/// Boxes spanned by 2..max_axes pairwise orthogonal Delta_2 segments sharing
/// the orbit-point corner, after per-axis sign normalization.
std::vector<Hyperrectangle> ortho_rectangles(const SphericalPair& pair, const Vec& nuhat,
                                             int max_axes);

/// Tensor-product segments through virtual PRV components v mu + w nu in
/// root directions beta where beta, v^-1 beta or w^-1 beta is simple.
std::vector<Segment> sym_segments(const RootSystem& g, const Vec& mu, const Vec& nu);

/// Tensor-product boxes over pairwise orthogonal root tuples that one of
/// {1, v, w} pulls back to simple roots simultaneously.
std::vector<Hyperrectangle> sym_rectangles(const RootSystem& g, const Vec& mu, const Vec& nu,
                                           int max_axes);

/// Largest pairwise-orthogonal subset of Delta_2: the default axis budget.
int default_max_axes(const SphericalPair& pair);

struct GeneratorOptions {
  std::set<Tag> theorems = {Tag::Prv, Tag::MainSegment, Tag::OrthoRect, Tag::SymSegment,
                            Tag::SymRect};
  int max_axes = -1;  // -1: default_max_axes(pair)
};

/// Union of all applicable generators (sym constructions only on diagonal
/// pairs), each dominant weight tagged with every theorem producing it.
/// Deterministic order: height descending, then lexicographic.
std::vector<TaggedComponent> all_components(const SphericalPair& pair, const Vec& nuhat,
                                            const GeneratorOptions& options = {});

}  // namespace prv
