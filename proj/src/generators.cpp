#include "prv/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace prv {

namespace {

void require_dominant(const RootSystem& rs, const Vec& v, const char* what) {
  require_input_scale(v, what);
  if (!rs.is_dominant(v))
    fail(ErrorKind::NonDominantInput, std::string(what) + " " + format_vec(v) + " is not dominant");
}

std::string word_str(const WeylWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int letter : w) {
    if (!s.empty()) s += '.';
    s += 's';
    s += std::to_string(letter + 1);
  }
  return s;
}

// Key for point-set deduplication: the sorted list of lattice points.
using PointSetKey = std::vector<Vec>;

struct PointSetLess {
  bool operator()(const PointSetKey& a, const PointSetKey& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), VecLess{});
  }
};

PointSetKey point_set_key(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), VecLess{});
  pts.erase(std::unique(pts.begin(), pts.end(), VecEq{}), pts.end());
  return pts;
}

std::vector<int> zero_coordinate_set(const RootSystem& g, const Vec& mu) {
  std::vector<int> J;
  for (int i = 0; i < g.ss_rank(); ++i)
    if (mu[i] == 0) J.push_back(i);
  return J;
}

int positive_root_index(const RootSystem& g, const Vec& fund) {
  const auto& roots = g.positive_roots();
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i].fund == fund) return static_cast<int>(i);
  return -1;
}

// Pairwise-orthogonal subsets of the given simple roots, sizes smin..smax.
std::vector<std::vector<int>> orthogonal_subsets(const RootSystem& g, const std::vector<int>& roots,
                                                 int smin, int smax) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(cur.size()) >= smin && !cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) >= smax) return;
    for (size_t k = from; k < roots.size(); ++k) {
      bool ortho = true;
      for (int c : cur) {
        if (g.cartan()(c, roots[k]) != 0) {
          ortho = false;
          break;
        }
      }
      if (!ortho) continue;
      cur.push_back(roots[k]);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  if (smax >= smin && smax >= 1) rec(rec, 0);
  return out;
}

using RootTuple = std::vector<int>;  // sorted indices into positive_roots()

// Tuples {witness * u * alpha_j : j in T} over the stabilizer coset of one
// orbit point: every choice of witness for the point is a coset element
// witness * u with u in the parabolic W_J fixing the dominant source weight,
// so the reachable root tuples are the diagonal W_J-orbit of the simple
// tuple pushed through the fixed witness.  Tuples whose image contains a
// negative root are dropped when positive_only is set (the constructions
// quantify over positive roots), otherwise normalized to positive roots.
std::set<RootTuple> coset_tuples(const RootSystem& g, const WeylWord& witness,
                                 const std::vector<int>& J,
                                 const std::vector<std::vector<int>>& simple_tuples,
                                 bool positive_only) {
  std::set<RootTuple> out;
  for (const auto& tup : simple_tuples) {
    std::vector<Vec> start;
    start.reserve(tup.size());
    for (int i : tup) start.push_back(g.simple_root(i));
    auto key = [&](const std::vector<Vec>& rs) {
      Vec k(static_cast<Eigen::Index>(rs.size()) * g.rank());
      Eigen::Index at = 0;
      for (const auto& r : rs)
        for (Eigen::Index i = 0; i < r.size(); ++i) k[at++] = r[i];
      return k;
    };
    std::unordered_set<Vec, VecHash, VecEq> seen{key(start)};
    std::deque<std::vector<Vec>> queue{std::move(start)};
    while (!queue.empty()) {
      std::vector<Vec> cur = std::move(queue.front());
      queue.pop_front();
      RootTuple idx;
      idx.reserve(cur.size());
      bool valid = true;
      for (const auto& r : cur) {
        Vec image = g.apply_word(r, witness);
        int at = positive_root_index(g, image);
        if (at < 0) {
          if (positive_only) {
            valid = false;
            break;
          }
          Vec neg = -image;
          at = positive_root_index(g, neg);
          if (at < 0) fail(ErrorKind::Internal, "root image is not a root");
        }
        idx.push_back(at);
      }
      if (valid) {
        std::sort(idx.begin(), idx.end());
        if (std::unique(idx.begin(), idx.end()) == idx.end()) out.insert(std::move(idx));
      }
      for (int j : J) {
        std::vector<Vec> next;
        next.reserve(cur.size());
        for (const auto& r : cur) next.push_back(g.reflect(r, j));
        if (seen.insert(key(next)).second) queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::Prv: return "PRV";
    case Tag::MainSegment: return "MAIN_SEGMENT";
    case Tag::OrthoRect: return "ORTHO_RECT";
    case Tag::SymSegment: return "SYM_SEGMENT";
    case Tag::SymRect: return "SYM_RECT";
  }
  fail(ErrorKind::Internal, "bad tag");
}

Tag tag_from_name(const std::string& name) {
  for (Tag t : kTagOrder)
    if (tag_name(t) == name) return t;
  // CLI-friendly short aliases.
  if (name == "prv") return Tag::Prv;
  if (name == "main") return Tag::MainSegment;
  if (name == "ortho") return Tag::OrthoRect;
  if (name == "symseg") return Tag::SymSegment;
  if (name == "symrect") return Tag::SymRect;
  fail(ErrorKind::ParseError, "unknown theorem tag '" + name + "'");
}

std::string Provenance::describe() const {
  std::string s = tag_name(tag);
  switch (tag) {
    case Tag::Prv:
    case Tag::MainSegment:
    case Tag::OrthoRect:
      s += " w=" + word_str(amb_word);
      break;
    case Tag::SymSegment:
    case Tag::SymRect:
      s += " v=" + word_str(v_word) + " w=" + word_str(w_word);
      break;
  }
  for (const auto& a : axes) s += " along " + format_vec(a);
  return s;
}

Int Segment::step_count() const {
  for (Eigen::Index i = 0; i < direction.size(); ++i) {
    if (direction[i] != 0) {
      Int diff = checked_sub(end[i], start[i]);
      if (diff % direction[i] != 0) fail(ErrorKind::Internal, "segment endpoints not aligned");
      Int k = diff / direction[i];
      return k < 0 ? -k : k;
    }
  }
  return 0;
}

std::vector<Vec> Segment::points() const {
  Int n = step_count();
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(n) + 1);
  Vec step = direction;
  if (n > 0) {
    // Orient the step from start toward end.
    for (Eigen::Index i = 0; i < direction.size(); ++i) {
      if (direction[i] != 0) {
        if ((end[i] - start[i] < 0) != (direction[i] < 0)) step = -direction;
        break;
      }
    }
  }
  Vec cur = start;
  for (Int k = 0; k <= n; ++k) {
    out.push_back(cur);
    cur += step;
  }
  return out;
}

std::vector<Vec> Hyperrectangle::points() const {
  std::vector<Vec> out{corner};
  for (const auto& [root, extent] : axes) {
    std::vector<Vec> next;
    next.reserve(out.size() * static_cast<size_t>(extent + 1));
    for (const auto& base : out) {
      Vec cur = base;
      for (Int k = 0; k <= extent; ++k) {
        next.push_back(cur);
        cur -= root;
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Vec> segment_dominant_points(const RootSystem& g, const Segment& s) {
  std::vector<Vec> out;
  for (const auto& p : s.points())
    if (g.is_dominant(p)) out.push_back(p);
  return out;
}

std::vector<Vec> rectangle_dominant_points(const RootSystem& g, const Hyperrectangle& r) {
  std::vector<Vec> out;
  for (const auto& p : r.points())
    if (g.is_dominant(p)) out.push_back(p);
  std::sort(out.begin(), out.end(), VecLess{});
  out.erase(std::unique(out.begin(), out.end(), VecEq{}), out.end());
  return out;
}

std::set<Vec, VecLess> prv_components(const SphericalPair& pair, const Vec& nuhat) {
  require_dominant(pair.amb(), nuhat, "nuhat");
  std::set<Vec, VecLess> out;
  for (const auto& chi : pair.amb().weyl_orbit(nuhat))
    out.insert(pair.sub().dominant_representative(pair.restrict_weight(chi)).first);
  return out;
}

std::set<Vec, VecLess> g2_spin7_prv_closed_form(const Vec& nuhat) {
  if (nuhat.size() != 3) fail(ErrorKind::DimensionMismatch, "nuhat must have 3 coordinates");
  require_input_scale(nuhat, "nuhat");
  if (nuhat[0] < 0 || nuhat[1] < 0 || nuhat[2] < 0)
    fail(ErrorKind::NonDominantInput, "nuhat " + format_vec(nuhat) + " is not dominant");
  const Int n1 = nuhat[0], n2 = nuhat[1], n3 = nuhat[2];
  std::set<Vec, VecLess> out;
  out.insert(make_vec({n1 + n3, n2}));
  out.insert(n1 <= n3 ? make_vec({-n1 + n3, n1 + n2}) : make_vec({n1 - n3, n2 + n3}));
  out.insert(n1 <= n2 + n3 ? make_vec({-n1 + n2 + n3, n1}) : make_vec({n1 - n2 - n3, n2 + n3}));
  out.insert(n1 <= n2 ? make_vec({-n1 + n2, n1}) : make_vec({n1 - n2, n2}));
  return out;
}

std::vector<Segment> main_segments(const SphericalPair& pair, const Vec& nuhat) {
  require_dominant(pair.amb(), nuhat, "nuhat");
  const RootSystem& g = pair.sub();
  std::vector<Segment> out;
  std::set<PointSetKey, PointSetLess> seen;
  for (const auto& [chi, word] : pair.amb().orbit_with_words(nuhat)) {
    Vec start = pair.restrict_weight(chi);
    if (!g.is_dominant(start)) continue;
    for (int alpha : pair.delta2()) {
      const auto& fiber = pair.fibers()[static_cast<size_t>(alpha)];
      Int p1 = std::min(chi[fiber.amb_roots[0]], chi[fiber.amb_roots[1]]);
      Segment s;
      s.start = start;
      s.direction = g.simple_root(alpha);
      s.end = start - p1 * s.direction;
      s.prov = Provenance{Tag::MainSegment, word, {}, {}, {s.direction}};
      if (seen.insert(point_set_key(s.points())).second) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Hyperrectangle> ortho_rectangles(const SphericalPair& pair, const Vec& nuhat,
                                             int max_axes) {
  require_dominant(pair.amb(), nuhat, "nuhat");
  if (max_axes < 1) fail(ErrorKind::ParseError, "max_axes must be >= 1");
  const RootSystem& g = pair.sub();
  const auto subsets = orthogonal_subsets(g, pair.delta2(), 2, max_axes);
  std::vector<Hyperrectangle> out;
  if (subsets.empty()) return out;
  std::set<PointSetKey, PointSetLess> seen;
  for (const auto& [chi, word] : pair.amb().orbit_with_words(nuhat)) {
    Vec base = pair.restrict_weight(chi);
    if (!g.is_dominant(base)) continue;
    for (const auto& subset : subsets) {
      // Per-axis reduction: when the smaller fiber pairing is negative,
      // replace the orbit point by its flip across that fiber root, which
      // moves the corner and makes both pairings nonnegative.  Fibers of
      // orthogonal axes are mutually orthogonal, so flips act independently
      // and the extent is |smaller pairing| either way.
      Vec corner = base;
      Hyperrectangle r;
      for (int alpha : subset) {
        const auto& fiber = pair.fibers()[static_cast<size_t>(alpha)];
        Int lo = std::min(chi[fiber.amb_roots[0]], chi[fiber.amb_roots[1]]);
        Vec root = g.simple_root(alpha);
        if (lo < 0) corner -= lo * root;
        r.axes.emplace_back(std::move(root), lo < 0 ? -lo : lo);
      }
      r.corner = std::move(corner);
      r.prov = Provenance{Tag::OrthoRect, word, {}, {}, {}};
      for (const auto& [root, extent] : r.axes) r.prov.axes.push_back(root);
      if (seen.insert(point_set_key(r.points())).second) out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

// Shared enumeration for the tensor-product constructions.  A tuple of
// pairwise orthogonal positive roots qualifies at an orbit-point pair when
// the roots are simple themselves, or some witness for the mu-point or the
// nu-point pulls the whole tuple back to simple roots at once.
template <typename Sink>
void enumerate_sym(const RootSystem& g, const Vec& mu, const Vec& nu, int smin, int smax,
                   bool positive_only, Sink&& sink) {
  const auto mu_orbit = g.orbit_with_words(mu);
  const auto nu_orbit = g.orbit_with_words(nu);
  const std::vector<int> Jmu = zero_coordinate_set(g, mu);
  const std::vector<int> Jnu = zero_coordinate_set(g, nu);

  std::vector<int> all_simple(static_cast<size_t>(g.ss_rank()));
  for (int i = 0; i < g.ss_rank(); ++i) all_simple[static_cast<size_t>(i)] = i;
  const auto simple_tuples = orthogonal_subsets(g, all_simple, smin, smax);
  if (simple_tuples.empty()) return;

  std::set<RootTuple> base_tuples;
  for (const auto& tup : simple_tuples) {
    RootTuple idx;
    for (int i : tup) idx.push_back(positive_root_index(g, g.simple_root(i)));
    std::sort(idx.begin(), idx.end());
    base_tuples.insert(std::move(idx));
  }

  std::vector<std::set<RootTuple>> mu_tuples, nu_tuples;
  mu_tuples.reserve(mu_orbit.size());
  for (const auto& [x, v0] : mu_orbit)
    mu_tuples.push_back(coset_tuples(g, v0, Jmu, simple_tuples, positive_only));
  nu_tuples.reserve(nu_orbit.size());
  for (const auto& [y, w0] : nu_orbit)
    nu_tuples.push_back(coset_tuples(g, w0, Jnu, simple_tuples, positive_only));

  for (size_t xi = 0; xi < mu_orbit.size(); ++xi) {
    for (size_t yi = 0; yi < nu_orbit.size(); ++yi) {
      std::set<RootTuple> tuples = base_tuples;
      tuples.insert(mu_tuples[xi].begin(), mu_tuples[xi].end());
      tuples.insert(nu_tuples[yi].begin(), nu_tuples[yi].end());
      for (const auto& idx : tuples) {
        std::vector<const PositiveRoot*> roots;
        roots.reserve(idx.size());
        for (int i : idx) roots.push_back(&g.positive_roots()[static_cast<size_t>(i)]);
        sink(mu_orbit[xi].first, mu_orbit[xi].second, nu_orbit[yi].first, nu_orbit[yi].second,
             roots);
      }
    }
  }
}

}  // namespace

std::vector<Segment> sym_segments(const RootSystem& g, const Vec& mu, const Vec& nu) {
  require_dominant(g, mu, "mu");
  require_dominant(g, nu, "nu");
  std::vector<Segment> out;
  std::set<PointSetKey, PointSetLess> seen;
  enumerate_sym(g, mu, nu, 1, 1, /*positive_only=*/true,
                [&](const Vec& x, const WeylWord& v0, const Vec& y, const WeylWord& w0,
                    const std::vector<const PositiveRoot*>& roots) {
                  const PositiveRoot& beta = *roots[0];
                  const Int a = g.coroot_pairing(x, beta);
                  const Int b = g.coroot_pairing(y, beta);
                  const Vec lambda1 = x + y;
                  // The four virtual PRV components lambda_1..lambda_4 pair
                  // with beta^vee as a+b, a-b, b-a, -a-b; the segment joins
                  // the two largest.  Tied values belong to equal weights,
                  // so the stable index preference never changes the points.
                  struct Cand {
                    Int value;
                    Int drop;  // lambda = lambda_1 - drop * beta
                  };
                  Cand cands[4] = {{a + b, 0}, {a - b, b}, {b - a, a}, {-a - b, a + b}};
                  std::stable_sort(std::begin(cands), std::end(cands),
                                   [](const Cand& l, const Cand& r) { return l.value > r.value; });
                  Segment s;
                  s.direction = beta.fund;
                  s.start = lambda1 - cands[0].drop * beta.fund;
                  s.end = lambda1 - cands[1].drop * beta.fund;
                  s.prov = Provenance{Tag::SymSegment, {}, v0, w0, {beta.fund}};
                  if (seen.insert(point_set_key(s.points())).second) out.push_back(std::move(s));
                });
  return out;
}

std::vector<Hyperrectangle> sym_rectangles(const RootSystem& g, const Vec& mu, const Vec& nu,
                                           int max_axes) {
  require_dominant(g, mu, "mu");
  require_dominant(g, nu, "nu");
  if (max_axes < 1) fail(ErrorKind::ParseError, "max_axes must be >= 1");
  std::vector<Hyperrectangle> out;
  std::set<PointSetKey, PointSetLess> seen;
  enumerate_sym(g, mu, nu, 2, max_axes, /*positive_only=*/false,
                [&](const Vec& x, const WeylWord& v0, const Vec& y, const WeylWord& w0,
                    const std::vector<const PositiveRoot*>& roots) {
                  // Per-axis sign normalization: flip the mu-point and the
                  // nu-point independently across each axis until both
                  // pairings are nonnegative.  Axes are orthogonal, so the
                  // flips do not interfere; the corner is the normalized
                  // virtual PRV component and every extent is nonnegative.
                  Vec xs = x, ys = y;
                  Hyperrectangle r;
                  for (const auto* beta : roots) {
                    Int a = g.coroot_pairing(xs, *beta);
                    Int b = g.coroot_pairing(ys, *beta);
                    if (a < 0) {
                      xs -= a * beta->fund;
                      a = -a;
                    }
                    if (b < 0) {
                      ys -= b * beta->fund;
                      b = -b;
                    }
                    r.axes.emplace_back(beta->fund, std::min(a, b));
                  }
                  r.corner = xs + ys;
                  r.prov = Provenance{Tag::SymRect, {}, v0, w0, {}};
                  for (const auto* beta : roots) r.prov.axes.push_back(beta->fund);
                  if (seen.insert(point_set_key(r.points())).second) out.push_back(std::move(r));
                });
  return out;
}

int default_max_axes(const SphericalPair& pair) {
  auto subsets = orthogonal_subsets(pair.sub(), pair.delta2(), 1, pair.sub().ss_rank());
  size_t best = 1;
  for (const auto& s : subsets) best = std::max(best, s.size());
  return static_cast<int>(best);
}

std::vector<TaggedComponent> all_components(const SphericalPair& pair, const Vec& nuhat,
                                            const GeneratorOptions& options) {
  require_dominant(pair.amb(), nuhat, "input");
  const RootSystem& g = pair.sub();
  const int max_axes = options.max_axes > 0 ? options.max_axes : default_max_axes(pair);

  std::map<Vec, TaggedComponent, VecLess> acc;
  auto record = [&acc](const Vec& w, Tag tag, const Provenance& prov) {
    auto [it, inserted] = acc.try_emplace(w);
    if (inserted) it->second.weight = w;
    if (it->second.tags.insert(tag).second) it->second.witnesses.push_back(prov);
  };
  auto enabled = [&options](Tag t) { return options.theorems.count(t) > 0; };

  if (enabled(Tag::Prv)) {
    for (const auto& [chi, word] : pair.amb().orbit_with_words(nuhat)) {
      Vec dom = g.dominant_representative(pair.restrict_weight(chi)).first;
      record(dom, Tag::Prv, Provenance{Tag::Prv, word, {}, {}, {}});
    }
  }
  if (enabled(Tag::MainSegment)) {
    for (const auto& s : main_segments(pair, nuhat))
      for (const auto& p : segment_dominant_points(g, s)) record(p, Tag::MainSegment, s.prov);
  }
  if (enabled(Tag::OrthoRect) && max_axes >= 2) {
    for (const auto& r : ortho_rectangles(pair, nuhat, max_axes))
      for (const auto& p : rectangle_dominant_points(g, r)) record(p, Tag::OrthoRect, r.prov);
  }
  if (pair.is_diagonal() && (enabled(Tag::SymSegment) || enabled(Tag::SymRect))) {
    auto [mu, nu] = pair.split_diagonal(nuhat);
    if (enabled(Tag::SymSegment)) {
      for (const auto& s : sym_segments(g, mu, nu))
        for (const auto& p : segment_dominant_points(g, s)) record(p, Tag::SymSegment, s.prov);
    }
    if (enabled(Tag::SymRect) && max_axes >= 2) {
      for (const auto& r : sym_rectangles(g, mu, nu, max_axes))
        for (const auto& p : rectangle_dominant_points(g, r)) record(p, Tag::SymRect, r.prov);
    }
  }

  std::vector<TaggedComponent> out;
  out.reserve(acc.size());
  for (auto& [w, tc] : acc) out.push_back(std::move(tc));
  std::sort(out.begin(), out.end(), [&g](const TaggedComponent& a, const TaggedComponent& b) {
    Int ha = g.height(a.weight), hb = g.height(b.weight);
    if (ha != hb) return ha > hb;
    return VecLess{}(a.weight, b.weight);
  });
  return out;
}

}  // namespace prv
