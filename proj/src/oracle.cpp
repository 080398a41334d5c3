#include "prv/oracle.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace prv {

namespace {

void require_dominant(const RootSystem& rs, const Vec& v, const char* what) {
  require_input_scale(v, what);
  if (!rs.is_dominant(v))
    fail(ErrorKind::NonDominantInput, std::string(what) + " " + format_vec(v) + " is not dominant");
}

// Dominant weights mu <= lambda (lambda - mu a nonnegative sum of simple
// roots).  Each non-maximal dominant weight below lambda is reachable from a
// dominant weight above it by subtracting one positive root, so a BFS over
// positive-root steps through the dominant cone enumerates the whole set.
std::vector<Vec> dominant_weights_below(const RootSystem& g, const Vec& lambda) {
  std::vector<Vec> out;
  std::unordered_set<Vec, VecHash, VecEq> seen{lambda};
  std::deque<Vec> queue{lambda};
  out.push_back(lambda);
  while (!queue.empty()) {
    Vec cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& gamma : g.positive_roots()) {
      Vec next = cur - gamma.fund;
      if (!g.is_dominant(next)) continue;
      if (seen.count(next)) continue;
      seen.insert(next);
      out.push_back(next);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

// Freudenthal recursion for a group with a single simple factor (plus any
// torus slots, which ride along unchanged).
CharacterTable freudenthal_single(const RootSystem& g, const Vec& lambda) {
  CharacterTable table;
  table.highest = lambda;

  std::vector<Vec> dom = dominant_weights_below(g, lambda);
  std::sort(dom.begin(), dom.end(), [&g](const Vec& a, const Vec& b) {
    Int ha = g.height(a), hb = g.height(b);
    if (ha != hb) return ha > hb;
    return VecLess{}(a, b);
  });

  std::unordered_map<Vec, Int, VecHash, VecEq> mult;
  mult.reserve(dom.size() * 2);
  const Vec delta = g.weyl_vector();

  auto orbit_mult = [&](const Vec& x) -> Int {
    Vec rep = g.dominant_representative(x).first;
    auto it = mult.find(rep);
    return it == mult.end() ? 0 : it->second;
  };

  for (const auto& mu : dom) {
    if (mu == lambda) {
      mult.emplace(mu, 1);
      continue;
    }
    // 2 * sum over positive roots gamma and k >= 1 of
    //   m(mu + k gamma) * (mu + k gamma, gamma),
    // divided by (lambda + mu + 2 delta, lambda - mu).
    Int numer = 0;
    for (const auto& gamma : g.positive_roots()) {
      Vec x = mu;
      for (;;) {
        x += gamma.fund;
        Int m = orbit_mult(x);
        if (m == 0) break;  // weight strings are unbroken
        Int inner = checked_mul(gamma.half_norm, g.coroot_pairing(x, gamma));
        numer = checked_add(numer, checked_mul(m, inner));
      }
    }
    numer = checked_mul(numer, 2);
    Vec diff = lambda - mu;
    Vec coords = g.simple_coordinates(diff);
    Vec sum = lambda + mu + 2 * delta;
    Int denom = 0;
    for (int i = 0; i < g.ss_rank(); ++i) {
      if (coords[i] == 0) continue;
      Int di = g.simple_half_norm(i);
      denom = checked_add(denom, checked_mul(checked_mul(coords[i], di), sum[i]));
    }
    if (denom <= 0 || numer % denom != 0)
      fail(ErrorKind::Internal, "Freudenthal recursion produced a non-integral multiplicity");
    Int m = numer / denom;
    // Every dominant weight below the highest one is a weight of the module.
    if (m <= 0) fail(ErrorKind::Internal, "Freudenthal recursion produced a non-positive multiplicity");
    mult.emplace(mu, m);
  }

  Int dim = 0;
  for (const auto& [mu, m] : mult) {
    Int orbit_size = static_cast<Int>(g.weyl_orbit(mu).size());
    dim = checked_add(dim, checked_mul(m, orbit_size));
    table.dominant.emplace(mu, m);
  }
  table.dimension = dim;
  return table;
}

RootSystem factor_system(const SimpleFactor& f) { return RootSystem(GroupType{{f}, 0}); }

// Product groups factorize: the dominant support is the product of the
// factors' supports and multiplicities multiply; torus coordinates are
// fixed.
CharacterTable freudenthal(const RootSystem& g, const Vec& lambda) {
  if (g.type().factors.size() <= 1) return freudenthal_single(g, lambda);

  std::vector<CharacterTable> parts;
  parts.reserve(g.type().factors.size());
  for (size_t fi = 0; fi < g.type().factors.size(); ++fi) {
    const auto [off, rk] = g.factor_spans()[fi];
    RootSystem fg = factor_system(g.type().factors[fi]);
    Vec block = lambda.segment(off, rk);
    parts.push_back(freudenthal_single(fg, block));
  }

  CharacterTable table;
  table.highest = lambda;
  std::vector<std::pair<Vec, Int>> combos{{Vec::Zero(g.rank()), 1}};
  for (size_t fi = 0; fi < parts.size(); ++fi) {
    const auto [off, rk] = g.factor_spans()[fi];
    std::vector<std::pair<Vec, Int>> next;
    next.reserve(combos.size() * parts[fi].dominant.size());
    for (const auto& [base, m] : combos) {
      for (const auto& [mu, mm] : parts[fi].dominant) {
        Vec w = base;
        w.segment(off, rk) = mu;
        next.emplace_back(std::move(w), checked_mul(m, mm));
      }
    }
    combos = std::move(next);
  }
  const int ss = g.ss_rank();
  Int dim = 1;
  for (const auto& part : parts) dim = checked_mul(dim, part.dimension);
  for (auto& [w, m] : combos) {
    for (int t = ss; t < g.rank(); ++t) w[t] = lambda[t];
    table.dominant.emplace(std::move(w), m);
  }
  table.dimension = dim;
  return table;
}

const CharacterTable& cached_character(const RootSystem& g, const Vec& lambda) {
  static std::mutex mutex;
  static std::unordered_map<std::string, std::unique_ptr<const CharacterTable>> cache;
  std::string key = g.signature() + '|' + format_vec(lambda);
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<const CharacterTable>(freudenthal(g, lambda));
  std::scoped_lock lock(mutex);
  auto [it, inserted] = cache.emplace(std::move(key), std::move(table));
  return *it->second;
}

}  // namespace

const CharacterTable& weight_multiplicities(const RootSystem& g, const Vec& lambda) {
  require_dominant(g, lambda, "lambda");
  return cached_character(g, lambda);
}

Int weyl_dimension(const RootSystem& g, const Vec& lambda) {
  require_dominant(g, lambda, "lambda");
  const Vec shifted = lambda + g.weyl_vector();
  // Multiply the numerators first in height order and divide greedily; the
  // final result is an integer, intermediate quotients are kept exact by
  // accumulating numerator and denominator with gcd reduction.
  Int num = 1, den = 1;
  auto reduce = [](Int& a, Int& b) {
    Int x = a < 0 ? -a : a, y = b < 0 ? -b : b;
    while (y) {
      Int t = x % y;
      x = y;
      y = t;
    }
    if (x > 1) {
      a /= x;
      b /= x;
    }
  };
  for (const auto& gamma : g.positive_roots()) {
    Int top = g.coroot_pairing(shifted, gamma);
    Int bottom = g.coroot_pairing(g.weyl_vector(), gamma);
    num = checked_mul(num, top);
    den = checked_mul(den, bottom);
    reduce(num, den);
  }
  if (den != 1 && num % den != 0) fail(ErrorKind::Internal, "Weyl dimension is not an integer");
  return num / den;
}

std::vector<std::pair<Vec, Int>> expand_character(const RootSystem& g,
                                                  const CharacterTable& table) {
  std::vector<std::pair<Vec, Int>> out;
  for (const auto& [mu, m] : table.dominant)
    for (const auto& w : g.weyl_orbit(mu)) out.emplace_back(w, m);
  return out;
}

Decomposition tensor_decompose(const RootSystem& g, const Vec& mu, const Vec& nu) {
  require_dominant(g, mu, "mu");
  require_dominant(g, nu, "nu");

  // Iterate over the factor with fewer weights; tie broken toward nu.
  const CharacterTable& mu_table = weight_multiplicities(g, mu);
  const CharacterTable& nu_table = weight_multiplicities(g, nu);
  const bool iterate_nu = nu_table.dimension <= mu_table.dimension;
  const CharacterTable& iter = iterate_nu ? nu_table : mu_table;
  const Vec& base = iterate_nu ? mu : nu;

  const Vec delta = g.weyl_vector();
  const int ss = g.ss_rank();
  std::map<Vec, Int, VecLess> acc;
  for (const auto& [weight, m] : expand_character(g, iter)) {
    Vec sigma = base + weight + delta;
    auto [rep, word] = g.dominant_representative(sigma);
    bool singular = false;
    for (int i = 0; i < ss; ++i) {
      if (rep[i] == 0) {
        singular = true;
        break;
      }
    }
    if (singular) continue;
    const Int sign = (word.size() % 2 == 0) ? 1 : -1;
    acc[rep - delta] = checked_add(acc[rep - delta], checked_mul(sign, m));
  }
  Decomposition out;
  for (const auto& [w, m] : acc) {
    if (m == 0) continue;
    if (m < 0) fail(ErrorKind::Internal, "tensor decomposition produced a negative multiplicity");
    out.emplace(w, m);
  }
  return out;
}

Decomposition branch(const SphericalPair& pair, const Vec& nuhat, unsigned peel_seed) {
  const RootSystem& ghat = pair.amb();
  const RootSystem& g = pair.sub();
  require_dominant(ghat, nuhat, "nuhat");

  // Restricted character on the dominant cone of G.  The restriction of a
  // What-invariant character is W-invariant, so dominant values determine it.
  const CharacterTable& table = weight_multiplicities(ghat, nuhat);
  std::map<Vec, Int, VecLess> acc;
  for (const auto& [muhat, m] : table.dominant) {
    for (const auto& chi : ghat.weyl_orbit(muhat)) {
      Vec w = pair.restrict_weight(chi);
      if (g.is_dominant(w)) acc[w] = checked_add(acc[w], m);
    }
  }

  std::mt19937_64 rng(peel_seed);
  Decomposition out;
  while (!acc.empty()) {
    // Pick a dominance-maximal weight with positive coefficient.
    std::vector<Vec> top;
    Int best = 0;
    bool first = true;
    for (const auto& [w, m] : acc) {
      (void)m;
      Int h = g.height(w);
      if (first || h > best) {
        best = h;
        top.clear();
        first = false;
      }
      if (h == best) top.push_back(w);
    }
    Vec pick = top.front();
    if (peel_seed != 0 && top.size() > 1)
      pick = top[std::uniform_int_distribution<size_t>(0, top.size() - 1)(rng)];
    Int coeff = acc.at(pick);
    if (coeff < 0)
      fail(ErrorKind::NegativeCoefficient,
           "negative coefficient " + std::to_string(coeff) + " at " + format_vec(pick) +
               " while branching " + format_vec(nuhat) + " through " + pair.name());
    out.emplace(pick, coeff);
    const CharacterTable& peel = weight_multiplicities(g, pick);
    for (const auto& [mu, m] : peel.dominant) {
      auto it = acc.find(mu);
      Int cur = it == acc.end() ? 0 : it->second;
      Int next = checked_sub(cur, checked_mul(coeff, m));
      if (next == 0) {
        if (it != acc.end()) acc.erase(it);
      } else if (it == acc.end()) {
        acc.emplace(mu, next);
      } else {
        it->second = next;
      }
    }
  }
  return out;
}

std::string VerificationReport::summary() const {
  std::string s;
  for (size_t i = 0; i < tallies.size(); ++i) {
    if (i == 0) {
      s += std::to_string(tallies[i].fresh);
    } else {
      s += " +" + std::to_string(tallies[i].fresh);
    }
  }
  s += " = " + std::to_string(generated_total) + " / " + std::to_string(truth_total);
  return s;
}

VerificationReport verify_components(const std::vector<TaggedComponent>& generated,
                                     const Decomposition& truth) {
  VerificationReport report;
  report.truth_total = static_cast<Int>(truth.size());
  std::set<Vec, VecLess> covered;
  for (Tag tag : kTagOrder) {
    TagTally tally;
    tally.tag = tag;
    for (const auto& tc : generated) {
      if (!tc.tags.count(tag)) continue;
      ++tally.count;
      if (covered.insert(tc.weight).second) ++tally.fresh;
    }
    report.tallies.push_back(tally);
  }
  report.generated_total = static_cast<Int>(covered.size());
  for (const auto& tc : generated)
    if (!truth.count(tc.weight)) report.violations.push_back(tc.weight);
  return report;
}

}  // namespace prv
