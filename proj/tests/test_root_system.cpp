#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prv/root_system.hpp"

#include <algorithm>
#include <random>

using namespace prv;

namespace {

Vec random_dominant(const RootSystem& g, std::mt19937_64& rng, Int bound) {
  Vec v = Vec::Zero(g.rank());
  std::uniform_int_distribution<Int> coord(0, bound);
  for (int i = 0; i < g.rank(); ++i) v[i] = coord(rng);
  return v;
}

WeylWord random_word(const RootSystem& g, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, g.ss_rank() - 1);
  WeylWord w(static_cast<size_t>(len(rng)));
  for (auto& l : w) l = letter(rng);
  return w;
}

const std::vector<std::string> kSampleTypes = {"A1", "A2", "B3", "C3", "G2", "A1xA1"};

}  // namespace

TEST_CASE("group type parsing") {
  CHECK(GroupType::parse("C3").str() == "C3");
  CHECK(GroupType::parse("A1xA1").str() == "A1xA1");
  CHECK(GroupType::parse("G2xT1").str() == "G2xT1");
  CHECK(GroupType::parse("b3xc3").str() == "B3xC3");
  CHECK_THROWS_AS(GroupType::parse("E8"), Error);
  CHECK_THROWS_AS(GroupType::parse("G3"), Error);
  CHECK_THROWS_AS(GroupType::parse(""), Error);
  CHECK_THROWS_AS(GroupType::parse("Ax"), Error);
}

TEST_CASE("cartan matrices follow Bourbaki numbering") {
  RootSystem g2(GroupType::parse("G2"));
  CHECK(g2.simple_root(0) == make_vec({2, -1}));
  CHECK(g2.simple_root(1) == make_vec({-3, 2}));

  RootSystem b3(GroupType::parse("B3"));
  CHECK(b3.simple_root(0) == make_vec({2, -1, 0}));
  CHECK(b3.simple_root(1) == make_vec({-1, 2, -2}));
  CHECK(b3.simple_root(2) == make_vec({0, -1, 2}));

  RootSystem c3(GroupType::parse("C3"));
  CHECK(c3.simple_root(1) == make_vec({-1, 2, -1}));
  CHECK(c3.simple_root(2) == make_vec({0, -2, 2}));
}

TEST_CASE("positive root counts and half norms") {
  CHECK(RootSystem(GroupType::parse("G2")).positive_roots().size() == 6);
  CHECK(RootSystem(GroupType::parse("B3")).positive_roots().size() == 9);
  CHECK(RootSystem(GroupType::parse("C3")).positive_roots().size() == 9);
  CHECK(RootSystem(GroupType::parse("A3")).positive_roots().size() == 6);
  CHECK(RootSystem(GroupType::parse("D4")).positive_roots().size() == 12);
  CHECK(RootSystem(GroupType::parse("C3xC3")).positive_roots().size() == 18);

  RootSystem g2(GroupType::parse("G2"));
  int shorts = 0, longs = 0;
  for (const auto& r : g2.positive_roots()) {
    if (r.half_norm == 1) ++shorts;
    if (r.half_norm == 3) ++longs;
  }
  CHECK(shorts == 3);
  CHECK(longs == 3);
}

TEST_CASE("pairing reads fundamental coordinates") {
  RootSystem g2(GroupType::parse("G2"));
  CHECK(g2.pairing(make_vec({3, 2}), 0) == 3);
  CHECK(g2.pairing(make_vec({0, 0}), 0) == 0);
  CHECK(g2.pairing(make_vec({0, 0}), 1) == 0);
  RootSystem b3(GroupType::parse("B3"));
  CHECK(b3.pairing(make_vec({2, 2, 1}), 2) == 1);
  CHECK_THROWS_AS(b3.pairing(make_vec({2, 2, 1}), 3), Error);
}

TEST_CASE("reflection in a simple root") {
  RootSystem g2(GroupType::parse("G2"));
  CHECK(g2.reflect(make_vec({3, 2}), 0) == make_vec({-3, 5}));

  RootSystem b3(GroupType::parse("B3"));
  Vec wall = make_vec({0, 2, 1});
  CHECK(b3.reflect(wall, 0) == wall);

  RootSystem a1(GroupType::parse("A1"));
  CHECK(a1.reflect(make_vec({5}), 0) == make_vec({-5}));

  std::mt19937_64 rng(7);
  for (const auto& name : kSampleTypes) {
    RootSystem g(GroupType::parse(name));
    for (int trial = 0; trial < 20; ++trial) {
      Vec v = random_dominant(g, rng, 5);
      for (int i = 0; i < g.ss_rank(); ++i) CHECK(g.reflect(g.reflect(v, i), i) == v);
    }
  }
}

TEST_CASE("apply_word composes right to left") {
  RootSystem b3(GroupType::parse("B3"));
  Vec v = make_vec({2, 2, 1});
  CHECK(b3.apply_word(v, {}) == v);
  CHECK(b3.apply_word(v, {0}) == make_vec({-2, 4, 1}));
  CHECK(b3.apply_word(v, {0, 0}) == v);

  RootSystem a1(GroupType::parse("A1"));
  CHECK(a1.apply_word(make_vec({1}), {0, 0}) == make_vec({1}));

  // Word followed by its inverse is the identity.
  std::mt19937_64 rng(11);
  for (const auto& name : kSampleTypes) {
    RootSystem g(GroupType::parse(name));
    for (int trial = 0; trial < 20; ++trial) {
      Vec v = random_dominant(g, rng, 4);
      WeylWord w = random_word(g, rng, 8);
      WeylWord round = w;
      WeylWord winv = inverse_word(w);
      round.insert(round.end(), winv.begin(), winv.end());
      CHECK(g.apply_word(v, round) == v);
    }
  }
}

TEST_CASE("dominant representative") {
  RootSystem a1(GroupType::parse("A1"));
  auto [w1, word1] = a1.dominant_representative(make_vec({-3}));
  CHECK(w1 == make_vec({3}));
  CHECK(word1 == WeylWord{0});

  RootSystem g2(GroupType::parse("G2"));
  Vec dom = make_vec({3, 2});
  auto [w2, word2] = g2.dominant_representative(dom);
  CHECK(w2 == dom);
  CHECK(word2.empty());
  auto [w3, word3] = g2.dominant_representative(make_vec({-3, 5}));
  CHECK(w3 == dom);
  CHECK(g2.apply_word(make_vec({-3, 5}), word3) == dom);

  // Uniqueness: every orbit point reduces to the same dominant weight.
  std::mt19937_64 rng(13);
  for (const auto& name : kSampleTypes) {
    RootSystem g(GroupType::parse(name));
    for (int trial = 0; trial < 10; ++trial) {
      Vec v = random_dominant(g, rng, 3);
      for (const auto& p : g.weyl_orbit(v)) {
        auto [rep, word] = g.dominant_representative(p);
        CHECK(rep == v);
        CHECK(g.apply_word(p, word) == rep);
      }
    }
  }
}

TEST_CASE("weyl orbits") {
  RootSystem a1(GroupType::parse("A1"));
  auto orb = a1.weyl_orbit(make_vec({2}));
  CHECK(orb.size() == 2);

  RootSystem g2(GroupType::parse("G2"));
  CHECK(g2.weyl_orbit(make_vec({0, 0})).size() == 1);
  CHECK(g2.weyl_orbit(make_vec({1, 1})).size() == 12);

  RootSystem b3(GroupType::parse("B3"));
  CHECK(b3.weyl_orbit(make_vec({1, 0, 0})).size() == 6);
  CHECK(b3.weyl_orbit(make_vec({1, 1, 1})).size() == 48);
  CHECK(b3.weyl_order() == 48);

  RootSystem c3(GroupType::parse("C3"));
  CHECK(c3.weyl_orbit(make_vec({1, 1, 1})).size() == 48);

  RootSystem a1a1(GroupType::parse("A1xA1"));
  CHECK(a1a1.weyl_orbit(make_vec({1, 1})).size() == 4);

  // Orbits are closed under reflections and sum to zero on the semisimple part.
  std::mt19937_64 rng(17);
  for (const auto& name : kSampleTypes) {
    RootSystem g(GroupType::parse(name));
    for (int trial = 0; trial < 5; ++trial) {
      Vec v = random_dominant(g, rng, 3);
      auto orbit = g.weyl_orbit(v);
      CHECK(static_cast<Int>(orbit.size()) * (g.weyl_order() / static_cast<Int>(orbit.size())) ==
            g.weyl_order());
      Vec sum = Vec::Zero(g.rank());
      for (const auto& p : orbit) sum += p;
      for (int i = 0; i < g.ss_rank(); ++i) CHECK(sum[i] == 0);
    }
  }

  // Witness words reproduce their orbit points.
  for (const auto& name : kSampleTypes) {
    RootSystem g(GroupType::parse(name));
    Vec v = random_dominant(g, rng, 2);
    for (const auto& [p, word] : g.orbit_with_words(v)) CHECK(g.apply_word(v, word) == p);
  }
}

TEST_CASE("length counts inversions of the group element") {
  RootSystem g2(GroupType::parse("G2"));
  CHECK(g2.length({}) == 0);
  CHECK(g2.length({0, 0}) == 0);
  CHECK(g2.length({1, 1, 0}) == 1);
  CHECK(g2.length(g2.longest_element()) == 6);

  RootSystem c3(GroupType::parse("C3"));
  CHECK(c3.length(c3.longest_element()) == 9);
}

TEST_CASE("length increments along dominant-pairing directions") {
  // For dominant lambda and any u, a positive pairing <u lambda, beta^vee>
  // forces l(s_beta u) = l(u) + 1, and a negative one the reverse.
  std::mt19937_64 rng(19);
  for (const auto& name : kSampleTypes) {
    RootSystem g(GroupType::parse(name));
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 120; ++trial) {
      Vec lambda = random_dominant(g, rng, 3);
      WeylWord u = random_word(g, rng, 6);
      std::uniform_int_distribution<int> letter(0, g.ss_rank() - 1);
      int beta = letter(rng);
      Int p = g.apply_word(lambda, u)[beta];
      if (p == 0) continue;
      WeylWord su = u;
      su.insert(su.begin(), beta);
      if (p > 0) {
        CHECK(g.length(su) == g.length(u) + 1);
      } else {
        CHECK(g.length(u) == g.length(su) + 1);
      }
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("longest element") {
  RootSystem a1(GroupType::parse("A1"));
  CHECK(a1.longest_element() == WeylWord{0});

  RootSystem a1a1(GroupType::parse("A1xA1"));
  WeylWord w0 = a1a1.longest_element();
  CHECK(a1a1.length(w0) == 2);

  // w0 = -1 in types C3, B3, G2: check on the fundamental weights.
  for (const auto& name : {std::string("C3"), std::string("B3"), std::string("G2")}) {
    RootSystem g(GroupType::parse(name));
    WeylWord w = g.longest_element();
    CHECK(g.length(w) == static_cast<Int>(g.positive_roots().size()));
    for (int i = 0; i < g.rank(); ++i) {
      Vec e = Vec::Zero(g.rank());
      e[i] = 1;
      Vec neg = -e;
      CHECK(g.apply_word(e, w) == neg);
    }
  }

  // In A2, -w0 permutes the two fundamental weights.
  RootSystem a2(GroupType::parse("A2"));
  WeylWord w = a2.longest_element();
  CHECK(a2.apply_word(make_vec({1, 0}), w) == make_vec({0, -1}));
  CHECK(a2.apply_word(make_vec({0, 1}), w) == make_vec({-1, 0}));
}

TEST_CASE("simple coordinates and height") {
  RootSystem g2(GroupType::parse("G2"));
  // alpha_1 + alpha_2 = (-1, 1) in fundamental coordinates.
  CHECK(g2.simple_coordinates(make_vec({-1, 1})) == make_vec({1, 1}));
  CHECK(g2.in_positive_root_cone(make_vec({-1, 1})));
  CHECK_FALSE(g2.in_positive_root_cone(make_vec({1, -1})));
  CHECK(g2.height(g2.simple_root(0)) == 2);
  CHECK(g2.height(g2.simple_root(1)) == 2);

  // Torus coordinates ride along unchanged.
  RootSystem a1t(GroupType::parse("A1xT1"));
  Vec v = make_vec({3, 5});
  CHECK(a1t.reflect(v, 0) == make_vec({-3, 5}));
  CHECK(a1t.weyl_orbit(v).size() == 2);
}

TEST_CASE("oversized coordinates are rejected") {
  Vec big = make_vec({Int(1) << 40, 0});
  CHECK_THROWS_AS(require_input_scale(big, "weight"), Error);
}
