#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prv/pairs.hpp"

#include <random>

using namespace prv;

TEST_CASE("g2-spin7 restriction on fundamental weights") {
  SphericalPair p = SphericalPair::g2_spin7();
  CHECK(p.restrict_weight(make_vec({1, 0, 0})) == make_vec({1, 0}));
  CHECK(p.restrict_weight(make_vec({0, 1, 0})) == make_vec({0, 1}));
  CHECK(p.restrict_weight(make_vec({0, 0, 1})) == make_vec({1, 0}));
  CHECK(p.restrict_weight(make_vec({0, 0, 0})) == make_vec({0, 0}));
}

TEST_CASE("diagonal restriction adds the two halves") {
  SphericalPair p = SphericalPair::by_name("diag:C3");
  CHECK(p.restrict_weight(make_vec({1, 2, 3, 4, 5, 6})) == make_vec({5, 7, 9}));
  CHECK(p.is_diagonal());
  auto [mu, nu] = p.split_diagonal(make_vec({2, 1, 0, 0, 3, 1}));
  CHECK(mu == make_vec({2, 1, 0}));
  CHECK(nu == make_vec({0, 3, 1}));
}

TEST_CASE("fiber classification") {
  SphericalPair g2 = SphericalPair::g2_spin7();
  REQUIRE(g2.fibers().size() == 2);
  CHECK(g2.delta2() == std::vector<int>{0});
  CHECK(g2.delta1() == std::vector<int>{1});
  CHECK(g2.fibers()[0].amb_roots == std::vector<int>{0, 2});
  CHECK(g2.fibers()[1].amb_roots == std::vector<int>{1});

  SphericalPair diag = SphericalPair::by_name("diag:A1");
  CHECK(diag.delta1().empty());
  CHECK(diag.delta2() == std::vector<int>{0});
  CHECK(diag.fibers()[0].amb_roots == std::vector<int>{0, 1});

  SphericalPair c3 = SphericalPair::by_name("diag:C3");
  CHECK(c3.delta2().size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(c3.fibers()[static_cast<size_t>(i)].amb_roots == std::vector<int>{i, i + 3});
  }
}

TEST_CASE("weyl embedding substitutes fibers letter-wise") {
  SphericalPair p = SphericalPair::g2_spin7();
  CHECK(p.embed_weyl({}).empty());
  CHECK(p.embed_weyl({0}) == WeylWord{0, 2});
  CHECK(p.embed_weyl({1}) == WeylWord{1});
  CHECK(p.embed_weyl({0, 1}) == WeylWord{0, 2, 1});
}

TEST_CASE("restriction intertwines embedded Weyl words") {
  std::mt19937_64 rng(23);
  for (const auto& name : SphericalPair::builtin_names()) {
    SphericalPair p = SphericalPair::by_name(name);
    std::uniform_int_distribution<int> sub_letter(0, p.sub().ss_rank() - 1);
    std::uniform_int_distribution<int> len(0, 6);
    for (int trial = 0; trial < 10; ++trial) {
      WeylWord u(static_cast<size_t>(len(rng)));
      for (auto& l : u) l = sub_letter(rng);
      WeylWord embedded = p.embed_weyl(u);
      for (int j = 0; j < p.amb().rank(); ++j) {
        Vec chi = Vec::Zero(p.amb().rank());
        chi[j] = 1;
        CHECK(p.restrict_weight(p.amb().apply_word(chi, embedded)) ==
              p.sub().apply_word(p.restrict_weight(chi), u));
      }
    }
  }
}

TEST_CASE("delta2 coroot relation as a pairing identity") {
  for (const auto& name : SphericalPair::builtin_names()) {
    SphericalPair p = SphericalPair::by_name(name);
    for (int alpha : p.delta2()) {
      const auto& fiber = p.fibers()[static_cast<size_t>(alpha)];
      for (int j = 0; j < p.amb().rank(); ++j) {
        Vec chi = Vec::Zero(p.amb().rank());
        chi[j] = 1;
        CHECK(p.restrict_weight(chi)[alpha] == chi[fiber.amb_roots[0]] + chi[fiber.amb_roots[1]]);
      }
    }
  }
}

TEST_CASE("classification is a partition of the ambient simple roots") {
  for (const auto& name : SphericalPair::builtin_names()) {
    SphericalPair p = SphericalPair::by_name(name);
    std::vector<int> hits(static_cast<size_t>(p.amb().ss_rank()), 0);
    for (const auto& f : p.fibers())
      for (int j : f.amb_roots) ++hits[static_cast<size_t>(j)];
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("built-in pairs pass validation") {
  for (const auto& name : SphericalPair::builtin_names()) {
    SphericalPair p = SphericalPair::by_name(name);
    ValidationReport report = p.validate();
    for (const auto& check : report.checks) {
      INFO(name, ": ", check.name, " ", check.detail);
      CHECK(check.passed);
    }
  }
}

TEST_CASE("corrupted restriction matrix fails validation") {
  // Swap the first two columns of the g2-spin7 rho.
  Mat rho(2, 3);
  rho << 0, 1, 1,
         1, 0, 0;
  SphericalPair bad = SphericalPair::from_data_unchecked("bad", GroupType::parse("G2"),
                                                         GroupType::parse("B3"), rho);
  CHECK_FALSE(bad.validate().all_passed());
  CHECK_THROWS_AS(SphericalPair::from_data("bad", GroupType::parse("G2"), GroupType::parse("B3"),
                                           rho),
                  Error);

  // A rho that classifies but breaks the Delta_2 structure: collapse the
  // diagonal A1xA1 pair onto one factor twice.
  Mat rho2(2, 4);
  rho2 << 1, 1, 0, 0,
          0, 0, 1, 1;
  SphericalPair diag_ok = SphericalPair::from_data_unchecked(
      "ok", GroupType::parse("A1xA1"), GroupType::parse("A1xA1xA1xA1"), rho2);
  CHECK(diag_ok.validate().all_passed());
  Mat rho3(2, 4);
  rho3 << 1, 1, 1, 0,
          0, 0, 0, 1;
  SphericalPair bad3 = SphericalPair::from_data_unchecked(
      "bad3", GroupType::parse("A1xA1"), GroupType::parse("A1xA1xA1xA1"), rho3);
  CHECK_FALSE(bad3.validate().all_passed());
}

TEST_CASE("pair documents load and round-trip against built-ins") {
  const std::string doc = R"({
    "name": "g2-spin7-file",
    "sub_type": "G2",
    "amb_type": "B3",
    "rho": [[1, 0, 1], [0, 1, 0]]
  })";
  SphericalPair loaded = SphericalPair::from_json_text(doc);
  SphericalPair builtin = SphericalPair::g2_spin7();
  CHECK(loaded.rho() == builtin.rho());
  CHECK(loaded.delta1() == builtin.delta1());
  CHECK(loaded.delta2() == builtin.delta2());
  CHECK(loaded.sub().signature() == builtin.sub().signature());

  CHECK_THROWS_AS(SphericalPair::from_json_text("{"), Error);
  CHECK_THROWS_AS(SphericalPair::from_json_text(R"({"sub_type": "G2"})"), Error);
  CHECK_THROWS_AS(SphericalPair::from_json_text(R"({
    "sub_type": "G2", "amb_type": "B3", "rho": [[1, 0], [0, 1]]
  })"),
                  Error);
  // Non-simple image of an ambient simple root.
  try {
    SphericalPair::from_json_text(R"({
      "sub_type": "G2", "amb_type": "B3", "rho": [[1, 1, 1], [0, 1, 0]]
    })");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPair);
  }
}

TEST_CASE("by_name rejects unknown pairs") {
  CHECK_THROWS_AS(SphericalPair::by_name("diag:E8"), Error);
  CHECK_THROWS_AS(SphericalPair::by_name("nonsense"), Error);
}
