#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oligo/closure.hpp"
#include "oligo/errors.hpp"
#include "oligo/partials.hpp"
#include "test_util.hpp"

using namespace oligo;
using namespace oligo::testutil;

namespace {

// Exhaustive pattern oracle: every total map from the union of the constraint
// domains into the first `n` elements, filtered down to partial isomorphisms.
std::set<std::uint32_t> oracle_patterns(const Structure& s,
                                        const std::vector<PartialAuto>& family,
                                        std::uint64_t n) {
  FiniteSet dom_set;
  for (const auto& f : family) dom_set = dom_set.union_with(f.domain_set());
  const Tuple dom = dom_set.elems();
  std::set<std::uint32_t> out;
  std::vector<std::uint64_t> choice(dom.size(), 0);
  while (true) {
    std::vector<ElementPair> pairs;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      pairs.emplace_back(dom[i], Element{choice[i]});
    }
    bool valid = true;
    PartialAuto w;
    try {
      w = PartialAuto::from_pairs(pairs);
      valid = s.is_partial_iso(w);
    } catch (const error&) {
      valid = false;
    }
    if (valid) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (extends(w, family[i])) mask |= 1u << i;
      }
      out.insert(mask);
    }
    // advance the odometer
    std::size_t pos = 0;
    while (pos < choice.size()) {
      if (++choice[pos] < n) break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("join follows the product rule") {
  auto ps = make(StructureKind::pure_set);
  auto j = join(*ps, pmap(*ps, {{"1", "2"}}), pmap(*ps, {{"3", "4"}}));
  REQUIRE(j.has_value());
  CHECK(*j == pmap(*ps, {{"1", "2"}, {"3", "4"}}));

  CHECK_FALSE(join(*ps, pmap(*ps, {{"1", "2"}}), pmap(*ps, {{"1", "3"}})).has_value());

  auto dlo = make(StructureKind::dlo);
  CHECK_FALSE(join(*dlo, pmap(*dlo, {{"0", "0"}}), pmap(*dlo, {{"1", "-1"}})).has_value());
  // Union injectivity failure is Incompatible, not an error.
  CHECK_FALSE(join(*ps, pmap(*ps, {{"1", "5"}}), pmap(*ps, {{"2", "5"}})).has_value());
}

TEST_CASE("compose, inverse, extends basics") {
  auto ps = make(StructureKind::pure_set);
  CHECK(compose(pmap(*ps, {{"1", "2"}}), pmap(*ps, {{"3", "1"}})) ==
        pmap(*ps, {{"3", "2"}}));
  CHECK(compose(pmap(*ps, {{"1", "2"}}), PartialAuto{}) == PartialAuto{});
  CHECK(compose(pmap(*ps, {{"1", "2"}}), pmap(*ps, {{"1", "3"}})) == PartialAuto{});

  CHECK(inverse(pmap(*ps, {{"1", "2"}})) == pmap(*ps, {{"2", "1"}}));
  CHECK(inverse(PartialAuto{}) == PartialAuto{});
  CHECK(inverse(pmap(*ps, {{"1", "2"}, {"3", "4"}})) ==
        pmap(*ps, {{"2", "1"}, {"4", "3"}}));

  CHECK(extends(pmap(*ps, {{"1", "2"}, {"3", "4"}}), pmap(*ps, {{"1", "2"}})));
  CHECK_FALSE(extends(pmap(*ps, {{"1", "2"}}), pmap(*ps, {{"1", "3"}})));
  CHECK(extends(pmap(*ps, {{"7", "9"}}), PartialAuto{}));
}

TEST_CASE("monoid laws on random samples") {
  std::mt19937_64 rng(7);
  for (auto kind : {StructureKind::pure_set, StructureKind::dlo,
                    StructureKind::rado, StructureKind::vector_space}) {
    auto s = make(kind, 2);
    for (int it = 0; it < 60; ++it) {
      PartialAuto u = random_iso(*s, rng, 9, 3);
      PartialAuto v = random_iso(*s, rng, 9, 3);
      PartialAuto w = random_iso(*s, rng, 9, 3);
      CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
      CHECK(inverse(inverse(u)) == u);
      CHECK(inverse(compose(u, v)) == compose(inverse(v), inverse(u)));
      // id acts as restriction on either side
      CHECK(compose(u, identity_on(u.domain_set())) == u);
      CHECK(compose(identity_on(u.image_set()), u) == u);
      CHECK(s->is_partial_iso(compose(u, v)));
    }
  }
}

TEST_CASE("selective_extension spec instances") {
  auto ps = make(StructureKind::pure_set);
  {
    PartialAuto u = pmap(*ps, {{"1", "1"}});
    std::vector<PartialAuto> cons = {pmap(*ps, {{"2", "3"}})};
    PartialAuto w = selective_extension(*ps, u, cons);
    CHECK(extends(w, u));
    CHECK(w.defined_on(el(*ps, "2")));
    CHECK(w.apply(el(*ps, "2")) != el(*ps, "3"));
    CHECK(w.apply(el(*ps, "2")) == el(*ps, "0"));
  }
  {
    std::vector<PartialAuto> cons = {pmap(*ps, {{"1", "2"}})};
    PartialAuto w = selective_extension(*ps, PartialAuto{}, cons);
    CHECK(w.size() == 1);
    CHECK(w.apply(el(*ps, "1")) != el(*ps, "2"));
  }
  {
    PartialAuto u = pmap(*ps, {{"1", "1"}});
    std::vector<PartialAuto> cons = {u};
    CHECK(selective_extension(*ps, u, cons) == u);
  }
  // Precondition: dom(u) must be algebraically closed.
  auto vs = make(StructureKind::vector_space, 2);
  CHECK_THROWS_AS(
      (void)selective_extension(*vs, pmap(*vs, {{"[1]", "[1]"}}), {}), error);
}

TEST_CASE("selective_extension postcondition on random inputs") {
  std::mt19937_64 rng(20240);
  for (auto kind : {StructureKind::pure_set, StructureKind::dlo,
                    StructureKind::rado, StructureKind::vector_space}) {
    auto s = make(kind, 2);
    for (int it = 0; it < 50; ++it) {
      PartialAuto u = forced_extension(*s, random_iso(*s, rng, 8, 2));
      std::vector<PartialAuto> cons;
      const int k = static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) cons.push_back(random_iso(*s, rng, 8, 2));
      PartialAuto w = selective_extension(*s, u, cons);
      CHECK(extends(w, u));
      CHECK(s->is_partial_iso(w));
      FiniteSet want_dom = u.domain_set();
      for (const auto& c : cons) want_dom = want_dom.union_with(c.domain_set());
      CHECK(w.domain_set() == want_dom);
      for (const auto& c : cons) {
        CHECK(extends(w, c) == extends(u, c));
      }
    }
  }
}

TEST_CASE("realizable_patterns spec instances") {
  auto ps = make(StructureKind::pure_set);
  {
    std::vector<PartialAuto> fam = {pmap(*ps, {{"1", "2"}}), pmap(*ps, {{"1", "3"}})};
    auto got = realizable_patterns(*ps, fam);
    CHECK(got == std::set<std::uint32_t>{0b00, 0b01, 0b10});
  }
  {
    std::vector<PartialAuto> fam = {pmap(*ps, {{"1", "2"}}), pmap(*ps, {{"3", "4"}})};
    auto got = realizable_patterns(*ps, fam);
    CHECK(got == std::set<std::uint32_t>{0b00, 0b01, 0b10, 0b11});
  }
  CHECK(realizable_patterns(*ps, {}) == std::set<std::uint32_t>{0});
  {
    std::vector<PartialAuto> fam(13, PartialAuto{});
    CHECK_THROWS_AS((void)realizable_patterns(*ps, fam), error);
  }
}

TEST_CASE("realizable_patterns agrees with the exhaustive oracle") {
  std::mt19937_64 rng(5150);
  for (auto kind : {StructureKind::pure_set, StructureKind::dlo,
                    StructureKind::rado, StructureKind::vector_space}) {
    auto s = make(kind, 2);
    for (int it = 0; it < 25; ++it) {
      std::vector<PartialAuto> fam;
      const int n = 1 + static_cast<int>(rng() % 3);
      FiniteSet dom_set;
      for (int i = 0; i < n; ++i) {
        PartialAuto f = random_iso(*s, rng, 5, 2);
        FiniteSet grown = dom_set.union_with(f.domain_set());
        if (grown.size() > 3) continue;  // keep the oracle window sound
        dom_set = grown;
        fam.push_back(f);
      }
      if (fam.empty()) continue;
      auto fast = realizable_patterns(*s, fam);
      auto slow = oracle_patterns(*s, fam, 32);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("join compatibility matches the joint pattern") {
  std::mt19937_64 rng(31337);
  for (auto kind : {StructureKind::pure_set, StructureKind::dlo,
                    StructureKind::rado, StructureKind::vector_space}) {
    auto s = make(kind, 2);
    for (int it = 0; it < 60; ++it) {
      PartialAuto a = random_iso(*s, rng, 7, 2);
      PartialAuto b = random_iso(*s, rng, 7, 2);
      const std::vector<PartialAuto> fam = {a, b};
      const bool joint = realizable_patterns(*s, fam).contains(0b11);
      CHECK(join(*s, a, b).has_value() == joint);
    }
  }
}

TEST_CASE("make_partial_auto rejects non-isomorphisms") {
  auto dlo = make(StructureKind::dlo);
  CHECK_THROWS_AS(
      (void)make_partial_auto(*dlo, {{el(*dlo, "0"), el(*dlo, "0")},
                                     {el(*dlo, "1"), el(*dlo, "-1")}}),
      error);
  CHECK_NOTHROW((void)make_partial_auto(
      *dlo, {{el(*dlo, "0"), el(*dlo, "0")}, {el(*dlo, "1"), el(*dlo, "2")}}));
}
