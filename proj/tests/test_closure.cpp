#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oligo/closure.hpp"
#include "oligo/errors.hpp"
#include "test_util.hpp"

using namespace oligo;
using namespace oligo::testutil;

TEST_CASE("acl spec instances") {
  auto vs = make(StructureKind::vector_space, 2);
  CHECK(acl(*vs, fset(*vs, {"[1]", "[0,1]"})) ==
        fset(*vs, {"[]", "[1]", "[0,1]", "[1,1]"}));
  CHECK(acl(*vs, FiniteSet{}) == fset(*vs, {"[]"}));

  auto ps = make(StructureKind::pure_set);
  CHECK(acl(*ps, fset(*ps, {"5"})) == fset(*ps, {"5"}));
}

TEST_CASE("acl_generic agrees with acl under covering bounds") {
  auto ps = make(StructureKind::pure_set);
  CHECK(acl_generic(*ps, fset(*ps, {"1"}), 10) == fset(*ps, {"1"}));

  auto dlo = make(StructureKind::dlo);
  CHECK(acl_generic(*dlo, fset(*dlo, {"0", "1"}), 12) == fset(*dlo, {"0", "1"}));

  auto vs = make(StructureKind::vector_space, 2);
  CHECK(acl_generic(*vs, fset(*vs, {"[1]"}), 4) == fset(*vs, {"[]", "[1]"}));
  // A bound that cuts the span truncates the estimate accordingly.
  CHECK(acl_generic(*vs, fset(*vs, {"[1]", "[0,1]"}), 3) ==
        fset(*vs, {"[]", "[1]", "[0,1]"}));
  CHECK_THROWS_AS((void)acl_generic(*vs, fset(*vs, {"[0,1]"}), 2), error);
}

TEST_CASE("acl vs acl_generic on random sets") {
  std::mt19937_64 rng(88);
  for (auto kind : {StructureKind::pure_set, StructureKind::dlo,
                    StructureKind::rado, StructureKind::vector_space}) {
    auto s = make(kind, 2);
    for (int it = 0; it < 40; ++it) {
      std::vector<Element> elems;
      const int k = static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) elems.push_back(Element{rng() % 6});
      FiniteSet a(std::move(elems));
      FiniteSet cl = acl(*s, a);
      std::uint64_t bound = 8;
      for (Element e : cl) bound = std::max(bound, e.idx + 1);
      CHECK(acl_generic(*s, a, bound) == cl);
    }
  }
}

TEST_CASE("closure axioms hold") {
  std::mt19937_64 rng(1899);
  for (auto kind : {StructureKind::pure_set, StructureKind::dlo,
                    StructureKind::rado, StructureKind::vector_space}) {
    auto s = make(kind, 3);
    for (int it = 0; it < 40; ++it) {
      std::vector<Element> ea, eb;
      for (int i = static_cast<int>(rng() % 4); i > 0; --i) ea.push_back(Element{rng() % 6});
      FiniteSet a(ea);
      FiniteSet b = a.union_with(FiniteSet({Element{rng() % 6}}));
      FiniteSet ca = acl(*s, a);
      CHECK(a.subset_of(ca));                    // extensive
      CHECK(ca.subset_of(acl(*s, b)));           // monotone
      CHECK(acl(*s, ca) == ca);                  // idempotent
      CHECK(is_acl_closed(*s, ca));
    }
  }
}

TEST_CASE("is_acl_closed spec instances") {
  auto vs = make(StructureKind::vector_space, 2);
  CHECK_FALSE(is_acl_closed(*vs, fset(*vs, {"[1]"})));
  CHECK(is_acl_closed(*vs, fset(*vs, {"[]", "[1]"})));
  auto rado = make(StructureKind::rado);
  CHECK(is_acl_closed(*rado, fset(*rado, {"0", "3", "11"})));
}

TEST_CASE("relative_index dichotomy") {
  auto ps = make(StructureKind::pure_set);
  {
    auto r = relative_index(*ps, fset(*ps, {"1"}), fset(*ps, {"2"}));
    CHECK_FALSE(r.finite);
  }
  auto vs3 = make(StructureKind::vector_space, 3);
  {
    // 2*e0 lies in the span of e0, with image forced by linearity.
    auto r = relative_index(*vs3, fset(*vs3, {"[1]"}), fset(*vs3, {"[2]"}));
    REQUIRE(r.finite);
    CHECK(r.count == 1);
  }
  {
    auto r = relative_index(*ps, fset(*ps, {"1", "2"}), fset(*ps, {"2"}));
    REQUIRE(r.finite);
    CHECK(r.count == 1);
  }
}

TEST_CASE("relative_index finiteness iff containment in acl") {
  std::mt19937_64 rng(4711);
  for (auto kind : {StructureKind::pure_set, StructureKind::dlo,
                    StructureKind::rado, StructureKind::vector_space}) {
    auto s = make(kind, 2);
    for (int it = 0; it < 40; ++it) {
      std::vector<Element> ea, eb;
      for (int i = static_cast<int>(rng() % 3); i > 0; --i) ea.push_back(Element{rng() % 5});
      for (int i = static_cast<int>(rng() % 3); i > 0; --i) eb.push_back(Element{rng() % 5});
      FiniteSet a(ea), b(eb);
      auto r = relative_index(*s, a, b);
      CHECK(r.finite == b.subset_of(acl(*s, a)));
      if (r.finite) CHECK(r.count >= 1);
    }
  }
}

TEST_CASE("forced_extension and image closure") {
  auto vs = make(StructureKind::vector_space, 2);
  {
    PartialAuto u = pmap(*vs, {{"[1]", "[0,1]"}});
    PartialAuto w = forced_extension(*vs, u);
    CHECK(w ==
          pmap(*vs, {{"[]", "[]"}, {"[1]", "[0,1]"}}));
  }
  {
    // Forced image of a span point: e0+e1 must go to the image sum.
    PartialAuto u = pmap(*vs, {{"[1]", "[0,1]"}, {"[0,1]", "[1,1]"}});
    PartialAuto w = forced_extension(*vs, u);
    CHECK(w.apply(el(*vs, "[1,1]")) == el(*vs, "[1]"));  // e0+e1 -> e1+(e0+e1)
    CHECK(w.size() == 4);
  }
  std::mt19937_64 rng(5);
  for (auto kind : {StructureKind::pure_set, StructureKind::dlo,
                    StructureKind::rado, StructureKind::vector_space}) {
    auto s = make(kind, 2);
    for (int it = 0; it < 40; ++it) {
      PartialAuto u = forced_extension(*s, random_iso(*s, rng, 8, 3));
      CHECK(is_acl_closed(*s, u.domain_set()));
      CHECK(is_acl_closed(*s, u.image_set()));
      CHECK(s->is_partial_iso(u));
    }
  }
}
