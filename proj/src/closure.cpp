#include "oligo/closure.hpp"

#include <algorithm>

#include "oligo/errors.hpp"

namespace oligo {

FiniteSet acl(const Structure& s, const FiniteSet& a) {
  return FiniteSet(s.acl(a.elems()));
}

FiniteSet acl_generic(const Structure& s, const FiniteSet& a,
                      std::uint64_t bound) {
  for (Element e : a) {
    if (e.idx >= bound) {
      fail(errc::precondition, "bound must cover every element of A");
    }
  }
  const Tuple& anchor = a.elems();
  std::vector<Element> out;
  Tuple probe = anchor;
  probe.push_back(Element{0});
  for (std::uint64_t i = 0; i < bound; ++i) {
    probe.back() = Element{i};
    const TypeCode code = s.tuple_type(probe);
    if (s.realizations(anchor, code).finite) out.push_back(Element{i});
  }
  return FiniteSet(std::move(out));
}

bool is_acl_closed(const Structure& s, const FiniteSet& a) {
  return acl(s, a) == a;
}

RelativeIndex relative_index(const Structure& s, const FiniteSet& a,
                             const FiniteSet& b) {
  if (!b.subset_of(acl(s, a))) return {false, 0};
  // Realize the joint type of (A, B) position by position; every step is
  // finite because each B-entry is algebraic over A.
  const Tuple& at = a.elems();
  const Tuple& bt = b.elems();
  std::vector<Tuple> partial = {at};
  Tuple target_tuple = at;
  for (Element bj : bt) {
    target_tuple.push_back(bj);
    const TypeCode code = s.tuple_type(target_tuple);
    std::vector<Tuple> next;
    for (const Tuple& p : partial) {
      const Realizations r = s.realizations(p, code);
      if (!r.finite) {
        fail(errc::internal, "algebraic point with an infinite class");
      }
      for (Element y : r.elems) {
        Tuple grown = p;
        grown.push_back(y);
        next.push_back(std::move(grown));
      }
    }
    partial = std::move(next);
  }
  return {true, partial.size()};
}

PartialAuto forced_extension(const Structure& s, const PartialAuto& u) {
  const FiniteSet closure = acl(s, u.domain_set());
  PartialAuto w = u;
  for (Element b : closure) {
    if (w.defined_on(b)) continue;
    Tuple dom = w.domain();
    dom.push_back(b);
    const Realizations r = s.realizations(w.images(), s.tuple_type(dom));
    if (!r.finite || r.elems.size() != 1) {
      fail(errc::internal, "image of an algebraic point is not forced");
    }
    w = w.with_pair(b, r.elems[0]);
  }
  return w;
}

}  // namespace oligo
