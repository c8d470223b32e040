#include "oligo/partials.hpp"

#include <algorithm>

#include "oligo/closure.hpp"
#include "oligo/errors.hpp"

namespace oligo {

PartialAuto make_partial_auto(const Structure& s,
                              std::vector<ElementPair> pairs) {
  PartialAuto m = PartialAuto::from_pairs(std::move(pairs));
  if (!s.is_partial_iso(m)) {
    fail(errc::not_partial_iso, "map does not preserve quantifier-free types");
  }
  return m;
}

std::optional<PartialAuto> join(const Structure& s, const PartialAuto& a,
                                const PartialAuto& b) {
  std::vector<ElementPair> merged = a.pairs();
  for (const auto& p : b.pairs()) {
    if (auto y = a.apply(p.first)) {
      if (*y != p.second) return std::nullopt;
      continue;
    }
    merged.push_back(p);
  }
  try {
    PartialAuto m = PartialAuto::from_pairs(std::move(merged));
    if (!s.is_partial_iso(m)) return std::nullopt;
    return m;
  } catch (const error&) {
    return std::nullopt;  // the pair union is not injective
  }
}

namespace {

// Extends w0 so that every map in `avoid` stays non-extended, while covering
// all required points. Returns nullopt exactly when some avoid-map is forced,
// i.e. already contained in the closure of w0.
//
// Free points take a generic image: outside the hull of every avoid value
// (for vector spaces, outside its span). Forced points take their unique
// image; genericity of the earlier free choices keeps those forced values off
// the avoid lists, so the avoidance lemma's witness is reached greedily.
std::optional<PartialAuto> build_witness(const Structure& s,
                                         const PartialAuto& w0,
                                         const FiniteSet& required,
                                         std::span<const PartialAuto> avoid) {
  PartialAuto w = forced_extension(s, w0);
  for (const PartialAuto& t : avoid) {
    if (extends(w, t)) return std::nullopt;
  }
  std::vector<const PartialAuto*> live;
  for (const PartialAuto& t : avoid) {
    if (!t.domain_set().subset_of(w.domain_set())) live.push_back(&t);
  }
  std::vector<Element> hull = w.images();
  for (const PartialAuto* t : live) {
    hull.insert(hull.end(), t->images().begin(), t->images().end());
  }
  FiniteSet points = required;
  for (const PartialAuto* t : live) {
    points = points.union_with(t->domain_set());
  }
  for (Element x : points) {
    if (w.defined_on(x)) continue;
    Tuple dom = w.domain();
    dom.push_back(x);
    const Realizations r = s.realizations(w.images(), s.tuple_type(dom));
    Element y;
    if (r.finite) {
      if (r.elems.size() != 1) {
        fail(errc::internal, "algebraic image not forced");
      }
      y = r.elems[0];
    } else {
      y = s.generic_image(w, x, hull);
    }
    w = w.with_pair(x, y);
  }
  for (const PartialAuto& t : avoid) {
    if (extends(w, t)) {
      fail(errc::internal, "avoidance witness construction failed");
    }
  }
  return w;
}

}  // namespace

PartialAuto selective_extension(const Structure& s, const PartialAuto& u,
                                std::span<const PartialAuto> constraints) {
  if (!is_acl_closed(s, u.domain_set())) {
    fail(errc::precondition, "dom(u) must be algebraically closed");
  }
  FiniteSet required = u.domain_set();
  std::vector<PartialAuto> avoid;
  for (const PartialAuto& c : constraints) {
    required = required.union_with(c.domain_set());
    if (!extends(u, c)) avoid.push_back(c);
  }
  auto w = build_witness(s, u, required, avoid);
  if (!w) {
    // Unreachable when dom(u) is closed: a non-extended constraint inside
    // dom(u) already conflicts pointwise.
    fail(errc::internal, "selective extension does not exist");
  }
  return *w;
}

std::set<std::uint32_t> realizable_patterns(const Structure& s,
                                            std::span<const PartialAuto> family,
                                            std::size_t limit) {
  const std::size_t n = family.size();
  if (n > limit) {
    fail(errc::limit_exceeded, "family larger than the pattern limit");
  }
  std::set<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    // A pattern is realizable iff the selected maps join into one partial
    // isomorphism whose forced closure extends none of the rejected maps:
    // rejected maps inside the closure conflict pointwise, and the rest are
    // avoidable because their domains stick out of the closed set.
    std::optional<PartialAuto> w = PartialAuto{};
    for (std::size_t i = 0; i < n && w; ++i) {
      if ((mask >> i) & 1u) w = join(s, *w, family[i]);
    }
    if (!w) continue;
    const PartialAuto wbar = forced_extension(s, *w);
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) continue;
      if (extends(wbar, family[j])) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(mask);
  }
  return out;
}

bool function_equal(const Structure& s, const PartialAuto& a,
                    const PartialAuto& b) {
  const PartialAuto family[] = {a, b};
  for (std::uint32_t mask : realizable_patterns(s, family)) {
    if (mask == 0b01 || mask == 0b10) return false;
  }
  return true;
}

}  // namespace oligo
