#include "oligo/partial_auto.hpp"

#include <algorithm>

#include "oligo/errors.hpp"

namespace oligo {

PartialAuto PartialAuto::from_pairs(std::vector<ElementPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) {
      fail(errc::not_a_function, "two images for one domain element");
    }
  }
  std::vector<Element> imgs;
  imgs.reserve(pairs.size());
  for (const auto& [x, y] : pairs) imgs.push_back(y);
  std::sort(imgs.begin(), imgs.end());
  if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end()) {
    fail(errc::non_injective, "repeated image element");
  }
  PartialAuto out;
  out.pairs_ = std::move(pairs);
  out.rebuild_cache();
  return out;
}

void PartialAuto::rebuild_cache() {
  domain_.clear();
  images_.clear();
  domain_.reserve(pairs_.size());
  images_.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) {
    domain_.push_back(x);
    images_.push_back(y);
  }
}

std::optional<Element> PartialAuto::apply(Element x) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), x,
      [](const ElementPair& p, Element v) { return p.first < v; });
  if (it != pairs_.end() && it->first == x) return it->second;
  return std::nullopt;
}

std::optional<Element> PartialAuto::preimage(Element y) const {
  for (const auto& [x, img] : pairs_) {
    if (img == y) return x;
  }
  return std::nullopt;
}

bool PartialAuto::has_pair(Element x, Element y) const {
  auto img = apply(x);
  return img && *img == y;
}

PartialAuto PartialAuto::with_pair(Element x, Element y) const {
  std::vector<ElementPair> next = pairs_;
  next.emplace_back(x, y);
  return from_pairs(std::move(next));
}

PartialAuto PartialAuto::restrict_to(const FiniteSet& dom) const {
  std::vector<ElementPair> kept;
  for (const auto& p : pairs_) {
    if (dom.contains(p.first)) kept.push_back(p);
  }
  PartialAuto out;
  out.pairs_ = std::move(kept);
  out.rebuild_cache();
  return out;
}

bool extends(const PartialAuto& g, const PartialAuto& s) {
  return std::includes(g.pairs().begin(), g.pairs().end(), s.pairs().begin(),
                       s.pairs().end());
}

PartialAuto compose(const PartialAuto& u, const PartialAuto& v) {
  std::vector<ElementPair> out;
  for (const auto& [x, mid] : v.pairs()) {
    if (auto y = u.apply(mid)) out.emplace_back(x, *y);
  }
  // v's pairs are sorted by domain, so the result already is.
  return PartialAuto::from_pairs(std::move(out));
}

PartialAuto inverse(const PartialAuto& u) {
  std::vector<ElementPair> out;
  out.reserve(u.size());
  for (const auto& [x, y] : u.pairs()) out.emplace_back(y, x);
  return PartialAuto::from_pairs(std::move(out));
}

PartialAuto identity_on(const FiniteSet& a) {
  std::vector<ElementPair> out;
  out.reserve(a.size());
  for (Element e : a) out.emplace_back(e, e);
  return PartialAuto::from_pairs(std::move(out));
}

}  // namespace oligo
