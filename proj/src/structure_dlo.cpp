#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "oligo/errors.hpp"
#include "oligo/structure.hpp"
#include "structures.hpp"

namespace oligo::detail {
namespace {

// Reduced fraction p/q with q >= 1.
struct Frac {
  long long p = 0;
  long long q = 1;
};

Frac reduced(long long p, long long q) {
  if (q == 0) fail(errc::unknown_element_literal, "zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (p == 0) q = 1;
  return {p, q};
}

bool value_less(const Frac& a, const Frac& b) {
  return static_cast<__int128>(a.p) * b.q < static_cast<__int128>(b.p) * a.q;
}

bool value_eq(const Frac& a, const Frac& b) { return a.p == b.p && a.q == b.q; }

long long height(const Frac& f) { return (f.p < 0 ? -f.p : f.p) + f.q; }

// The rationals in (Q, <), enumerated by ascending height |p| + q and, within
// a height, by ascending (q, p). Index 0 is 0/1.
class DloStructure final : public Structure {
 public:
  explicit DloStructure(StructureConfig cfg) : Structure(cfg) {}

  static Frac decode(Element e) {
    if (e.idx == 0) return {0, 1};
    std::uint64_t left = e.idx - 1;
    for (long long h = 2;; ++h) {
      for (long long qd = 1; qd < h; ++qd) {
        const long long pd = h - qd;
        if (std::gcd(pd, qd) != 1) continue;
        if (left == 0) return {-pd, qd};
        --left;
        if (left == 0) return {pd, qd};
        --left;
      }
    }
  }

  static Element encode(const Frac& f) {
    if (f.p == 0) return Element{0};
    const long long h = height(f);
    std::uint64_t idx = 1;
    for (long long hh = 2; hh < h; ++hh) {
      for (long long qd = 1; qd < hh; ++qd) {
        if (std::gcd(hh - qd, qd) == 1) idx += 2;
      }
    }
    for (long long qd = 1; qd < f.q; ++qd) {
      if (std::gcd(h - qd, qd) == 1) idx += 2;
    }
    return Element{f.p < 0 ? idx : idx + 1};
  }

  std::string element_literal(Element e) const override {
    const Frac f = decode(e);
    if (f.q == 1) return std::to_string(f.p);
    return std::to_string(f.p) + "/" + std::to_string(f.q);
  }

  Element parse_element(std::string_view text) const override {
    bool neg = false;
    std::string_view s = text;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    long long p = 0, q = 1;
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || ptr != num.data() + num.size() || num.empty()) {
      fail(errc::unknown_element_literal, "bad rational: " + std::string(text));
    }
    if (slash != std::string_view::npos) {
      const std::string_view den = s.substr(slash + 1);
      auto [ptr2, ec2] = std::from_chars(den.data(), den.data() + den.size(), q);
      if (ec2 != std::errc() || ptr2 != den.data() + den.size() || den.empty() || q == 0) {
        fail(errc::unknown_element_literal, "bad rational: " + std::string(text));
      }
    }
    return encode(reduced(neg ? -p : p, q));
  }

  TypeCode tuple_type(std::span<const Element> t) const override {
    std::vector<Frac> vals;
    vals.reserve(t.size());
    for (Element e : t) vals.push_back(decode(e));
    std::vector<Frac> distinct = vals;
    std::sort(distinct.begin(), distinct.end(), value_less);
    distinct.erase(std::unique(distinct.begin(), distinct.end(), value_eq),
                   distinct.end());
    std::string repr = "L|";
    for (const Frac& v : vals) {
      const auto it = std::lower_bound(distinct.begin(), distinct.end(), v,
                                       value_less);
      repr += std::to_string(it - distinct.begin());
      repr += ',';
    }
    return TypeCode{std::move(repr)};
  }

  Realizations realizations(std::span<const Element> anchor,
                            const TypeCode& target) const override {
    Tuple probe(anchor.begin(), anchor.end());
    probe.push_back(Element{0});
    std::vector<Element> matches;
    for (Element a : anchor) {
      probe.back() = a;
      if (tuple_type(probe) == target) matches.push_back(a);
    }
    if (!matches.empty()) {
      std::sort(matches.begin(), matches.end());
      matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
      return {true, std::move(matches)};
    }
    for (Element c : cell_candidates(anchor)) {
      probe.back() = c;
      if (tuple_type(probe) == target) return {false, {}};
    }
    fail(errc::unrealizable_code, "no rational satisfies the code");
  }

  std::vector<Element> acl(std::span<const Element> a) const override {
    std::vector<Element> out(a.begin(), a.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Element> type_candidates(
      std::span<const Element> context) const override {
    std::vector<Element> out(context.begin(), context.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (Element c : cell_candidates(context)) out.push_back(c);
    return out;
  }

 protected:
  std::uint64_t infinite_scan_limit(std::span<const Element> anchor,
                                    const TypeCode&,
                                    std::size_t forbidden_count) const override {
    long long h = 1;
    for (Element a : anchor) h = std::max(h, height(decode(a)));
    const std::uint64_t hstar =
        (static_cast<std::uint64_t>(forbidden_count) + 2) *
        (2 * static_cast<std::uint64_t>(h) + 4);
    // Every rational of height <= hstar appears before index hstar^2 + hstar.
    return hstar * hstar + hstar + 8;
  }

 private:
  // One representative per open cell cut out by the context values: below the
  // minimum, the mediant of each adjacent pair, and above the maximum. The
  // mediant of a/b and c/d lies strictly between them, so every cell is hit.
  static std::vector<Element> cell_candidates(std::span<const Element> context) {
    std::vector<Frac> vals;
    vals.reserve(context.size());
    for (Element e : context) vals.push_back(decode(e));
    std::sort(vals.begin(), vals.end(), value_less);
    vals.erase(std::unique(vals.begin(), vals.end(), value_eq), vals.end());
    std::vector<Element> out;
    if (vals.empty()) {
      out.push_back(Element{0});
      return out;
    }
    out.push_back(encode(reduced(vals.front().p - vals.front().q, vals.front().q)));
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
      out.push_back(encode(
          reduced(vals[i].p + vals[i + 1].p, vals[i].q + vals[i + 1].q)));
    }
    out.push_back(encode(reduced(vals.back().p + vals.back().q, vals.back().q)));
    return out;
  }
};

}  // namespace

std::unique_ptr<const Structure> make_dlo(const StructureConfig& cfg) {
  return std::make_unique<DloStructure>(cfg);
}

}  // namespace oligo::detail
