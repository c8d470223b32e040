#include <algorithm>
#include <charconv>
#include <string>

#include "oligo/errors.hpp"
#include "oligo/structure.hpp"
#include "structures.hpp"

namespace oligo::detail {
namespace {

constexpr std::uint64_t kMaxVertexBit = 61;

// The random graph in its BIT presentation: vertices are naturals, and for
// i < j, i ~ j iff bit i of j is 1. Extension witnesses are constructive:
// a vertex adjacent exactly to P within a set bounded by B is mask(P) + 2^m
// for any m > B.
class RadoStructure final : public Structure {
 public:
  explicit RadoStructure(StructureConfig cfg) : Structure(cfg) {}

  static bool adjacent(Element a, Element b) {
    if (a == b) return false;
    const std::uint64_t lo = std::min(a.idx, b.idx);
    const std::uint64_t hi = std::max(a.idx, b.idx);
    if (lo >= 64) return false;
    return (hi >> lo) & 1u;
  }

  std::string element_literal(Element e) const override {
    return std::to_string(e.idx);
  }

  Element parse_element(std::string_view text) const override {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail(errc::unknown_element_literal, "expected a natural: " + std::string(text));
    }
    return Element{v};
  }

  TypeCode tuple_type(std::span<const Element> t) const override {
    std::string repr = "R|";
    for (std::size_t j : eq_partition(t)) {
      repr += std::to_string(j);
      repr += ',';
    }
    repr += '|';
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        repr += adjacent(t[i], t[j]) ? '1' : '0';
      }
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
    // Fresh class: consistent iff the code is the anchor's own code extended
    // by one fresh position with some adjacency row. Checked symbolically so
    // that no witness has to be materialized here.
    if (tuple_type(anchor) == restrict_code(anchor.size(), target)) {
      return {false, {}};
    }
    fail(errc::unrealizable_code, "no vertex satisfies the code");
  }

  std::vector<Element> acl(std::span<const Element> a) const override {
    std::vector<Element> out(a.begin(), a.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // One candidate per 1-type over the context: every context vertex, plus for
  // each subset P of the distinct context vertices the constructive fresh
  // vertex mask(P) + 2^m with m above every context bit. Complete because a
  // fresh vertex is determined up to type by its adjacency pattern P.
  std::vector<Element> type_candidates(
      std::span<const Element> context) const override {
    std::vector<Element> distinct(context.begin(), context.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() > 12) {
      fail(errc::bound_exceeded, "rado candidate generator limited to 12 vertices");
    }
    std::vector<Element> out = distinct;
    const std::uint64_t hb = high_bit(context);
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << distinct.size());
         ++pick) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < distinct.size(); ++i) {
        if ((pick >> i) & 1u) {
          if (distinct[i].idx > kMaxVertexBit) {
            fail(errc::bound_exceeded, "rado vertex too large for a constructive witness");
          }
          mask |= std::uint64_t{1} << distinct[i].idx;
        }
      }
      out.push_back(Element{mask | (std::uint64_t{1} << hb)});
    }
    return out;
  }

 protected:
  std::uint64_t infinite_scan_limit(std::span<const Element> anchor,
                                    const TypeCode&,
                                    std::size_t forbidden_count) const override {
    const std::uint64_t hb = high_bit(anchor);
    const std::uint64_t shift =
        std::min<std::uint64_t>(63, hb + forbidden_count + 2);
    return std::uint64_t{1} << shift;
  }

  Element scan_infinite(std::span<const Element> anchor, const TypeCode& target,
                        const FiniteSet& forbidden) const override {
    const std::uint64_t budget = cfg_.bounds.search_cap;
    std::uint64_t attempts = 0;
    Tuple probe(anchor.begin(), anchor.end());
    probe.push_back(Element{0});
    std::uint64_t max_v = 0;
    for (Element a : anchor) max_v = std::max(max_v, a.idx);

    auto try_candidate = [&](std::uint64_t y) -> bool {
      if (attempts++ >= budget) {
        fail(errc::bound_exceeded, "search cap hit scanning the rado graph");
      }
      if (forbidden.contains(Element{y})) return false;
      probe.back() = Element{y};
      return tuple_type(probe) == target;
    };

    // Below the anchor the bit directions vary, so test literally.
    for (std::uint64_t y = 0; y <= max_v; ++y) {
      if (try_candidate(y)) return Element{y};
    }
    // Above the anchor, a witness has exactly the prescribed low bits; walk
    // them in numeric order by scattering a counter over the free positions.
    std::uint64_t mask = 0;
    if (!required_mask(anchor, target, &mask)) {
      fail(errc::internal, "rado scan on a tie code");
    }
    // Anchor vertices above the representable bit range cannot receive a set
    // bit in any 64-bit candidate, which already encodes non-adjacency; only
    // required adjacencies to them are out of reach (required_mask throws).
    std::vector<std::uint64_t> anchor_bits;
    for (Element a : anchor) {
      if (a.idx <= kMaxVertexBit) anchor_bits.push_back(a.idx);
    }
    std::sort(anchor_bits.begin(), anchor_bits.end());
    anchor_bits.erase(std::unique(anchor_bits.begin(), anchor_bits.end()),
                      anchor_bits.end());
    std::vector<std::uint64_t> free_bits;
    for (std::uint64_t b = 0; b <= 62 && free_bits.size() < 48; ++b) {
      if (!std::binary_search(anchor_bits.begin(), anchor_bits.end(), b)) {
        free_bits.push_back(b);
      }
    }
    for (std::uint64_t k = 0;; ++k) {
      std::uint64_t y = mask;
      for (std::size_t i = 0; i < free_bits.size(); ++i) {
        if ((k >> i) & 1u) y |= std::uint64_t{1} << free_bits[i];
      }
      if (y <= max_v) continue;
      if (try_candidate(y)) return Element{y};
    }
  }

 private:
  // Bit position strictly above every context vertex number: setting it makes
  // the witness larger than the context without touching any context bit.
  static std::uint64_t high_bit(std::span<const Element> context) {
    std::uint64_t hb = 0;
    for (Element e : context) hb = std::max(hb, e.idx + 1);
    if (hb > kMaxVertexBit) {
      fail(errc::bound_exceeded, "rado vertex too large for a constructive witness");
    }
    return hb;
  }

  // Splits a code for an m-tuple into its equality part and adjacency bits.
  static bool split_code(const TypeCode& code, std::size_t m,
                         std::vector<std::size_t>* eq, std::string_view* bits) {
    const auto bar1 = code.repr.find('|');
    const auto bar2 = code.repr.find('|', bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos) return false;
    eq->clear();
    std::size_t cur = bar1 + 1;
    while (cur < bar2) {
      const auto comma = code.repr.find(',', cur);
      if (comma == std::string::npos || comma > bar2) break;
      eq->push_back(std::stoul(code.repr.substr(cur, comma - cur)));
      cur = comma + 1;
    }
    *bits = std::string_view(code.repr).substr(bar2 + 1);
    return eq->size() == m && bits->size() == m * (m - 1) / 2;
  }

  // Position of the (i, j) adjacency bit, i < j, in lexicographic pair order
  // over m positions.
  static std::size_t pair_bit(std::size_t m, std::size_t i, std::size_t j) {
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
  }

  // The code of the first n positions of an (n+1)-tuple code whose last
  // position is fresh; an empty code when the shape does not match or the
  // fresh row contradicts a duplicated anchor position.
  static TypeCode restrict_code(std::size_t n, const TypeCode& target) {
    std::vector<std::size_t> eq;
    std::string_view bits;
    if (!split_code(target, n + 1, &eq, &bits)) return TypeCode{};
    if (eq[n] != n) return TypeCode{};
    for (std::size_t j = 0; j < n; ++j) {
      if (eq[j] != j &&
          bits[pair_bit(n + 1, j, n)] != bits[pair_bit(n + 1, eq[j], n)]) {
        return TypeCode{};
      }
    }
    std::string repr = "R|";
    for (std::size_t j = 0; j < n; ++j) {
      repr += std::to_string(eq[j]);
      repr += ',';
    }
    repr += '|';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        repr += bits[pair_bit(n + 1, i, j)];
      }
    }
    return TypeCode{std::move(repr)};
  }

  // Adjacency required between a fresh y and each anchor vertex, as a bit
  // mask over vertex numbers. False when the code ties y to the anchor.
  static bool required_mask(std::span<const Element> anchor,
                            const TypeCode& target, std::uint64_t* mask) {
    const std::size_t n = anchor.size();
    std::vector<std::size_t> eq;
    std::string_view bits;
    if (!split_code(target, n + 1, &eq, &bits)) return false;
    if (eq[n] != n) return false;
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (bits[pair_bit(n + 1, i, n)] == '1') {
        if (anchor[i].idx > kMaxVertexBit) {
          fail(errc::bound_exceeded, "rado vertex too large for a constructive witness");
        }
        out |= std::uint64_t{1} << anchor[i].idx;
      }
    }
    *mask = out;
    return true;
  }
};

}  // namespace

std::unique_ptr<const Structure> make_rado(const StructureConfig& cfg) {
  return std::make_unique<RadoStructure>(cfg);
}

}  // namespace oligo::detail
