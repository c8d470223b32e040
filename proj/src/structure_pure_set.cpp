#include <algorithm>
#include <charconv>
#include <string>

#include "oligo/errors.hpp"
#include "oligo/structure.hpp"
#include "structures.hpp"

namespace oligo::detail {
namespace {

// The pure countable set: elements are the naturals, there are no relations,
// and the type of a tuple is its equality pattern.
class PureSetStructure final : public Structure {
 public:
  explicit PureSetStructure(StructureConfig cfg) : Structure(cfg) {}

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
    std::string repr = "P|";
    for (std::size_t j : eq_partition(t)) {
      repr += std::to_string(j);
      repr += ',';
    }
    return TypeCode{std::move(repr)};
  }

  Realizations realizations(std::span<const Element> anchor,
                            const TypeCode& target) const override {
    Tuple probe(anchor.begin(), anchor.end());
    probe.push_back(Element{0});
    // Tie classes: y equal to an anchor entry.
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
    // Fresh class: all y outside the anchor are interchangeable.
    probe.back() = fresh_point(anchor);
    if (tuple_type(probe) == target) return {false, {}};
    fail(errc::unrealizable_code, "no point satisfies the code");
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
    out.push_back(fresh_point(context));
    return out;
  }

 protected:
  std::uint64_t infinite_scan_limit(std::span<const Element> anchor,
                                    const TypeCode&,
                                    std::size_t forbidden_count) const override {
    return anchor.size() + forbidden_count + 2;
  }

 private:
  static Element fresh_point(std::span<const Element> used) {
    // Smallest natural not already used.
    std::vector<Element> sorted(used.begin(), used.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t v = 0;
    for (Element e : sorted) {
      if (e.idx == v) ++v;
      if (e.idx > v) break;
    }
    return Element{v};
  }
};

}  // namespace

std::unique_ptr<const Structure> make_pure_set(const StructureConfig& cfg) {
  return std::make_unique<PureSetStructure>(cfg);
}

}  // namespace oligo::detail
