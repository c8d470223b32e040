#include "oligo/structure.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

#include "oligo/errors.hpp"
#include "structures.hpp"

namespace oligo {

const char* kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::pure_set: return "pure_set";
    case StructureKind::dlo: return "dlo";
    case StructureKind::rado: return "rado";
    case StructureKind::vector_space: return "vector_space";
  }
  return "?";
}

namespace {

StructureKind kind_from_name(const std::string& name) {
  if (name == "pure_set") return StructureKind::pure_set;
  if (name == "dlo") return StructureKind::dlo;
  if (name == "rado") return StructureKind::rado;
  if (name == "vector_space") return StructureKind::vector_space;
  fail(errc::bad_config, "unknown structure kind: " + name);
}

bool is_prime_power(std::uint32_t q, std::uint32_t* p, std::uint32_t* m) {
  if (q < 2) return false;
  std::uint32_t f = q;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      f = d;
      break;
    }
  }
  std::uint32_t rest = q, exp = 0;
  while (rest % f == 0) {
    rest /= f;
    ++exp;
  }
  if (rest != 1) return false;
  *p = f;
  *m = exp;
  return true;
}

void validate(const StructureConfig& cfg) {
  if (cfg.bounds.enum_cap < 1 || cfg.bounds.search_cap < 1) {
    fail(errc::bad_config, "bounds must be >= 1");
  }
  if (cfg.kind == StructureKind::vector_space) {
    std::uint32_t p = 0, m = 0;
    if (!is_prime_power(cfg.q, &p, &m)) {
      fail(errc::bad_config, "q must be a prime power >= 2");
    }
    if (cfg.q > 256) fail(errc::bad_config, "q > 256 is not supported");
  }
}

}  // namespace

StructureConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_config, std::string("config is not valid JSON: ") + e.what());
  }
  StructureConfig cfg;
  if (!j.contains("kind") || !j["kind"].is_string()) {
    fail(errc::bad_config, "config requires a string \"kind\"");
  }
  cfg.kind = kind_from_name(j["kind"].get<std::string>());
  if (j.contains("params") && j["params"].contains("q")) {
    cfg.q = j["params"]["q"].get<std::uint32_t>();
  }
  if (j.contains("bounds")) {
    const auto& b = j["bounds"];
    if (b.contains("enum_cap")) cfg.bounds.enum_cap = b["enum_cap"].get<std::uint64_t>();
    if (b.contains("search_cap")) cfg.bounds.search_cap = b["search_cap"].get<std::uint64_t>();
  }
  validate(cfg);
  return cfg;
}

std::string config_to_json(const StructureConfig& cfg) {
  nlohmann::json j;
  j["kind"] = kind_name(cfg.kind);
  if (cfg.kind == StructureKind::vector_space) j["params"]["q"] = cfg.q;
  j["bounds"]["enum_cap"] = cfg.bounds.enum_cap;
  j["bounds"]["search_cap"] = cfg.bounds.search_cap;
  return j.dump();
}

StructureConfig parse_structure_preset(std::string_view name) {
  StructureConfig cfg;
  if (name == "pure_set" || name == "dlo" || name == "rado") {
    cfg.kind = kind_from_name(std::string(name));
    return cfg;
  }
  if (name.size() > 3 && name.substr(0, 3) == "vec") {
    std::uint32_t q = 0;
    for (char c : name.substr(3)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail(errc::bad_config, "bad preset: " + std::string(name));
      }
      q = q * 10 + static_cast<std::uint32_t>(c - '0');
      if (q > 100000) fail(errc::bad_config, "bad preset: " + std::string(name));
    }
    cfg.kind = StructureKind::vector_space;
    cfg.q = q;
    validate(cfg);
    return cfg;
  }
  fail(errc::bad_config, "unknown structure preset: " + std::string(name));
}

std::unique_ptr<const Structure> Structure::make(const StructureConfig& cfg) {
  validate(cfg);
  switch (cfg.kind) {
    case StructureKind::pure_set: return detail::make_pure_set(cfg);
    case StructureKind::dlo: return detail::make_dlo(cfg);
    case StructureKind::rado: return detail::make_rado(cfg);
    case StructureKind::vector_space: return detail::make_vector_space(cfg);
  }
  fail(errc::bad_config, "unreachable");
}

std::vector<Element> Structure::enumerate_elements(std::uint64_t n) const {
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Element{i});
  return out;
}

bool Structure::is_partial_iso(std::span<const ElementPair> pairs) const {
  auto m = PartialAuto::from_pairs({pairs.begin(), pairs.end()});
  return is_partial_iso(m);
}

bool Structure::is_partial_iso(const PartialAuto& m) const {
  return tuple_type(m.domain()) == tuple_type(m.images());
}

Element Structure::extend_one_avoiding(const PartialAuto& s, Element x,
                                       const FiniteSet& forbidden) const {
  if (s.defined_on(x)) fail(errc::precondition, "x already lies in dom(s)");
  Tuple dom = s.domain();
  dom.push_back(x);
  const TypeCode target = tuple_type(dom);
  const Realizations r = realizations(s.images(), target);
  if (r.finite) {
    for (Element y : r.elems) {
      if (!forbidden.contains(y)) return y;
    }
    fail(errc::exhausted, "finite realization class entirely forbidden");
  }
  return scan_infinite(s.images(), target, forbidden);
}

Element Structure::scan_infinite(std::span<const Element> anchor,
                                 const TypeCode& target,
                                 const FiniteSet& forbidden) const {
  const std::uint64_t need =
      infinite_scan_limit(anchor, target, forbidden.size());
  const std::uint64_t budget = cfg_.bounds.search_cap;
  Tuple probe(anchor.begin(), anchor.end());
  probe.push_back(Element{0});
  for (std::uint64_t i = 0; i < need; ++i) {
    if (i >= budget) {
      fail(errc::bound_exceeded, "search cap hit scanning an infinite class");
    }
    const Element y{i};
    if (forbidden.contains(y)) continue;
    probe.back() = y;
    if (tuple_type(probe) == target) return y;
  }
  fail(errc::internal, "no realization within the completeness bound");
}

Element Structure::generic_image(const PartialAuto& w, Element x,
                                 std::span<const Element> hull) const {
  return extend_one_avoiding(w, x, FiniteSet({hull.begin(), hull.end()}));
}

namespace detail {

std::vector<std::size_t> eq_partition(std::span<const Element> t) {
  std::vector<std::size_t> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t j = 0;
    while (t[j] != t[i]) ++j;
    out[i] = j;
  }
  return out;
}

}  // namespace detail

}  // namespace oligo
