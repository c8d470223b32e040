#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "oligo/errors.hpp"
#include "oligo/structure.hpp"
#include "structures.hpp"

namespace oligo::detail {
namespace {

// Arithmetic in F_q for a prime power q = p^m, via lookup tables. Elements
// are integer codes 0..q-1: for m > 1 the code packs the polynomial
// coefficients base p, with reduction modulo the lexicographically least
// monic irreducible of degree m.
class Field {
 public:
  explicit Field(std::uint32_t q) : q_(q) {
    p_ = smallest_prime_factor(q);
    m_ = 0;
    for (std::uint32_t rest = q; rest > 1; rest /= p_) ++m_;
    build_tables();
  }

  std::uint32_t q() const { return q_; }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    return add_[a * q_ + b];
  }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return mul_[a * q_ + b];
  }
  std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
  std::uint16_t inv(std::uint16_t a) const {
    if (a == 0) fail(errc::internal, "inverse of zero");
    return inv_[a];
  }

 private:
  static std::uint32_t smallest_prime_factor(std::uint32_t n) {
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return d;
    }
    return n;
  }

  using Poly = std::vector<std::uint16_t>;  // coefficients, low degree first

  Poly decode_poly(std::uint32_t code, std::uint32_t len) const {
    Poly c(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
      c[i] = static_cast<std::uint16_t>(code % p_);
      code /= p_;
    }
    return c;
  }

  std::uint32_t encode_poly(const Poly& c) const {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i];
    return code;
  }

  static std::size_t degree(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d;  // 0 means the zero polynomial
  }

  Poly poly_mod(Poly a, const Poly& g) const {
    const std::size_t dg = degree(g);
    const std::uint16_t lead_inv = mod_inv(g[dg - 1]);
    while (degree(a) >= dg) {
      const std::size_t da = degree(a);
      const std::uint16_t factor =
          static_cast<std::uint16_t>(a[da - 1] * lead_inv % p_);
      for (std::size_t i = 0; i < dg; ++i) {
        const std::uint32_t sub = factor * g[i] % p_;
        a[da - dg + i] = static_cast<std::uint16_t>((a[da - dg + i] + p_ - sub) % p_);
      }
    }
    return a;
  }

  std::uint16_t mod_inv(std::uint16_t a) const {
    for (std::uint32_t b = 1; b < p_; ++b) {
      if (a * b % p_ == 1) return static_cast<std::uint16_t>(b);
    }
    fail(errc::internal, "no modular inverse");
  }

  bool is_irreducible(const Poly& f) const {
    const std::size_t m = degree(f) - 1;
    for (std::size_t d = 1; 2 * d <= m; ++d) {
      std::uint32_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p_;
      for (std::uint32_t tail = 0; tail < count; ++tail) {
        Poly g = decode_poly(tail, static_cast<std::uint32_t>(d + 1));
        g[d] = 1;
        if (degree(poly_mod(f, g)) == 0) return false;
      }
    }
    return true;
  }

  void build_tables() {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.resize(q_);

    Poly modulus;
    if (m_ > 1) {
      for (std::uint32_t tail = 0;; ++tail) {
        if (tail >= q_) fail(errc::internal, "no irreducible polynomial found");
        Poly f = decode_poly(tail, m_ + 1);
        f[m_] = 1;
        if (is_irreducible(f)) {
          modulus = f;
          break;
        }
      }
    }

    for (std::uint32_t a = 0; a < q_; ++a) {
      const Poly pa = decode_poly(a, m_);
      for (std::uint32_t b = 0; b < q_; ++b) {
        const Poly pb = decode_poly(b, m_);
        Poly sum(m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
          sum[i] = static_cast<std::uint16_t>((pa[i] + pb[i]) % p_);
        }
        add_[a * q_ + b] = static_cast<std::uint16_t>(encode_poly(sum));

        Poly prod(2 * m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
          for (std::uint32_t j = 0; j < m_; ++j) {
            prod[i + j] = static_cast<std::uint16_t>(
                (prod[i + j] + pa[i] * pb[j]) % p_);
          }
        }
        if (m_ > 1) prod = poly_mod(std::move(prod), modulus);
        prod.resize(m_);
        mul_[a * q_ + b] = static_cast<std::uint16_t>(encode_poly(prod));
      }
    }
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0) neg_[a] = static_cast<std::uint16_t>(b);
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);
      }
    }
  }

  std::uint32_t q_, p_, m_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

using Vec = std::vector<std::uint16_t>;  // coefficients, trailing zeros trimmed

// The countably infinite-dimensional vector space over F_q. An element is a
// finite-support coefficient vector; its enumeration index reads the
// coefficients as base-q digits, so index 0 is the zero vector.
class VectorSpaceStructure final : public Structure {
 public:
  explicit VectorSpaceStructure(StructureConfig cfg)
      : Structure(cfg), field_(cfg.q) {}

  Vec decode(Element e) const {
    Vec v;
    std::uint64_t rest = e.idx;
    while (rest > 0) {
      v.push_back(static_cast<std::uint16_t>(rest % field_.q()));
      rest /= field_.q();
    }
    return v;
  }

  Element encode(Vec v) const {
    while (!v.empty() && v.back() == 0) v.pop_back();
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
      if (idx > (UINT64_MAX - v[i]) / field_.q()) {
        fail(errc::bound_exceeded, "vector index exceeds 64 bits");
      }
      idx = idx * field_.q() + v[i];
    }
    return Element{idx};
  }

  std::string element_literal(Element e) const override {
    const Vec v = decode(e);
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v[i]);
    }
    out += ']';
    return out;
  }

  Element parse_element(std::string_view text) const override {
    auto bad = [&] {
      fail(errc::unknown_element_literal, "expected [c0,c1,...]: " + std::string(text));
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') bad();
    ++i;
    Vec v;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        skip_ws();
        std::uint32_t c = 0;
        const char* begin = text.data() + i;
        auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), c);
        if (ec != std::errc() || ptr == begin) bad();
        if (c >= field_.q()) bad();
        v.push_back(static_cast<std::uint16_t>(c));
        i = static_cast<std::size_t>(ptr - text.data());
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        bad();
      }
    }
    skip_ws();
    if (i != text.size()) bad();
    return encode(std::move(v));
  }

  // Code = reduced row echelon form of the matrix whose columns are the
  // tuple's vectors. Its row space is exactly the space of linear relations'
  // annihilator data: two tuples carry equal codes iff they satisfy the same
  // linear relations, iff a linear automorphism maps one onto the other.
  TypeCode tuple_type(std::span<const Element> t) const override {
    const std::size_t n = t.size();
    std::vector<Vec> cols;
    cols.reserve(n);
    std::size_t dims = 0;
    for (Element e : t) {
      cols.push_back(decode(e));
      dims = std::max(dims, cols.back().size());
    }
    std::vector<Vec> rows;
    rows.reserve(dims);
    for (std::size_t c = 0; c < dims; ++c) {
      Vec row(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (c < cols[j].size()) row[j] = cols[j][c];
      }
      rows.push_back(std::move(row));
    }
    rref(rows);
    std::string repr = "V|" + std::to_string(n) + "|";
    for (const Vec& row : rows) {
      for (std::size_t j = 0; j < n; ++j) {
        repr += std::to_string(row[j]);
        repr += ',';
      }
      repr += ';';
    }
    return TypeCode{std::move(repr)};
  }

  Realizations realizations(std::span<const Element> anchor,
                            const TypeCode& target) const override {
    const std::size_t n = anchor.size();
    std::vector<Vec> rows;
    if (!parse_code(target, n + 1, &rows)) {
      fail(errc::unrealizable_code, "code does not fit the anchor");
    }
    Tuple probe(anchor.begin(), anchor.end());
    probe.push_back(Element{0});
    // The code rows span the coordinate row space; the relations among the
    // tuple are its perp. y is pinned down exactly when the last column is
    // not a pivot column: then some relation has a nonzero y coefficient.
    bool last_is_pivot = false;
    for (const Vec& row : rows) {
      std::size_t lead = 0;
      while (lead <= n && row[lead] == 0) ++lead;
      if (lead == n) last_is_pivot = true;
    }
    if (!last_is_pivot) {
      // Kernel vector for free column n: c_n = 1, c_{pivot(r)} = -row_r[n],
      // giving the relation sum c_i a_i + y = 0, i.e. y = sum row_r[n] a_{p_r}.
      Vec y;
      for (const Vec& row : rows) {
        std::size_t lead = 0;
        while (lead <= n && row[lead] == 0) ++lead;
        if (lead >= n || row[n] == 0) continue;
        accumulate(&y, row[n], decode(anchor[lead]));
      }
      const Element forced = encode(std::move(y));
      probe.back() = forced;
      if (tuple_type(probe) == target) return {true, {forced}};
      fail(errc::unrealizable_code, "forced value contradicts the code");
    }
    probe.back() = fresh_vector(anchor);
    if (tuple_type(probe) == target) return {false, {}};
    fail(errc::unrealizable_code, "no vector satisfies the code");
  }

  // acl(A) is the linear span of A; it always contains the zero vector.
  std::vector<Element> acl(std::span<const Element> a) const override {
    return span_elements(a);
  }

  // One candidate per 1-type over the context: each vector of the span (its
  // relation row pins it down exactly) plus one vector independent of the
  // context, all fresh ones being equivalent over it.
  std::vector<Element> type_candidates(
      std::span<const Element> context) const override {
    std::vector<Element> out = span_elements(context);
    out.push_back(fresh_vector(context));
    return out;
  }

  Element generic_image(const PartialAuto& w, Element x,
                        std::span<const Element> hull) const override {
    std::vector<Vec> basis;
    for (Element e : w.images()) insert_into_basis(&basis, decode(e));
    for (Element e : hull) insert_into_basis(&basis, decode(e));
    const std::uint64_t budget = cfg_.bounds.search_cap;
    const std::uint64_t need = checked_pow(field_.q(), basis.size() + 1) + 2;
    for (std::uint64_t i = 0; i < need; ++i) {
      if (i >= budget) {
        fail(errc::bound_exceeded, "search cap hit looking for an independent vector");
      }
      Vec v = decode(Element{i});
      if (!in_span(basis, v)) {
        const Element y{i};
        if (!is_partial_iso(w.with_pair(x, y))) {
          fail(errc::internal, "independent image rejected; x was not free");
        }
        return y;
      }
    }
    fail(errc::internal, "no independent vector below the completeness bound");
  }

 protected:
  std::uint64_t infinite_scan_limit(std::span<const Element> anchor,
                                    const TypeCode&,
                                    std::size_t forbidden_count) const override {
    std::vector<Vec> basis;
    for (Element e : anchor) insert_into_basis(&basis, decode(e));
    return checked_pow(field_.q(), basis.size()) + forbidden_count + 2;
  }

 private:
  void accumulate(Vec* acc, std::uint16_t scale, const Vec& v) const {
    if (acc->size() < v.size()) acc->resize(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      (*acc)[i] = field_.add((*acc)[i], field_.mul(scale, v[i]));
    }
  }

  void rref(std::vector<Vec>& rows) const {
    if (rows.empty()) return;
    const std::size_t n = rows[0].size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
      std::size_t pivot = lead;
      while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[lead], rows[pivot]);
      const std::uint16_t scale = field_.inv(rows[lead][col]);
      for (std::size_t j = 0; j < n; ++j) {
        rows[lead][j] = field_.mul(rows[lead][j], scale);
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == lead || rows[r][col] == 0) continue;
        const std::uint16_t factor = field_.neg(rows[r][col]);
        for (std::size_t j = 0; j < n; ++j) {
          rows[r][j] = field_.add(rows[r][j], field_.mul(factor, rows[lead][j]));
        }
      }
      ++lead;
    }
    rows.resize(lead);  // drop zero rows
  }

  static bool parse_code(const TypeCode& code, std::size_t expect_n,
                         std::vector<Vec>* rows) {
    const std::string& s = code.repr;
    if (s.rfind("V|", 0) != 0) return false;
    const auto bar = s.find('|', 2);
    if (bar == std::string::npos) return false;
    if (std::stoul(s.substr(2, bar - 2)) != expect_n) return false;
    rows->clear();
    std::size_t cur = bar + 1;
    while (cur < s.size()) {
      Vec row;
      while (s[cur] != ';') {
        const auto comma = s.find(',', cur);
        row.push_back(static_cast<std::uint16_t>(std::stoul(s.substr(cur, comma - cur))));
        cur = comma + 1;
      }
      ++cur;
      if (row.size() != expect_n) return false;
      rows->push_back(std::move(row));
    }
    return true;
  }

  // Echelon basis over the coordinate space; each basis vector is reduced.
  void insert_into_basis(std::vector<Vec>* basis, Vec v) const {
    while (true) {
      std::size_t lead = v.size();
      while (lead > 0 && v[lead - 1] == 0) --lead;
      if (lead == 0) return;  // dependent
      bool reduced_once = false;
      for (const Vec& b : *basis) {
        if (b.size() == lead) {
          const std::uint16_t factor =
              field_.neg(field_.mul(v[lead - 1], field_.inv(b[lead - 1])));
          accumulate(&v, factor, b);
          reduced_once = true;
          break;
        }
      }
      if (!reduced_once) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        basis->push_back(std::move(v));
        std::sort(basis->begin(), basis->end(),
                  [](const Vec& a, const Vec& b) { return a.size() < b.size(); });
        return;
      }
    }
  }

  bool in_span(const std::vector<Vec>& basis, Vec v) const {
    while (true) {
      std::size_t lead = v.size();
      while (lead > 0 && v[lead - 1] == 0) --lead;
      if (lead == 0) return true;
      bool hit = false;
      for (const Vec& b : basis) {
        if (b.size() == lead) {
          const std::uint16_t factor =
              field_.neg(field_.mul(v[lead - 1], field_.inv(b[lead - 1])));
          accumulate(&v, factor, b);
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
  }

  std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) const {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      if (out > (std::uint64_t{1} << 40)) {
        fail(errc::bound_exceeded, "span too large to enumerate");
      }
      out *= base;
    }
    return out;
  }

  std::vector<Element> span_elements(std::span<const Element> a) const {
    std::vector<Vec> basis;
    for (Element e : a) insert_into_basis(&basis, decode(e));
    const std::uint64_t total = checked_pow(field_.q(), basis.size());
    if (total > (std::uint64_t{1} << 22)) {
      fail(errc::bound_exceeded, "span too large to enumerate");
    }
    std::vector<Element> out;
    out.reserve(total);
    for (std::uint64_t combo = 0; combo < total; ++combo) {
      Vec acc;
      std::uint64_t rest = combo;
      for (const Vec& b : basis) {
        const std::uint16_t c = static_cast<std::uint16_t>(rest % field_.q());
        rest /= field_.q();
        if (c != 0) accumulate(&acc, c, b);
      }
      out.push_back(encode(std::move(acc)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Element fresh_vector(std::span<const Element> context) const {
    std::size_t dims = 0;
    for (Element e : context) dims = std::max(dims, decode(e).size());
    Vec v(dims + 1, 0);
    v[dims] = 1;
    return encode(std::move(v));
  }

  Field field_;
};

}  // namespace

std::unique_ptr<const Structure> make_vector_space(const StructureConfig& cfg) {
  return std::make_unique<VectorSpaceStructure>(cfg);
}

}  // namespace oligo::detail
