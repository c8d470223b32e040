#include "oligo/rational.hpp"

#include <cctype>

#include "oligo/errors.hpp"
#include "oligo/gaussian.hpp"

namespace oligo {

std::string rat_to_string(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!all_digits(num)) fail(errc::syntax_error, "bad rational: " + std::string(text));
  Int p{std::string(num)};
  Int q{1};
  if (slash != std::string_view::npos) {
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(den)) fail(errc::syntax_error, "bad rational: " + std::string(text));
    q = Int(std::string(den));
    if (q == 0) fail(errc::syntax_error, "zero denominator: " + std::string(text));
  }
  Rat r(p, q);
  return neg ? Rat(-r) : r;
}

std::string gaussian_to_string(const Gaussian& z) {
  if (z.im == 0) return rat_to_string(z.re);
  std::string out = rat_to_string(z.re);
  if (z.im < 0) {
    out += "-" + rat_to_string(Rat(-z.im)) + "i";
  } else {
    out += "+" + rat_to_string(z.im) + "i";
  }
  return out;
}

}  // namespace oligo
