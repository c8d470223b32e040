#ifndef OLIGO_GAUSSIAN_HPP_
#define OLIGO_GAUSSIAN_HPP_

#include <string>

#include "oligo/rational.hpp"

namespace oligo {

// Gaussian rational a + bi; the exact scalar field of the coset algebra.
struct Gaussian {
  Rat re;
  Rat im;

  Gaussian() = default;
  Gaussian(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  explicit Gaussian(long n) : re(n), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend bool operator==(const Gaussian&, const Gaussian&) = default;

  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator-() const { return {-re, -im}; }
  Gaussian operator*(const Gaussian& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  Gaussian conj() const { return {re, -im}; }
  Rat norm_sq() const { return re * re + im * im; }
};

inline const Gaussian kOne{Rat(1), Rat(0)};

// "re" for real values, "re+imi"/"re-imi" otherwise (e.g. "1/2-3i", "0+1i").
std::string gaussian_to_string(const Gaussian& z);

}  // namespace oligo

#endif  // OLIGO_GAUSSIAN_HPP_
