#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liedeg {

/// Exact rational number, canonical (reduced, positive denominator).
using Rat = mpq_class;

Rat rat_from_string(std::string_view text);
std::string to_string(const Rat& q);

/// Field scalar: a Gaussian rational re + im*i. The plain-rational case
/// (im == 0) is the common one; every catalog constant is an integer.
class Scalar {
 public:
  Scalar() : re_(0) {}
  Scalar(int v) : re_(v) {}                 // NOLINT: implicit by design
  Scalar(long v) : re_(static_cast<long>(v)) {}
  Scalar(Rat re) : re_(std::move(re)) {}    // NOLINT
  Scalar(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_rational() const { return im_ == 0; }

  /// The rational value; throws if the imaginary part is nonzero.
  const Rat& rat() const {
    if (im_ != 0) throw std::domain_error("scalar has nonzero imaginary part");
    return re_;
  }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;

  /// |re| + |im| as a crude height proxy, for deterministic tie-breaking.
  Rat height() const;

  std::string str() const;

 private:
  Rat re_;
  Rat im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace liedeg
