#include "liedeg/scalar.hpp"

#include <ostream>

namespace liedeg {

Rat rat_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (im_ == 0 && o.im_ == 0) {
    re_ /= o.re_;
    return *this;
  }
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  Rat n = o.re_ * o.re_ + o.im_ * o.im_;
  Rat r = (re_ * o.re_ + im_ * o.im_) / n;
  Rat i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  return Scalar(1) / *this;
}

Rat Scalar::height() const { return abs(re_) + abs(im_); }

std::string Scalar::str() const {
  if (im_ == 0) return re_.get_str();
  std::string out;
  if (re_ != 0) out += re_.get_str();
  if (im_ > 0 && re_ != 0) out += "+";
  if (im_ == 1)
    out += "i";
  else if (im_ == -1)
    out += "-i";
  else
    out += im_.get_str() + "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace liedeg
