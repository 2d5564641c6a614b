#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "core/error.hpp"

namespace veron {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over mpq_class; keeps the canonical-form
// invariant at every construction site so equality is plain comparison.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, literals everywhere
  Rat(long num, long den) {
    require(den != 0, Err::BadArgument, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpz_class& z) : v_(z) {}
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "p", "p/q", optional leading '-'. Throws Err::Parse otherwise.
  static Rat parse(const std::string& s);

  std::string str() const { return v_.get_str(); }  // "p/q", or "p" when q == 1

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  // Rough size measure (bits of num+den), used for pivot selection.
  size_t height() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
  }

  Rat operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    require(!o.is_zero(), Err::BadArgument, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inv() const {
    require(!is_zero(), Err::BadArgument, "inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
  }
  Rat abs() const {
    Rat r;
    r.v_ = ::abs(v_);
    return r;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace veron
