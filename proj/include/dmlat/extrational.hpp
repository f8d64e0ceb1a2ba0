#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dmlat {

//! Exact rational number extended with a single (signless in comparisons only
//! through is_infinite(), but signed +/- in arithmetic) infinity, represented
//! by a zero denominator. Used for lattice parameters p, k, l, d, t and the
//! cone-angle data, where 1/2 - 3/p and friends routinely pass through
//! infinity (e.g. d = inf at p = 6, l = inf at k = 2p/(p-2)).
//!
//! Conventions:
//!   * num/0 with num > 0 is +infinity, num < 0 is -infinity; 0/0 is invalid.
//!   * reciprocal(+-inf) = 0 and reciprocal(0) = +inf (projective collapse of
//!     the sign is fine for our use: only reciprocals of infinities feed the
//!     Euler-characteristic sums, as 1/l, 1/d terms).
//!   * finite arithmetic is exact on int64 (no overflow checks beyond assert;
//!     all quantities in scope have tiny numerators/denominators).
class ExtRational {
public:
  constexpr ExtRational() : num_(0), den_(1) {}
  constexpr ExtRational(std::int64_t n) : num_(n), den_(1) {}
  ExtRational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  static ExtRational infinity(int sign = +1) {
    ExtRational r;
    r.num_ = sign >= 0 ? 1 : -1;
    r.den_ = 0;
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool positive() const { return num_ > 0; }

  //! 1/x, with 1/inf = 0 and 1/0 = +inf.
  ExtRational reciprocal() const {
    ExtRational r;
    if (num_ == 0) return infinity();
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_ < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
    if (r.den_ == 0) r.num_ = r.num_ > 0 ? 1 : -1;
    return r;
  }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      assert(!(a.is_infinite() && b.is_infinite() && a.num_ != b.num_));
      return a.is_infinite() ? a : b;
    }
    return ExtRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ExtRational operator-(const ExtRational& a) {
    ExtRational r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }
  friend ExtRational operator*(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      assert(a.num_ != 0 && b.num_ != 0);
      return infinity((a.num_ > 0) == (b.num_ > 0) ? +1 : -1);
    }
    return ExtRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ExtRational operator/(const ExtRational& a, const ExtRational& b) {
    return a * b.reciprocal();
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  //! Finite values compare as usual; +inf is greater than everything finite,
  //! -inf less. Comparing two infinities of equal sign is an error.
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a == b) return std::strong_ordering::equal;
    if (a.is_infinite()) return a.num_ > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    if (b.is_infinite()) return b.num_ > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const auto lhs = a.num_ * b.den_;
    const auto rhs = b.num_ * a.den_;
    return lhs <=> rhs;
  }

  double to_double() const {
    if (is_infinite()) return num_ > 0 ? 1e300 : -1e300;
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  //! "7", "7/2", or "inf".
  std::string str() const {
    if (is_infinite()) return num_ > 0 ? "inf" : "-inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  //! Parses "7", "7/2", "inf". Throws std::invalid_argument on junk.
  static ExtRational parse(const std::string& s) {
    if (s == "inf") return infinity();
    if (s == "-inf") return infinity(-1);
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("bad rational: " + s);
      return ExtRational(n);
    }
    const std::int64_t n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("bad rational: " + s);
    const std::int64_t d = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1 || d == 0) throw std::invalid_argument("bad rational: " + s);
    return ExtRational(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

private:
  void normalize() {
    if (den_ == 0) {
      assert(num_ != 0 && "0/0 is not a valid ExtRational");
      num_ = num_ > 0 ? 1 : -1;
      return;
    }
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace dmlat
