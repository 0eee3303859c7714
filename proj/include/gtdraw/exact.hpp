#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gtdraw/error.hpp"

namespace gtdraw {

// Exact rational scalar backed by GMP. Always canonical: denominator > 0,
// gcd(numerator, denominator) = 1. All decision-making arithmetic in the
// library goes through this type; doubles appear only in SVG rendering.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n, 1) {}  // NOLINT: implicit by design
  Rat(long num, long den) {
    if (den == 0) throw RationalParseError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "num" or "num/den" with optional leading '-'. Arbitrary precision.
  static Rat parse(std::string_view s);

  // Canonical text form: "num" when den == 1, else "num/den".
  std::string str() const;
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  int sgn() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  // Largest integer <= *this, as a Rat.
  Rat floor() const;
  Rat ceil() const { return -((-*this).floor()); }
  // Pre: is_integer() and the value fits in long.
  long to_long() const;
  // Rendering only; never feed the result back into a decision.
  double to_double() const { return v_.get_d(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.sgn() == 0) throw RationalParseError("division by zero rational");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

struct Pt {
  Rat x, y;
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
  // Lexicographic; used only for deterministic container ordering.
  friend bool operator<(const Pt& a, const Pt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

// Closed straight segment with distinct endpoints.
struct Seg {
  Pt a, b;
  Seg(Pt a_, Pt b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == b) throw Error("degenerate segment: endpoints coincide");
  }
};

enum class Orient { kCW = -1, kCollinear = 0, kCCW = 1 };

// cross(b - a, c - a)
Rat cross3(const Pt& a, const Pt& b, const Pt& c);
Orient orient(const Pt& a, const Pt& b, const Pt& c);

// Classification of the intersection of two closed segments.
//   kNone            disjoint
//   kPoint           exactly one common point that is not a shared endpoint
//                    (interior x interior, or endpoint of one in the interior
//                    of the other)
//   kSharedEndpoint  exactly one common point, an endpoint of both
//   kOverlap         collinear with a common sub-segment of positive length
struct SegIntersection {
  enum class Kind { kNone, kPoint, kSharedEndpoint, kOverlap };
  Kind kind = Kind::kNone;
  std::optional<Pt> point;  // set for kPoint and kSharedEndpoint
};

SegIntersection seg_intersect(const Seg& s, const Seg& t);

// CCW comparator for direction vectors, starting at the positive x axis.
// Both vectors must be nonzero. Equal directions compare as equivalent
// (neither less); callers that need strict order must reject ties.
bool dir_ccw_less(const Pt& u, const Pt& v);
bool dir_equal(const Pt& u, const Pt& v);

}  // namespace gtdraw
