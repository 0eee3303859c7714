#include "gtdraw/exact.hpp"

#include <algorithm>
#include <cctype>

namespace gtdraw {

Rat Rat::parse(std::string_view s) {
  auto bad = [&]() -> RationalParseError {
    return RationalParseError("bad rational literal: \"" + std::string(s) + "\"");
  };
  if (s.empty()) throw bad();
  auto is_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den)) throw bad();
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw RationalParseError("zero denominator in \"" + std::string(s) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

Rat Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rat(mpq_class(q));
}

long Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) throw Error("rational does not fit in long");
  return v_.get_num().get_si();
}

Rat cross3(const Pt& a, const Pt& b, const Pt& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Orient orient(const Pt& a, const Pt& b, const Pt& c) {
  switch (cross3(a, b, c).sgn()) {
    case 1: return Orient::kCCW;
    case -1: return Orient::kCW;
    default: return Orient::kCollinear;
  }
}

SegIntersection seg_intersect(const Seg& s, const Seg& t) {
  const Pt ds{s.b.x - s.a.x, s.b.y - s.a.y};
  const Pt dt{t.b.x - t.a.x, t.b.y - t.a.y};
  const Rat det = ds.x * dt.y - ds.y * dt.x;

  if (det.sgn() == 0) {
    // Parallel. Distinguish collinear by checking t.a against s's line.
    if (orient(s.a, s.b, t.a) != Orient::kCollinear) return {};
    // Collinear: order the four endpoints along the dominant axis of s.
    const bool use_x = s.a.x != s.b.x;
    auto key = [&](const Pt& p) { return use_x ? p.x : p.y; };
    Pt s_lo = s.a, s_hi = s.b;
    if (key(s_hi) < key(s_lo)) std::swap(s_lo, s_hi);
    Pt t_lo = t.a, t_hi = t.b;
    if (key(t_hi) < key(t_lo)) std::swap(t_lo, t_hi);
    const Pt& lo = key(s_lo) < key(t_lo) ? t_lo : s_lo;
    const Pt& hi = key(s_hi) < key(t_hi) ? s_hi : t_hi;
    if (key(hi) < key(lo)) return {};
    if (lo == hi) {
      // Single shared point; collinear segments can only touch at endpoints.
      return {SegIntersection::Kind::kSharedEndpoint, lo};
    }
    return {SegIntersection::Kind::kOverlap, std::nullopt};
  }

  // Solve s.a + u*ds = t.a + v*dt for u, v.
  const Pt w{t.a.x - s.a.x, t.a.y - s.a.y};
  const Rat u = (w.x * dt.y - w.y * dt.x) / det;
  const Rat v = (w.x * ds.y - w.y * ds.x) / det;
  if (u.sgn() < 0 || u > Rat(1) || v.sgn() < 0 || v > Rat(1)) return {};
  const Pt p{s.a.x + u * ds.x, s.a.y + u * ds.y};
  const bool end_s = (p == s.a || p == s.b);
  const bool end_t = (p == t.a || p == t.b);
  if (end_s && end_t) return {SegIntersection::Kind::kSharedEndpoint, p};
  return {SegIntersection::Kind::kPoint, p};
}

namespace {
// 0 for the upper half plane including the positive x axis, 1 below.
int half_of(const Pt& u) {
  if (u.y.sgn() > 0) return 0;
  if (u.y.sgn() < 0) return 1;
  return u.x.sgn() > 0 ? 0 : 1;
}
}  // namespace

bool dir_ccw_less(const Pt& u, const Pt& v) {
  const int hu = half_of(u), hv = half_of(v);
  if (hu != hv) return hu < hv;
  return (u.x * v.y - u.y * v.x).sgn() > 0;
}

bool dir_equal(const Pt& u, const Pt& v) {
  if ((u.x * v.y - u.y * v.x).sgn() != 0) return false;
  // Same line; require same direction (positive dot product).
  return (u.x * v.x + u.y * v.y).sgn() > 0;
}

}  // namespace gtdraw
