#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gcs/error.hpp"

namespace gcs::geom {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDefaultEps = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

/// Line {p : p·(cos θ, sin θ) = c} with θ kept in [0, π).
struct LineRep {
  double theta = 0.0;
  double c = 0.0;

  Point2 normal() const { return {std::cos(theta), std::sin(theta)}; }
  Point2 direction() const { return perp(normal()); }
  double signed_distance(Point2 p) const { return dot(normal(), p) - c; }

  friend bool operator==(const LineRep&, const LineRep&) = default;
};

inline LineRep make_line(double theta, double c) {
  theta = std::fmod(theta, 2.0 * kPi);
  if (theta < 0.0) theta += 2.0 * kPi;
  if (theta >= kPi) {
    theta -= kPi;
    c = -c;
  }
  if (theta >= kPi) theta = 0.0;
  if (c == 0.0) c = 0.0;  // drop negative zero
  return {theta, c};
}

struct CircleRep {
  Point2 center;
  double r = 1.0;

  friend bool operator==(const CircleRep&, const CircleRep&) = default;
};

/// Up to two intersection points. A tangency yields one point and sets
/// `degenerate`.
struct Intersection {
  std::vector<Point2> points;
  bool degenerate = false;
};

// Folds any angle difference between two lines into [0, π/2].
inline double fold_angle(double a) {
  double x = std::fmod(std::abs(a), kPi);
  return std::min(x, kPi - x);
}

inline double unsigned_angle(const LineRep& a, const LineRep& b) { return fold_angle(a.theta - b.theta); }

/// Distance between two line representations, aware that (θ, c) and
/// (θ ± π, −c) describe the same line.
inline double line_distance(const LineRep& a, const LineRep& b) {
  double dt = a.theta - b.theta;
  double direct = std::max(std::abs(dt), std::abs(a.c - b.c));
  double wrapped = std::max(kPi - std::abs(dt), std::abs(a.c + b.c));
  return std::min(direct, wrapped);
}

inline Point2 intersect_line_line(const LineRep& l1, const LineRep& l2, double eps = kDefaultEps) {
  const double det = std::sin(l2.theta - l1.theta);
  if (std::abs(det) <= eps) throw Error(ErrorCode::Parallel, "lines are parallel");
  const double c1 = std::cos(l1.theta), s1 = std::sin(l1.theta);
  const double c2 = std::cos(l2.theta), s2 = std::sin(l2.theta);
  return {(l1.c * s2 - l2.c * s1) / det, (c1 * l2.c - c2 * l1.c) / det};
}

inline Intersection intersect_line_circle(const LineRep& l, const CircleRep& k, double eps = kDefaultEps) {
  const Point2 n = l.normal();
  const double h = l.signed_distance(k.center);
  const Point2 foot = k.center - h * n;
  const double scale = std::max(1.0, k.r);
  if (std::abs(h) > k.r + eps * scale)
    throw Error(ErrorCode::EmptyIntersection, "line misses circle");
  if (std::abs(std::abs(h) - k.r) <= eps * scale) return {{foot}, true};
  const double half = std::sqrt(k.r * k.r - h * h);
  const Point2 d = l.direction();
  return {{foot + half * d, foot - half * d}, false};
}

inline Intersection intersect_circle_circle(const CircleRep& k1, const CircleRep& k2, double eps = kDefaultEps) {
  const Point2 delta = k2.center - k1.center;
  const double d = norm(delta);
  const double scale = std::max({1.0, k1.r, k2.r});
  if (d <= eps * scale) {
    if (std::abs(k1.r - k2.r) <= eps * scale) throw Error(ErrorCode::Coincident, "circles coincide");
    throw Error(ErrorCode::EmptyIntersection, "concentric circles do not meet");
  }
  const double outer = k1.r + k2.r;
  const double inner = std::abs(k1.r - k2.r);
  if (d > outer + eps * scale || d < inner - eps * scale)
    throw Error(ErrorCode::EmptyIntersection, "circles do not meet");
  const Point2 u = (1.0 / d) * delta;
  if (std::abs(d - outer) <= eps * scale) return {{k1.center + k1.r * u}, true};
  if (std::abs(d - inner) <= eps * scale) {
    const double sign = k1.r >= k2.r ? 1.0 : -1.0;
    return {{k1.center + (sign * k1.r) * u}, true};
  }
  const double a = (d * d + k1.r * k1.r - k2.r * k2.r) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, k1.r * k1.r - a * a));
  const Point2 mid = k1.center + a * u;
  return {{mid + h * perp(u), mid - h * perp(u)}, false};
}

inline LineRep line_through_points(Point2 p, Point2 q, double eps = kDefaultEps) {
  const double len = dist(p, q);
  if (len <= eps * std::max({1.0, norm(p), norm(q)}))
    throw Error(ErrorCode::CoincidentPoints, "points coincide");
  const Point2 n = perp((1.0 / len) * (q - p));
  return make_line(std::atan2(n.y, n.x), dot(n, p));
}

/// Line through `p` meeting `ref` at angle `alpha`; branch 0 turns the normal
/// by +alpha, branch 1 by −alpha.
inline LineRep line_through_point_angle(Point2 p, const LineRep& ref, double alpha, int branch) {
  if (!(alpha > 0.0 && alpha < kPi)) throw Error(ErrorCode::BadValue, "angle must lie in (0, pi)");
  if (branch != 0 && branch != 1) throw Error(ErrorCode::BadValue, "branch must be 0 or 1");
  const double theta = ref.theta + (branch == 0 ? alpha : -alpha);
  return make_line(theta, std::cos(theta) * p.x + std::sin(theta) * p.y);
}

/// Isometry p ↦ R(rotation)·F(p) + translation, F mirroring y when `reflect`.
struct Motion {
  double rotation = 0.0;
  Point2 translation;
  bool reflect = false;
};

inline Point2 apply(const Motion& m, Point2 p) {
  if (m.reflect) p.y = -p.y;
  const double c = std::cos(m.rotation), s = std::sin(m.rotation);
  return Point2{c * p.x - s * p.y, s * p.x + c * p.y} + m.translation;
}

inline LineRep apply(const Motion& m, const LineRep& l) {
  Point2 n = l.normal();
  if (m.reflect) n.y = -n.y;
  const double c = std::cos(m.rotation), s = std::sin(m.rotation);
  const Point2 rn{c * n.x - s * n.y, s * n.x + c * n.y};
  const Point2 on_line = apply(m, l.c * l.normal());
  return make_line(std::atan2(rn.y, rn.x), dot(rn, on_line));
}

inline CircleRep apply(const Motion& m, const CircleRep& k) { return {apply(m, k.center), k.r}; }

inline Motion rigid_align(Point2 src1, Point2 src2, Point2 dst1, Point2 dst2, bool reflect,
                          double eps = kDefaultEps) {
  const double ls = dist(src1, src2);
  const double ld = dist(dst1, dst2);
  if (ls <= eps * std::max(1.0, norm(src1)) || ld <= eps * std::max(1.0, norm(dst1)))
    throw Error(ErrorCode::CoincidentPoints, "alignment pair is degenerate");
  if (std::abs(ls - ld) > 1e-9 * std::max(1.0, ld))
    throw Error(ErrorCode::LengthMismatch, "alignment pairs differ in length");
  Motion m;
  m.reflect = reflect;
  const Point2 a = reflect ? Point2{src1.x, -src1.y} : src1;
  const Point2 b = reflect ? Point2{src2.x, -src2.y} : src2;
  const Point2 ds = b - a, dd = dst2 - dst1;
  m.rotation = std::atan2(dd.y, dd.x) - std::atan2(ds.y, ds.x);
  const double c = std::cos(m.rotation), s = std::sin(m.rotation);
  m.translation = dst1 - Point2{c * a.x - s * a.y, s * a.x + c * a.y};
  return m;
}

/// Every isometry carrying the pair (point, line) onto (dst point, dst line):
/// two when the point is off the line, four when it lies on it.
inline std::vector<Motion> align_point_line(Point2 src_p, const LineRep& src_l, Point2 dst_p, const LineRep& dst_l,
                                            double eps = kDefaultEps) {
  const double hs = std::abs(src_l.signed_distance(src_p));
  const double hd = std::abs(dst_l.signed_distance(dst_p));
  if (std::abs(hs - hd) > eps * std::max(1.0, hd))
    throw Error(ErrorCode::LengthMismatch, "point-line offsets differ");
  std::vector<Motion> out;
  for (bool reflect : {false, true}) {
    for (double turn : {0.0, kPi}) {
      const double src_theta = reflect ? -src_l.theta : src_l.theta;
      Motion m;
      m.reflect = reflect;
      m.rotation = dst_l.theta - src_theta + turn;
      m.translation = Point2{};
      m.translation = dst_p - apply(m, src_p);
      const double scale = std::max({1.0, std::abs(dst_l.c), norm(dst_p)});
      if (line_distance(apply(m, src_l), dst_l) <= eps * scale) out.push_back(m);
    }
  }
  return out;
}

}  // namespace gcs::geom
