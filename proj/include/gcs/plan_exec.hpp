#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gcs/geom.hpp"
#include "gcs/graph.hpp"
#include "gcs/plan.hpp"

namespace gcs {

using Placement = std::variant<geom::Point2, geom::LineRep, geom::CircleRep>;
using Fragment = std::map<std::string, Placement>;

/// Branch choices, one per step that produced more than one root. Missing
/// trailing entries mean root 0.
using BranchSelector = std::vector<int>;

struct Solution {
  Fragment placements;
  BranchSelector branches;              // every choice made, defaults included
  std::vector<std::string> degenerate;  // entities placed on a tangent root
};

struct ResidualReport {
  std::vector<double> residuals;  // measured − specified, per constraint
  double max_abs = 0.0;
  bool pass = true;
};

struct ExecOptions {
  double eps = geom::kDefaultEps;  // tangent / empty / transversal discrimination
  double tol = 1e-9;               // residual acceptance
};

namespace detail {

inline Placement transform(const geom::Motion& m, const Placement& p) {
  return std::visit([&](const auto& v) -> Placement { return geom::apply(m, v); }, p);
}

inline double placement_distance(const Placement& a, const Placement& b) {
  if (a.index() != b.index()) return INFINITY;
  if (auto pa = std::get_if<geom::Point2>(&a)) return geom::dist(*pa, std::get<geom::Point2>(b));
  if (auto la = std::get_if<geom::LineRep>(&a)) return geom::line_distance(*la, std::get<geom::LineRep>(b));
  const auto& ka = std::get<geom::CircleRep>(a);
  const auto& kb = std::get<geom::CircleRep>(b);
  return std::max(geom::dist(ka.center, kb.center), std::abs(ka.r - kb.r));
}

inline double fragment_distance(const Fragment& a, const Fragment& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (const auto& [id, pa] : a) {
    auto it = b.find(id);
    if (it == b.end()) return INFINITY;
    worst = std::max(worst, placement_distance(pa, it->second));
  }
  return worst;
}

struct Root {
  geom::Point2 point;
  bool degenerate = false;
};

// Roots sorted by angle about their centroid in [0, 2π), then by (x, y).
inline void order_roots(std::vector<Root>& roots) {
  geom::Point2 centre;
  for (const auto& r : roots) centre = centre + r.point;
  if (!roots.empty()) centre = (1.0 / static_cast<double>(roots.size())) * centre;
  auto key = [&](const Root& r) {
    const geom::Point2 d = r.point - centre;
    if (geom::norm(d) <= 1e-12 * std::max(1.0, geom::norm(centre))) return 0.0;
    double a = std::atan2(d.y, d.x);
    return a < 0.0 ? a + 2.0 * geom::kPi : a;
  };
  std::stable_sort(roots.begin(), roots.end(), [&](const Root& a, const Root& b) {
    const double ka = key(a), kb = key(b);
    if (std::abs(ka - kb) > 1e-12) return ka < kb;
    if (a.point.x != b.point.x) return a.point.x < b.point.x;
    return a.point.y < b.point.y;
  });
}

using Locus = std::variant<geom::LineRep, geom::CircleRep>;

struct RunResult {
  std::optional<Solution> solution;
  std::optional<Error> error;
  std::vector<int> arities;  // root counts of the branching steps reached
};

class Executor {
 public:
  Executor(const Plan& plan, const ConstraintGraph& g, const BranchSelector& selector, ExecOptions opts)
      : plan_(plan), g_(g), selector_(selector), opts_(opts) {}

  RunResult run() {
    RunResult out;
    try {
      for (const auto& s : plan_.steps) step(s);
      if (cursor_ < selector_.size())
        throw Error(ErrorCode::BadBranch, "branch selector is longer than the number of branching steps");
      Solution sol;
      sol.placements = frames_.at(plan_.root_frame);
      for (const auto& e : g_.entities())
        if (!sol.placements.count(e.id))
          throw Error(ErrorCode::UnderDetermined, "entity '" + e.id + "' was never placed", e.id);
      sol.branches = chosen_;
      sol.degenerate = degenerate_;
      out.solution = std::move(sol);
    } catch (const Error& err) {
      out.error = err;
    }
    out.arities = arities_;
    return out;
  }

 private:
  int choose(std::size_t roots) {
    if (roots <= 1) return 0;
    const int pick = cursor_ < selector_.size() ? selector_[cursor_] : 0;
    if (pick < 0 || static_cast<std::size_t>(pick) >= roots)
      throw Error(ErrorCode::BadBranch, "branch " + std::to_string(pick) + " out of range at branching step " +
                                            std::to_string(cursor_));
    ++cursor_;
    arities_.push_back(static_cast<int>(roots));
    chosen_.push_back(pick);
    return pick;
  }

  const Constraint& constraint(int i) const { return g_.constraints()[static_cast<std::size_t>(i)]; }

  template <typename T>
  const T& placed(const Fragment& f, const std::string& id) const {
    auto it = f.find(id);
    if (it == f.end()) throw Error(ErrorCode::MissingPlacement, "entity '" + id + "' is not placed yet", id);
    return std::get<T>(it->second);
  }

  void step(const Step& s) {
    switch (s.kind) {
      case StepKind::Base: return base(s);
      case StepKind::PlaceByTwoLoci: return place(s);
      case StepKind::AlignCluster: return align(s);
      case StepKind::TriangleMerge: return triangle(s);
    }
  }

  // Gauge: first entity at the origin (or the x-axis for a line), second
  // along the positive x-axis.
  void base(const Step& s) {
    const Constraint& c = constraint(s.constraints[0]);
    Fragment& f = frames_[s.frame];
    const std::string& a = c.between[0];
    const std::string& b = c.between[1];
    const EntityType ta = g_.entity(a).kind.type;
    const geom::LineRep x_axis = geom::make_line(geom::kPi / 2, 0.0);
    switch (c.type) {
      case ConstraintType::Distance:
        f[a] = geom::Point2{0.0, 0.0};
        f[b] = geom::Point2{c.value, 0.0};
        return;
      case ConstraintType::Incidence:
      case ConstraintType::PointLineDistance: {
        const std::string& p = ta == EntityType::Point ? a : b;
        const std::string& o = ta == EntityType::Point ? b : a;
        if (g_.entity(o).kind.type == EntityType::Circle) {
          const double r = *g_.entity(o).radius;
          f[o] = geom::CircleRep{{0.0, 0.0}, r};
          f[p] = geom::Point2{r, 0.0};
        } else {
          f[o] = x_axis;
          f[p] = geom::Point2{0.0, c.type == ConstraintType::Incidence ? 0.0 : c.value};
        }
        return;
      }
      case ConstraintType::Angle:
        f[a] = x_axis;
        f[b] = geom::line_through_point_angle({0.0, 0.0}, x_axis, c.value, 0);
        return;
      default: break;
    }
    throw Error(ErrorCode::UnsupportedStep, "no base placement for constraint", a);
  }

  std::vector<Locus> point_loci(const Fragment& f, const std::string& target, const Constraint& c) const {
    const std::string& other = c.other(target);
    switch (c.type) {
      case ConstraintType::Distance: return {geom::CircleRep{placed<geom::Point2>(f, other), c.value}};
      case ConstraintType::Incidence:
        if (g_.entity(other).kind.type == EntityType::Line) return {placed<geom::LineRep>(f, other)};
        return {placed<geom::CircleRep>(f, other)};
      case ConstraintType::PointLineDistance: {
        const auto& l = placed<geom::LineRep>(f, other);
        if (c.value <= opts_.eps) return {l};
        return {geom::LineRep{l.theta, l.c + c.value}, geom::LineRep{l.theta, l.c - c.value}};
      }
      default: break;
    }
    throw Error(ErrorCode::UnsupportedStep, "no locus for constraint", target);
  }

  // Collects the intersections of one locus from each constraint. `infinite`
  // is set when two loci coincide.
  void meet(const Locus& a, const Locus& b, std::vector<Root>& roots, bool& infinite) const {
    const double eps = opts_.eps;
    auto add = [&](const geom::Intersection& x) {
      for (const auto& p : x.points) roots.push_back({p, x.degenerate});
    };
    try {
      if (auto la = std::get_if<geom::LineRep>(&a)) {
        if (auto lb = std::get_if<geom::LineRep>(&b)) {
          try {
            roots.push_back({geom::intersect_line_line(*la, *lb, eps), false});
          } catch (const Error&) {
            if (geom::line_distance(*la, *lb) <= eps * std::max(1.0, std::abs(la->c))) infinite = true;
          }
          return;
        }
        return add(geom::intersect_line_circle(*la, std::get<geom::CircleRep>(b), eps));
      }
      const auto& ka = std::get<geom::CircleRep>(a);
      if (auto lb = std::get_if<geom::LineRep>(&b)) return add(geom::intersect_line_circle(*lb, ka, eps));
      add(geom::intersect_circle_circle(ka, std::get<geom::CircleRep>(b), eps));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::Coincident) infinite = true;
      else if (err.code() != ErrorCode::EmptyIntersection) throw;
    }
  }

  void place(const Step& s) {
    Fragment& f = frames_[s.frame];
    const Constraint& c1 = constraint(s.constraints[0]);
    const Constraint& c2 = constraint(s.constraints[1]);
    const std::string& t = s.target;
    if (g_.entity(t).kind.type == EntityType::Line) return place_line(f, t, c1, c2);

    std::vector<Root> roots;
    bool infinite = false;
    for (const auto& a : point_loci(f, t, c1))
      for (const auto& b : point_loci(f, t, c2)) meet(a, b, roots, infinite);
    if (infinite)
      throw Error(ErrorCode::UnderDetermined, "loci for '" + t + "' coincide; its position is not fixed", t);
    std::vector<Root> distinct;
    for (const auto& r : roots) {
      auto same = std::find_if(distinct.begin(), distinct.end(), [&](const Root& d) {
        return geom::dist(d.point, r.point) <= opts_.eps * std::max(1.0, geom::norm(r.point));
      });
      if (same == distinct.end()) distinct.push_back(r);
      else same->degenerate = same->degenerate || r.degenerate;
    }
    if (distinct.empty()) throw Error(ErrorCode::EmptyIntersection, "no intersection places '" + t + "'", t);
    order_roots(distinct);
    const Root& pick = distinct[static_cast<std::size_t>(choose(distinct.size()))];
    f[t] = pick.point;
    if (pick.degenerate) degenerate_.push_back(t);
  }

  // A line has an orientation and an offset. Incidences fix a mix of both,
  // angles only the orientation, so two angles leave the offset free.
  void place_line(Fragment& f, const std::string& t, const Constraint& c1, const Constraint& c2) {
    const bool angle1 = c1.type == ConstraintType::Angle;
    const bool angle2 = c2.type == ConstraintType::Angle;
    if (angle1 && angle2)
      throw Error(ErrorCode::UnderDetermined, "angles fix only the direction of '" + t + "', not its offset", t);
    if (!angle1 && !angle2) {
      const auto& p = placed<geom::Point2>(f, c1.other(t));
      const auto& q = placed<geom::Point2>(f, c2.other(t));
      try {
        f[t] = geom::line_through_points(p, q, opts_.eps);
      } catch (const Error&) {
        throw Error(ErrorCode::UnderDetermined, "line '" + t + "' passes through two coincident points", t);
      }
      return;
    }
    const Constraint& through = angle1 ? c2 : c1;
    const Constraint& angle = angle1 ? c1 : c2;
    const auto& p = placed<geom::Point2>(f, through.other(t));
    const auto& ref = placed<geom::LineRep>(f, angle.other(t));
    std::vector<geom::LineRep> lines{geom::line_through_point_angle(p, ref, angle.value, 0)};
    const geom::LineRep other = geom::line_through_point_angle(p, ref, angle.value, 1);
    if (geom::line_distance(lines[0], other) > opts_.eps * std::max(1.0, std::abs(other.c))) lines.push_back(other);
    f[t] = lines[static_cast<std::size_t>(choose(lines.size()))];
  }

  void align(const Step& s) {
    Fragment& dst = frames_[s.frame];
    const Fragment src = frames_.at(s.source);
    const std::string& a = s.entities[0];
    const std::string& b = s.entities[1];
    std::vector<geom::Motion> motions;
    try {
      if (g_.entity(b).kind.type == EntityType::Point) {
        const auto& s1 = placed<geom::Point2>(src, a);
        const auto& s2 = placed<geom::Point2>(src, b);
        const auto& d1 = placed<geom::Point2>(dst, a);
        const auto& d2 = placed<geom::Point2>(dst, b);
        motions = {geom::rigid_align(s1, s2, d1, d2, false, opts_.eps), geom::rigid_align(s1, s2, d1, d2, true, opts_.eps)};
      } else {
        motions = geom::align_point_line(placed<geom::Point2>(src, a), placed<geom::LineRep>(src, b),
                                         placed<geom::Point2>(dst, a), placed<geom::LineRep>(dst, b), opts_.eps);
      }
    } catch (const Error& err) {
      if (err.code() == ErrorCode::CoincidentPoints)
        throw Error(ErrorCode::UnderDetermined, "alignment pair collapsed to a point", a);
      if (err.code() == ErrorCode::LengthMismatch)
        throw Error(ErrorCode::Inconsistent, "clusters disagree on the shared pair", a);
      throw;
    }
    std::vector<Fragment> images;
    for (const auto& m : motions) {
      Fragment image;
      for (const auto& [id, p] : src) image[id] = transform(m, p);
      const bool dup = std::any_of(images.begin(), images.end(), [&](const Fragment& other) {
        return fragment_distance(other, image) <= opts_.eps * 10.0;
      });
      if (!dup) images.push_back(std::move(image));
    }
    if (images.empty()) throw Error(ErrorCode::Inconsistent, "no motion matches the shared pair", a);
    const Fragment& pick = images[static_cast<std::size_t>(choose(images.size()))];
    for (const auto& [id, p] : pick) dst.emplace(id, p);
  }

  double virtual_distance(const VirtualDistance& vd) const {
    if (vd.constraint >= 0) return constraint(vd.constraint).value;
    const Fragment& f = frames_.at(vd.source_frame);
    return geom::dist(placed<geom::Point2>(f, vd.a), placed<geom::Point2>(f, vd.b));
  }

  void triangle(const Step& s) {
    Fragment& f = frames_[s.frame];
    const std::string& p = s.entities[0];
    const std::string& q = s.entities[1];
    const std::string& r = s.entities[2];
    const double pq = virtual_distance(s.virtual_distances[0]);
    const double pr = virtual_distance(s.virtual_distances[1]);
    const double qr = virtual_distance(s.virtual_distances[2]);
    for (auto [d, id] : {std::pair{pq, q}, std::pair{pr, r}, std::pair{qr, r}})
      if (d <= opts_.eps) throw Error(ErrorCode::UnderDetermined, "triangle merge has a zero-length side", id);
    f[p] = geom::Point2{0.0, 0.0};
    f[q] = geom::Point2{pq, 0.0};
    geom::Intersection x;
    try {
      x = geom::intersect_circle_circle({{0.0, 0.0}, pr}, {{pq, 0.0}, qr}, opts_.eps);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::EmptyIntersection) throw Error(ErrorCode::EmptyIntersection, err.what(), r);
      throw Error(ErrorCode::UnderDetermined, err.what(), r);
    }
    std::vector<Root> roots;
    for (const auto& pt : x.points) roots.push_back({pt, x.degenerate});
    order_roots(roots);
    const Root& pick = roots[static_cast<std::size_t>(choose(roots.size()))];
    f[r] = pick.point;
    if (pick.degenerate) degenerate_.push_back(r);
  }

  const Plan& plan_;
  const ConstraintGraph& g_;
  const BranchSelector& selector_;
  ExecOptions opts_;
  std::map<int, Fragment> frames_;
  std::size_t cursor_ = 0;
  std::vector<int> arities_;
  std::vector<int> chosen_;
  std::vector<std::string> degenerate_;
};

}  // namespace detail

/// Signed residual (measured − specified) of every constraint.
inline ResidualReport verify(const ConstraintGraph& g, const Solution& s, double tol = 1e-9) {
  using namespace geom;
  auto get = [&](const std::string& id) -> const Placement& {
    auto it = s.placements.find(id);
    if (it == s.placements.end()) throw Error(ErrorCode::MissingPlacement, "no placement for '" + id + "'", id);
    return it->second;
  };
  for (const auto& e : g.entities()) (void)get(e.id);

  ResidualReport rep;
  for (const auto& c : g.constraints()) {
    const Placement& a = get(c.between[0]);
    const Placement& b = get(c.between[1]);
    auto as_point = [&](const Placement& x, const Placement& y) -> const Point2& {
      return std::holds_alternative<Point2>(x) ? std::get<Point2>(x) : std::get<Point2>(y);
    };
    auto as_line = [&](const Placement& x, const Placement& y) -> const LineRep& {
      return std::holds_alternative<LineRep>(x) ? std::get<LineRep>(x) : std::get<LineRep>(y);
    };
    auto as_circle = [&](const Placement& x, const Placement& y) -> const CircleRep& {
      return std::holds_alternative<CircleRep>(x) ? std::get<CircleRep>(x) : std::get<CircleRep>(y);
    };
    double r = 0.0;
    switch (c.type) {
      case ConstraintType::Distance: r = dist(std::get<Point2>(a), std::get<Point2>(b)) - c.value; break;
      case ConstraintType::PointLineDistance:
        r = std::abs(as_line(a, b).signed_distance(as_point(a, b))) - c.value;
        break;
      case ConstraintType::Incidence:
        if (std::holds_alternative<LineRep>(a) || std::holds_alternative<LineRep>(b)) {
          r = as_line(a, b).signed_distance(as_point(a, b));
        } else {
          const CircleRep& k = as_circle(a, b);
          r = dist(as_point(a, b), k.center) - k.r;
        }
        break;
      case ConstraintType::Angle:
        r = unsigned_angle(std::get<LineRep>(a), std::get<LineRep>(b)) - fold_angle(c.value);
        break;
      case ConstraintType::Tangency:
        if (std::holds_alternative<LineRep>(a) || std::holds_alternative<LineRep>(b)) {
          const CircleRep& k = as_circle(a, b);
          r = std::abs(as_line(a, b).signed_distance(k.center)) - k.r;
        } else {
          const CircleRep& k1 = std::get<CircleRep>(a);
          const CircleRep& k2 = std::get<CircleRep>(b);
          const double d = dist(k1.center, k2.center);
          const double outer = d - (k1.r + k2.r);
          const double inner = d - std::abs(k1.r - k2.r);
          r = std::abs(outer) <= std::abs(inner) ? outer : inner;
        }
        break;
    }
    rep.residuals.push_back(r);
    rep.max_abs = std::max(rep.max_abs, std::abs(r));
  }
  rep.pass = rep.max_abs <= tol;
  return rep;
}

/// Copy of `g` whose valued constraints take the values measured in
/// `placements` (angles folded into (0, π/2]).
inline ConstraintGraph measure(const ConstraintGraph& g, const Fragment& placements) {
  auto cs = g.constraints();
  for (auto& c : cs) {
    const Placement& a = placements.at(c.between[0]);
    const Placement& b = placements.at(c.between[1]);
    switch (c.type) {
      case ConstraintType::Distance: c.value = geom::dist(std::get<geom::Point2>(a), std::get<geom::Point2>(b)); break;
      case ConstraintType::PointLineDistance: {
        const bool line_first = std::holds_alternative<geom::LineRep>(a);
        const auto& l = std::get<geom::LineRep>(line_first ? a : b);
        const auto& p = std::get<geom::Point2>(line_first ? b : a);
        c.value = std::abs(l.signed_distance(p));
        break;
      }
      case ConstraintType::Angle:
        c.value = geom::unsigned_angle(std::get<geom::LineRep>(a), std::get<geom::LineRep>(b));
        break;
      default: break;
    }
  }
  return build_graph(g.entities(), std::move(cs));
}

/// Replays `plan` with the given branch choices. Fails with
/// EmptyIntersection when a construction has no root, UnderDetermined when a
/// step leaves its target free, and Inconsistent when leftover constraints do
/// not hold at `opts.tol`.
inline Solution execute(const Plan& plan, const ConstraintGraph& g, const BranchSelector& branches = {},
                        ExecOptions opts = {}) {
  auto run = detail::Executor(plan, g, branches, opts).run();
  if (run.error) throw *run.error;
  auto report = verify(g, *run.solution, opts.tol);
  if (!report.pass)
    throw Error(ErrorCode::Inconsistent, "residual " + std::to_string(report.max_abs) + " exceeds tolerance");
  return std::move(*run.solution);
}

/// Depth-first search over branch choices in selector order. Returns at most
/// `limit` distinct verifying solutions; throws the first failure if none.
inline std::vector<Solution> enumerate_solutions(const Plan& plan, const ConstraintGraph& g, int limit = 16,
                                                 ExecOptions opts = {}) {
  if (limit < 1) throw Error(ErrorCode::BadValue, "limit must be at least 1");
  std::vector<Solution> out;
  std::optional<Error> first_failure;

  auto explore = [&](auto&& self, BranchSelector prefix) -> void {
    if (static_cast<int>(out.size()) >= limit) return;
    auto run = detail::Executor(plan, g, prefix, opts).run();
    const std::size_t k = prefix.size();
    if (run.arities.size() > k) {
      for (int choice = 0; choice < run.arities[k]; ++choice) {
        BranchSelector next = prefix;
        next.push_back(choice);
        self(self, std::move(next));
      }
      return;
    }
    if (run.error) {
      if (!first_failure) first_failure = run.error;
      return;
    }
    auto report = verify(g, *run.solution, opts.tol);
    if (!report.pass) {
      if (!first_failure)
        first_failure = Error(ErrorCode::Inconsistent, "residual " + std::to_string(report.max_abs) + " exceeds tolerance");
      return;
    }
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Solution& s) {
      return detail::fragment_distance(s.placements, run.solution->placements) <= opts.tol;
    });
    if (!dup) out.push_back(std::move(*run.solution));
  };
  explore(explore, {});
  if (out.empty() && first_failure) throw *first_failure;
  return out;
}

}  // namespace gcs
