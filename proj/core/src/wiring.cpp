#include "milnorforge/wiring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "milnorforge/error.hpp"

namespace milnorforge {

namespace {

struct Point {
  Rational u, v;
  bool operator<(const Point& o) const {
    if (u != o.u) return u < o.u;
    return v < o.v;
  }
};

// Intersection points in the original (u, v) coordinates, each with the
// sorted list of lines through it.
std::map<Point, std::set<std::size_t>> intersection_points(const AffineArrangement& affine) {
  std::map<Point, std::set<std::size_t>> points;
  const auto& lines = affine.lines;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Rational det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
      if (det == 0) continue;
      const Rational u = (lines[i].b * lines[j].c - lines[j].b * lines[i].c) / det;
      const Rational v = (lines[j].a * lines[i].c - lines[i].a * lines[j].c) / det;
      auto& s = points[{u, v}];
      s.insert(i);
      s.insert(j);
    }
  return points;
}

bool admissible(const AffineArrangement& affine,
                const std::map<Point, std::set<std::size_t>>& points, const Rational& t) {
  for (const auto& line : affine.lines)
    if (line.b - t * line.a == 0) return false;
  std::set<Rational> sweeps;
  for (const auto& [p, members] : points)
    if (!sweeps.insert(p.u + t * p.v).second) return false;
  return true;
}

// Enumerates 0, 1, -1, 1/2, -1/2, 1/3, -1/3, 2/3, -2/3, ...
class RotationSequence {
 public:
  Rational next() {
    if (first_) {
      first_ = false;
      return Rational(0);
    }
    if (negative_) {
      negative_ = false;
      return -Rational(num_, den_);
    }
    do {
      if (++num_ > den_) {
        ++den_;
        num_ = 1;
      }
    } while (std::gcd(num_, den_) != 1);
    negative_ = true;
    return Rational(num_, den_);
  }

 private:
  bool first_ = true;
  bool negative_ = true;
  long num_ = 0;
  long den_ = 1;
};

}  // namespace

bool is_admissible_rotation(const AffineArrangement& affine, const Rational& t) {
  return admissible(affine, intersection_points(affine), t);
}

std::vector<Rational> admissible_rotations(const AffineArrangement& affine,
                                           std::size_t count) {
  const auto points = intersection_points(affine);
  std::vector<Rational> out;
  RotationSequence seq;
  while (out.size() < count) {
    Rational t = seq.next();
    if (admissible(affine, points, t)) out.push_back(t);
  }
  return out;
}

WiringDiagram wiring(const AffineArrangement& affine, std::optional<Rational> rotation) {
  const auto points = intersection_points(affine);
  Rational t;
  if (rotation) {
    if (!admissible(affine, points, *rotation))
      throw DomainError("rotation parameter " + rotation->get_str() +
                        " is not admissible: a line becomes vertical or two "
                        "intersection points share a sweep coordinate");
    t = *rotation;
  } else {
    RotationSequence seq;
    do t = seq.next();
    while (!admissible(affine, points, t));
  }

  const std::size_t n = affine.lines.size();
  WiringDiagram w;
  w.rotation = t;
  for (const auto& line : affine.lines) {
    // (a + t b) X + (b - t a) Y + c = 0.
    const Rational denom = line.b - t * line.a;
    w.labels.push_back(line.label);
    w.slopes.push_back(-(line.a + t * line.b) / denom);
    w.intercepts.push_back(-line.c / denom);
  }

  // Top-to-bottom at X -> -infinity: the steepest descent is highest.
  w.initial_order.resize(n);
  std::iota(w.initial_order.begin(), w.initial_order.end(), 0);
  std::sort(w.initial_order.begin(), w.initial_order.end(), [&](std::size_t x, std::size_t y) {
    if (w.slopes[x] != w.slopes[y]) return w.slopes[x] < w.slopes[y];
    return w.intercepts[x] > w.intercepts[y];
  });

  for (const auto& [p, members] : points) {
    WiringVertex v;
    // X = (u + t v) / (1 + t^2), Y = (v - t u) / (1 + t^2).
    const Rational scale = 1 + t * t;
    v.sweep = (p.u + t * p.v) / scale;
    v.height = (p.v - t * p.u) / scale;
    v.wires.assign(members.begin(), members.end());
    // Just left of the vertex the wire with the smallest slope is on top.
    std::sort(v.wires.begin(), v.wires.end(),
              [&](std::size_t x, std::size_t y) { return w.slopes[x] < w.slopes[y]; });
    w.vertices.push_back(std::move(v));
  }
  std::sort(w.vertices.begin(), w.vertices.end(),
            [](const WiringVertex& x, const WiringVertex& y) { return x.sweep < y.sweep; });
  return w;
}

}  // namespace milnorforge
