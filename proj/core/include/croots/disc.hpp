#pragma once

#include "croots/real.hpp"

namespace croots {

/// A dyadic point of the complex plane.
struct Point {
  Real re, im;

  Point() : re(0L), im(0L) {}
  Point(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

/// Closed disc D(c, r) = { x : |x - c| <= r }.
struct Disc {
  Point center;
  Real radius;

  Disc() : radius(0L) {}
  Disc(Point c, Real r) : center(std::move(c)), radius(std::move(r)) {}
};

/// Concentric dilation by a small integer factor, exact.
Disc dilated(const Disc& d, long factor);
/// Exact dilation by 2^e.
Disc dilated2(const Disc& d, long e);

Real dist_upper(const Point& a, const Point& b);
Real dist_lower(const Point& a, const Point& b);

/// Certified emptiness of fa*A intersect fb*B (closed discs); false on ties or
/// when the dyadic rounding cannot decide.
bool discs_disjoint(const Disc& a, const mpq_class& fa, const Disc& b, const mpq_class& fb);

/// Certified containment of fa*A inside fb*B; false when undecidable.
bool disc_inside(const Disc& a, const mpq_class& fa, const Disc& b, const mpq_class& fb);

}  // namespace croots
