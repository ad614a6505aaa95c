#include "croots/subdivision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "croots/counting.hpp"

namespace croots {

namespace {

// w0 * k / 2^(depth+1) as an exact dyadic
Real scaled(const Real& w0, const mpz_class& k, int depth) {
  mpfr_prec_t prec =
      w0.precision() + static_cast<mpfr_prec_t>(mpz_sizeinbase(k.get_mpz_t(), 2)) + 4;
  Real out = Real::zero(prec);
  mpfr_mul_z(out.raw(), w0.raw(), k.get_mpz_t(), MPFR_RNDN);
  mpfr_mul_2si(out.raw(), out.raw(), -(depth + 1), MPFR_RNDN);
  return out;
}

}  // namespace

Disc containing_disc(const Box& b) {
  Real r = b.width;
  mpfr_prec_t prec = r.precision() + 4;
  Real rr = Real::zero(prec);
  mpfr_mul_si(rr.raw(), r.raw(), 3, MPFR_RNDN);
  mpfr_mul_2si(rr.raw(), rr.raw(), -2, MPFR_RNDN);  // (3/4) w, exact
  return {b.center, std::move(rr)};
}

Grid::Grid(Real w0) : w0_(std::move(w0)) {
  if (w0_.sign() <= 0) throw std::invalid_argument("Grid: width must be positive");
}

Real Grid::box_width(int depth) const {
  Real w = w0_;
  mpfr_mul_2si(w.raw(), w.raw(), -depth, MPFR_RNDN);
  return w;
}

Point Grid::box_center(int depth, const mpz_class& ix, const mpz_class& iy) const {
  // center = -w0/2 + (i + 1/2) * w0 / 2^depth = w0 * (2i + 1 - 2^depth) / 2^(depth+1)
  mpz_class shift = 1;
  shift <<= depth;
  mpz_class tx = 2 * ix + 1 - shift;
  mpz_class ty = 2 * iy + 1 - shift;
  return {scaled(w0_, tx, depth), scaled(w0_, ty, depth)};
}

Box Grid::box(int depth, const mpz_class& ix, const mpz_class& iy) const {
  return {box_center(depth, ix, iy), box_width(depth)};
}

Component Component::make(int depth, std::vector<Cell> cells, int strikes) {
  if (cells.empty()) throw std::invalid_argument("Component: at least one box required");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Component c;
  c.depth_ = depth;
  c.strikes_ = strikes;
  c.ix_min_ = c.ix_max_ = cells.front().first;
  c.iy_min_ = c.iy_max_ = cells.front().second;
  for (const auto& [x, y] : cells) {
    if (x < c.ix_min_) c.ix_min_ = x;
    if (x > c.ix_max_) c.ix_max_ = x;
    if (y < c.iy_min_) c.iy_min_ = y;
    if (y > c.iy_max_) c.iy_max_ = y;
  }
  mpz_class ex = c.ix_max_ - c.ix_min_ + 1;
  mpz_class ey = c.iy_max_ - c.iy_min_ + 1;
  c.side_ = ex > ey ? ex : ey;
  // minimal feasible anchor: covers the cells, stays inside B_0, and
  // minimizes both center coordinates
  mpz_class zero = 0;
  c.bx_ = c.ix_max_ + 1 - c.side_;
  if (c.bx_ < zero) c.bx_ = zero;
  c.by_ = c.iy_max_ + 1 - c.side_;
  if (c.by_ < zero) c.by_ = zero;
  c.cells_ = std::move(cells);
  return c;
}

Box Component::component_box(const Grid& g) const {
  // the component box anchor lives on the depth grid; its center is the
  // anchor plus side/2 box widths
  mpz_class shift = 1;
  shift <<= depth_;
  mpz_class tx = 2 * bx_ + side_ - shift;
  mpz_class ty = 2 * by_ + side_ - shift;
  Real cx = scaled(g.root_width(), tx, depth_);
  Real cy = scaled(g.root_width(), ty, depth_);
  Real w(g.root_width().precision() +
         static_cast<mpfr_prec_t>(mpz_sizeinbase(side_.get_mpz_t(), 2)) + 4);
  mpfr_mul_z(w.raw(), g.root_width().raw(), side_.get_mpz_t(), MPFR_RNDN);
  mpfr_mul_2si(w.raw(), w.raw(), -depth_, MPFR_RNDN);
  return {{std::move(cx), std::move(cy)}, std::move(w)};
}

Disc Component::containing_disc(const Grid& g) const { return croots::containing_disc(component_box(g)); }

bool Component::radius_greater(const Component& a, const Component& b) {
  // side_a * 2^-depth_a > side_b * 2^-depth_b, exactly
  mpz_class lhs = a.side_ << std::max(b.depth_ - a.depth_, 0);
  mpz_class rhs = b.side_ << std::max(a.depth_ - b.depth_, 0);
  return lhs > rhs;
}

std::vector<Component> group_components(int depth, std::vector<Component::Cell> cells,
                                        int strikes) {
  std::set<Component::Cell> pending(cells.begin(), cells.end());
  std::vector<Component> out;
  while (!pending.empty()) {
    std::vector<Component::Cell> group;
    std::vector<Component::Cell> stack{*pending.begin()};
    pending.erase(pending.begin());
    while (!stack.empty()) {
      Component::Cell cur = stack.back();
      stack.pop_back();
      group.push_back(cur);
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
          if (dx == 0 && dy == 0) continue;
          Component::Cell nb{cur.first + dx, cur.second + dy};
          auto it = pending.find(nb);
          if (it != pending.end()) {
            pending.erase(it);
            stack.push_back(nb);
          }
        }
    }
    out.push_back(Component::make(depth, std::move(group), strikes));
  }
  return out;
}

std::vector<Component> quadrisect(const OraclePair& o, const Component& c, const Grid& g,
                                  Telemetry* tel) {
  std::vector<Component::Cell> keep;
  int depth = c.depth() + 1;
  for (const auto& [ix, iy] : c.cells()) {
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy) {
        mpz_class cx = 2 * ix + dx, cy = 2 * iy + dy;
        Disc d = containing_disc(g.box(depth, cx, cy));
        if (tel) tel->subdivision_exclusion_tests += 1;
        if (exclusion_test(o, d, tel) == -1) keep.emplace_back(std::move(cx), std::move(cy));
      }
  }
  if (keep.empty()) return {};
  return group_components(depth, std::move(keep), c.strikes());
}

bool is_separated(const Component& c, const std::vector<Component>& queue,
                  const mpq_class& gamma, const Grid& g) {
  Disc mine = c.containing_disc(g);
  for (const Component& other : queue) {
    if (!discs_disjoint(mine, gamma, other.containing_disc(g), mpq_class(1))) return false;
  }
  return true;
}

bool disc_separated_from(const Disc& d, const mpq_class& gamma_disc,
                         const std::vector<Component>& queue, const mpq_class& gamma_set,
                         const Grid& g) {
  for (const Component& other : queue) {
    if (!discs_disjoint(d, gamma_disc, other.containing_disc(g), gamma_set)) return false;
  }
  return true;
}

}  // namespace croots
