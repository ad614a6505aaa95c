#pragma once

#include <vector>

#include "croots/disc.hpp"
#include "croots/oracle.hpp"
#include "croots/telemetry.hpp"

namespace croots {

/// Square complex interval B(c, w) with dyadic center and width.
struct Box {
  Point center;
  Real width;
};

/// Containing disc D(c, (3/4) w) of a box.
Disc containing_disc(const Box& b);

/// The dyadic frame of the subdivision: B_0 = B(0, w0).  A box at depth n is
/// addressed by grid indices (ix, iy) in [0, 2^n)^2 with width w0 / 2^n; all
/// derived coordinates are exact dyadics.
class Grid {
 public:
  explicit Grid(Real w0);

  const Real& root_width() const { return w0_; }
  Real box_width(int depth) const;
  Box box(int depth, const mpz_class& ix, const mpz_class& iy) const;
  Point box_center(int depth, const mpz_class& ix, const mpz_class& iy) const;

 private:
  Real w0_;
};

/// Connected set of equal-width sub-boxes of B_0 together with its component
/// box (smallest covering square inside B_0 whose center minimizes both
/// coordinates) and containing disc.
class Component {
 public:
  using Cell = std::pair<mpz_class, mpz_class>;

  static Component make(int depth, std::vector<Cell> cells, int strikes = 0);

  int depth() const { return depth_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int strikes() const { return strikes_; }
  void set_strikes(int s) { strikes_ = s; }

  /// Side of the component box in box units.
  const mpz_class& side() const { return side_; }
  Box component_box(const Grid& g) const;
  Disc containing_disc(const Grid& g) const;

  /// Deterministic priority comparison: decreasing containing-disc radius,
  /// i.e. decreasing side * 2^-depth.
  static bool radius_greater(const Component& a, const Component& b);

 private:
  int depth_ = 0;
  std::vector<Cell> cells_;  // sorted, unique
  int strikes_ = 0;
  mpz_class ix_min_, ix_max_, iy_min_, iy_max_;
  mpz_class side_;
  mpz_class bx_, by_;  // component box anchor (lower-left), box units
};

/// Groups cells of equal depth into 8-connected components.
std::vector<Component> group_components(int depth, std::vector<Component::Cell> cells,
                                        int strikes = 0);

/// Keeps the children whose containing disc the exclusion test cannot clear
/// and regroups them into components.
std::vector<Component> quadrisect(const OraclePair& o, const Component& c, const Grid& g,
                                  Telemetry* tel = nullptr);

/// gamma-separation of a component from a queue of components.
bool is_separated(const Component& c, const std::vector<Component>& queue,
                  const mpq_class& gamma, const Grid& g);

/// gamma_disc-separation of a disc from the gamma_set-dilations of the queue's
/// containing discs (Algo 7 step 15 predicates).
bool disc_separated_from(const Disc& d, const mpq_class& gamma_disc,
                         const std::vector<Component>& queue, const mpq_class& gamma_set,
                         const Grid& g);

}  // namespace croots
