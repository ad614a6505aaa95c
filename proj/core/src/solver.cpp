#include "croots/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

#include "croots/cauchy.hpp"
#include "croots/compression.hpp"
#include "croots/counting.hpp"
#include "croots/radii.hpp"
#include "croots/subdivision.hpp"
#include "croots/verification.hpp"

namespace croots {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Queue sorted by decreasing containing-disc radius, FIFO among ties.
class ComponentQueue {
 public:
  void push(Component c) {
    auto it = std::upper_bound(
        items_.begin(), items_.end(), c,
        [](const Component& a, const Component& b) { return Component::radius_greater(a, b); });
    items_.insert(it, std::move(c));
  }
  Component pop() {
    Component c = std::move(items_.front());
    items_.erase(items_.begin());
    return c;
  }
  bool empty() const { return items_.empty(); }
  const std::vector<Component>& items() const { return items_; }

 private:
  std::vector<Component> items_;
};

// Cells of c whose closed box meets the closed disc (conservative inclusion).
std::vector<Component::Cell> cells_meeting(const Component& c, const Grid& g, const Disc& d) {
  std::vector<Component::Cell> out;
  Real half_w = g.box_width(c.depth());
  mpfr_mul_2si(half_w.raw(), half_w.raw(), -1, MPFR_RNDU);
  for (const auto& cell : c.cells()) {
    Point bc = g.box_center(c.depth(), cell.first, cell.second);
    // max-norm distance from the disc center to the box
    Real dx = Real::zero(96), dy = Real::zero(96);
    mpfr_sub(dx.raw(), bc.re.raw(), d.center.re.raw(), MPFR_RNDA);
    mpfr_abs(dx.raw(), dx.raw(), MPFR_RNDU);
    mpfr_sub(dx.raw(), dx.raw(), half_w.raw(), MPFR_RNDD);
    if (dx.sign() < 0) mpfr_set_zero(dx.raw(), 1);
    mpfr_sub(dy.raw(), bc.im.raw(), d.center.im.raw(), MPFR_RNDA);
    mpfr_abs(dy.raw(), dy.raw(), MPFR_RNDU);
    mpfr_sub(dy.raw(), dy.raw(), half_w.raw(), MPFR_RNDD);
    if (dy.sign() < 0) mpfr_set_zero(dy.raw(), 1);
    Real dist = Real::zero(96);
    mpfr_hypot(dist.raw(), dx.raw(), dy.raw(), MPFR_RNDD);
    if (!(dist > d.radius)) out.push_back(cell);
  }
  return out;
}

}  // namespace

Disc refine_disc(const OraclePair& o, const Disc& disc, long m, Telemetry* tel) {
  if (m < 1) throw std::invalid_argument("refine_disc: m >= 1 required");
  const long d = o.p.degree;
  Precision L = prec_bound(d, disc.radius, Real(0.25, 16), mpq_class(2));
  if (tel) tel->note_precision(L.bits());
  auto [pv, dpv] = o.both(exact_point(disc.center), L);
  if (tel) tel->oracle_evaluations += 2;

  mpfr_prec_t wp = static_cast<mpfr_prec_t>(L.bits() + 64);
  ComplexInterval step;
  try {
    step = ci_div(pv, dpv, wp);
  } catch (const DivisorContainsZero&) {
    return disc;  // derivative enclosure straddles zero, keep the disc
  }
  // c+ = c - m p(c)/p'(c), midpoint of the interval step
  Real cx = Real::zero(wp), cy = Real::zero(wp);
  mpfr_mul_si(cx.raw(), step.re.center.raw(), m, MPFR_RNDN);
  mpfr_sub(cx.raw(), disc.center.re.raw(), cx.raw(), MPFR_RNDN);
  mpfr_mul_si(cy.raw(), step.im.center.raw(), m, MPFR_RNDN);
  mpfr_sub(cy.raw(), disc.center.im.raw(), cy.raw(), MPFR_RNDN);
  Point next(std::move(cx), std::move(cy));
  if (dist_upper(disc.center, next) > disc.radius) return disc;  // stepped out, reject

  for (long shift : {-2, -1}) {  // r/4 first, then r/2
    Real r = disc.radius;
    mpfr_mul_2si(r.raw(), r.raw(), shift, MPFR_RNDN);
    Disc candidate(next, std::move(r));
    if (count_roots(o, candidate, mpq_class(4, 3), tel) == static_cast<int>(m))
      return candidate;
  }
  return disc;
}

ClusterReport solve(const OraclePair& o, const Real& eps, SolveMode mode,
                    const SolveOptions& options, Telemetry* external_tel) {
  auto t0 = Clock::now();
  Telemetry local_tel;
  Telemetry* tel = external_tel != nullptr ? external_tel : &local_tel;

  ClusterReport report;
  report.mode = mode;
  report.epsilon = eps;
  if (eps.sign() <= 0) {
    report.diagnostic = "eps must be positive";
    return report;
  }

  Real half_eps = eps;
  mpfr_mul_2si(half_eps.raw(), half_eps.raw(), -1, MPFR_RNDN);

  double t_stage = 0;
  auto finish = [&](bool ok, std::string diag) {
    report.success = ok;
    report.diagnostic = std::move(diag);
    report.stats.exclusion_tests = tel->subdivision_exclusion_tests.load();
    report.stats.max_precision_bits = tel->max_precision_bits.load();
    report.stats.t_stage_s = t_stage;
    report.stats.t_total_s = seconds_since(t0);
    return report;
  };

  Real r0 = Real::zero(64);
  try {
    r0 = largest_root_radius_bound(o, tel);
  } catch (const NoConvergence& e) {
    return finish(false, e.what());
  }
  Real w0 = r0;
  mpfr_mul_2si(w0.raw(), w0.raw(), 1, MPFR_RNDN);  // B_0 = B(0, 2 r0)
  Grid grid(w0);

  // depth cap: boxes far below eps signal a subdivision that cannot settle
  long max_depth;
  {
    Real ratio = Real::zero(64);
    mpfr_div(ratio.raw(), w0.raw(), eps.raw(), MPFR_RNDU);
    mpfr_log2(ratio.raw(), ratio.raw(), MPFR_RNDU);
    max_depth = std::max<long>(4, ratio.to_long_round()) + options.extra_depth;
  }

  ComponentQueue queue;
  queue.push(Component::make(0, {{mpz_class(0), mpz_class(0)}}));
  std::vector<Cluster> accepted;

  const mpq_class theta2(2);
  long long pops = 0;

  while (!queue.empty()) {
    if (++pops > options.max_queue_pops)
      return finish(false, "queue pop cap reached without settling");
    Component c = queue.pop();
    if (c.depth() > max_depth)
      return finish(false, "subdivision depth cap reached without settling");

    if (is_separated(c, queue.items(), mpq_class(4), grid)) {
      Disc around = dilated2(c.containing_disc(grid), 1);  // 2 Delta(C)
      long m = -1;
      Disc shrunk;
      auto stage_t0 = Clock::now();
      if (mode == SolveMode::kCompression) {
        CompressionResult res = compress(o, around, half_eps, tel);
        m = res.m;
        if (res.disc.has_value()) shrunk = *res.disc;
      } else {
        int counted = count_roots_isolated(o, around, theta2, tel);
        m = counted;
        if (counted > 0) shrunk = refine_disc(o, c.containing_disc(grid), counted, tel);
      }
      t_stage += seconds_since(stage_t0);

      if (m <= 0) {
        // transient exclusion-test failures near component boundaries: allow
        // one quadrisection retry per lineage before declaring failure
        if (c.strikes() == 0) {
          c.set_strikes(1);
          for (Component& child : quadrisect(o, c, grid, tel)) queue.push(std::move(child));
          continue;
        }
        report.clusters = accepted;
        return finish(false, "component produced a non-positive count twice");
      }

      if (shrunk.radius <= half_eps) {
        Disc out = dilated2(shrunk, 1);  // D(c, 2r)
        bool sep3 = disc_separated_from(out, mpq_class(3), queue.items(), mpq_class(2), grid);
        bool sep1 = disc_separated_from(out, mpq_class(1), queue.items(), mpq_class(6), grid);
        bool clear_of_accepted = true;
        for (const Cluster& acc : accepted) {
          if (!discs_disjoint(out, mpq_class(3), acc.disc, mpq_class(1)) ||
              !discs_disjoint(out, mpq_class(1), acc.disc, mpq_class(3))) {
            clear_of_accepted = false;
            break;
          }
        }
        if (sep3 && sep1 && clear_of_accepted) {
          accepted.push_back({out, m});
          continue;
        }
      }
      // keep only the part of the component meeting the shrunken disc
      // (prevents artificial inflation when the stage made progress)
      std::vector<Component::Cell> met = cells_meeting(c, grid, shrunk);
      if (!met.empty() && met.size() < c.cells().size()) {
        std::vector<Component> parts = group_components(c.depth(), std::move(met), c.strikes());
        if (parts.size() == 1) c = std::move(parts.front());
      }
    }
    for (Component& child : quadrisect(o, c, grid, tel)) queue.push(std::move(child));
  }

  report.clusters = accepted;

  auto verify_t0 = Clock::now();
  Real scale = r0;
  mpfr_mul_si(scale.raw(), scale.raw(), 3, MPFR_RNDN);
  mpfr_mul_2si(scale.raw(), scale.raw(), -1, MPFR_RNDN);  // radius of Delta(B_0)
  VerificationResult ver = verify_output(o, accepted, o.p.degree, scale, tel);
  report.stats.t_verify_s = seconds_since(verify_t0);

  if (!ver.ok) return finish(false, ver.diagnostic);
  return finish(true, "");
}

}  // namespace croots
