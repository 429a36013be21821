#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/schedule.hpp"

namespace qwalk {

// Chiral amplitude pair at one lattice site.
struct ChiralPair {
  Complex left;   // a_n(t)
  Complex right;  // b_n(t)
};

// Dense chiral state over a symmetric site window [-capacity, capacity].
// Sites outside the tracked support hold exact zeros, so the parity and
// support invariants of an origin-started walk survive stepping bit-for-bit.
//
// One step applies the coin at every site and shifts the left component one
// site left and the right component one site right:
//   a_n(t+1) = a_{n+1}(t) cos(theta) + b_{n+1}(t) sin(theta)
//   b_n(t+1) = a_{n-1}(t) sin(theta) - b_{n-1}(t) cos(theta)
class WalkState {
 public:
  int time() const { return time_; }
  int min_site() const { return lo_; }
  int max_site() const { return hi_; }

  // Zero pair outside the allocated window.
  ChiralPair amplitude(int site) const;
  double probability(int site) const;
  double total_probability() const;

  // Pre-grows the window so stepping up to |site| <= max_abs_site never
  // reallocates mid-evolution.
  void ensure_capacity(int max_abs_site);

  // In-place step / inverse step. The inverse undoes the shift and reapplies
  // the self-inverse coin:
  //   a_n(t) = cos(theta) a_{n-1}(t+1) + sin(theta) b_{n+1}(t+1)
  //   b_n(t) = sin(theta) a_{n-1}(t+1) - cos(theta) b_{n+1}(t+1)
  void advance(CoinAngle theta);
  void retreat(CoinAngle theta);

 private:
  WalkState() = default;
  friend WalkState initial_state(Complex alpha, Complex beta);

  std::vector<ChiralPair> amps_;
  std::vector<ChiralPair> scratch_;
  int capacity_ = 0;  // arrays hold sites -capacity_..capacity_
  int time_ = 0;
  int lo_ = 0;  // support bounds: amplitudes outside [lo_, hi_] are exact zeros
  int hi_ = 0;
};

// State at time 0 concentrated at the origin. Requires |alpha|^2 + |beta|^2
// = 1 within 1e-12.
WalkState initial_state(Complex alpha, Complex beta);

WalkState step(const WalkState& state, CoinAngle theta);
WalkState step_adjoint(const WalkState& state, CoinAngle theta);

// Applies `steps` steps; the angle for the step leaving time t is the
// schedule's word letter at position t, so the word must cover
// state.time() + steps entries.
WalkState evolve(WalkState initial, const CoinSchedule& schedule, int steps);

// Same as evolve, invoking observe(state) at the starting time and after
// every step. Used for trajectory series (return probability, spread).
WalkState evolve_observed(WalkState initial, const CoinSchedule& schedule, int steps,
                          const std::function<void(const WalkState&)>& observe);

}  // namespace qwalk
