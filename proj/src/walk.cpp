#include "qwalk/walk.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

int window_index(int site, int capacity) { return site + capacity; }

}  // namespace

WalkState initial_state(Complex alpha, Complex beta) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "initial amplitudes must satisfy |alpha|^2 + |beta|^2 = 1 within 1e-12, got norm "
        << norm;
    throw std::invalid_argument(msg.str());
  }
  WalkState state;
  state.amps_.assign(1, ChiralPair{alpha, beta});
  state.scratch_.assign(1, ChiralPair{});
  return state;
}

ChiralPair WalkState::amplitude(int site) const {
  if (std::abs(site) > capacity_) {
    return {};
  }
  return amps_[window_index(site, capacity_)];
}

double WalkState::probability(int site) const {
  const ChiralPair amp = amplitude(site);
  return std::norm(amp.left) + std::norm(amp.right);
}

double WalkState::total_probability() const {
  double total = 0.0;
  for (int n = lo_; n <= hi_; ++n) {
    total += probability(n);
  }
  return total;
}

void WalkState::ensure_capacity(int max_abs_site) {
  if (max_abs_site <= capacity_) {
    return;
  }
  std::vector<ChiralPair> grown(2 * static_cast<std::size_t>(max_abs_site) + 1);
  for (int n = lo_; n <= hi_; ++n) {
    grown[window_index(n, max_abs_site)] = amps_[window_index(n, capacity_)];
  }
  amps_ = std::move(grown);
  // A fresh all-zero scratch keeps the exact-zero guarantee outside the next
  // sweep range.
  scratch_.assign(amps_.size(), ChiralPair{});
  capacity_ = max_abs_site;
}

void WalkState::advance(CoinAngle theta) {
  const double c = theta.cos();
  const double s = theta.sin();
  const int lo = lo_ - 1;
  const int hi = hi_ + 1;
  // Reads touch lo-1 .. hi+1; grow the window first so indexing stays valid.
  ensure_capacity(std::max(std::abs(lo), std::abs(hi)) + 1);
  const ChiralPair* src = amps_.data() + capacity_;
  ChiralPair* dst = scratch_.data() + capacity_;
  for (int n = lo; n <= hi; ++n) {
    const ChiralPair& up = src[n + 1];
    const ChiralPair& dn = src[n - 1];
    dst[n] = {c * up.left + s * up.right, s * dn.left - c * dn.right};
  }
  // The retired buffer's stale non-zeros all lie inside [lo_, hi_], which the
  // next sweep [lo_-2, hi_+2] covers, so swapping keeps exact zeros exact.
  amps_.swap(scratch_);
  lo_ = lo;
  hi_ = hi;
  ++time_;
}

void WalkState::retreat(CoinAngle theta) {
  if (time_ == 0) {
    throw std::logic_error("cannot step a time-zero state backwards");
  }
  const double c = theta.cos();
  const double s = theta.sin();
  const int lo = lo_ - 1;
  const int hi = hi_ + 1;
  ensure_capacity(std::max(std::abs(lo), std::abs(hi)) + 1);
  const ChiralPair* src = amps_.data() + capacity_;
  ChiralPair* dst = scratch_.data() + capacity_;
  for (int n = lo; n <= hi; ++n) {
    const Complex a_prev = src[n - 1].left;
    const Complex b_next = src[n + 1].right;
    dst[n] = {c * a_prev + s * b_next, s * a_prev - c * b_next};
  }
  amps_.swap(scratch_);
  lo_ = lo;
  hi_ = hi;
  --time_;
}

WalkState step(const WalkState& state, CoinAngle theta) {
  WalkState next = state;
  next.advance(theta);
  return next;
}

WalkState step_adjoint(const WalkState& state, CoinAngle theta) {
  WalkState prev = state;
  prev.retreat(theta);
  return prev;
}

namespace {

void require_covered(const CoinSchedule& schedule, int first_step, int steps) {
  if (steps < 0) {
    throw std::invalid_argument("step count must be non-negative");
  }
  const std::size_t needed = static_cast<std::size_t>(first_step) + static_cast<std::size_t>(steps);
  if (schedule.horizon() < needed) {
    throw std::invalid_argument("schedule word of length " + std::to_string(schedule.horizon()) +
                                " does not cover " + std::to_string(needed) +
                                " steps; extend the horizon first");
  }
}

}  // namespace

WalkState evolve(WalkState initial, const CoinSchedule& schedule, int steps) {
  require_covered(schedule, initial.time(), steps);
  initial.ensure_capacity(std::max(std::abs(initial.min_site()), std::abs(initial.max_site())) +
                          steps + 1);
  for (int i = 0; i < steps; ++i) {
    initial.advance(schedule.angle_at(static_cast<std::size_t>(initial.time())));
  }
  return initial;
}

WalkState evolve_observed(WalkState initial, const CoinSchedule& schedule, int steps,
                          const std::function<void(const WalkState&)>& observe) {
  require_covered(schedule, initial.time(), steps);
  initial.ensure_capacity(std::max(std::abs(initial.min_site()), std::abs(initial.max_site())) +
                          steps + 1);
  observe(initial);
  for (int i = 0; i < steps; ++i) {
    initial.advance(schedule.angle_at(static_cast<std::size_t>(initial.time())));
    observe(initial);
  }
  return initial;
}

}  // namespace qwalk
