#include "qwalk/schedule.hpp"

#include <stdexcept>
#include <utility>

namespace qwalk {

std::string fibonacci_word(std::size_t horizon, FibonacciOrdering ordering) {
  if (horizon == 0) {
    throw std::invalid_argument("fibonacci word horizon must be at least 1");
  }
  if (ordering == FibonacciOrdering::older_block_first) {
    // Under s_{k+1} = s_{k-1} ++ s_k consecutive blocks do not share a first
    // letter, but same-parity blocks satisfy s_{k+2} = s_k ++ s_{k+1}, so the
    // odd-indexed chain s_1, s_3, s_5, ... is prefix-stable and defines the
    // infinite word: "1", "12", "12212", ...
    std::string odd = "1";   // s_k, k odd
    std::string even = "2";  // s_{k+1}
    while (odd.size() < horizon) {
      std::string next = odd + even;  // s_{k+2}
      even += next;                   // s_{k+3} = s_{k+1} ++ s_{k+2}
      odd = std::move(next);
    }
    return odd.substr(0, horizon);
  }
  // Under s_{k+1} = s_k ++ s_{k-1} every block from s_2 on is a prefix of the
  // next, giving the word "2", "21", "212", "21221", ...
  std::string prev = "1";
  std::string cur = "2";
  while (cur.size() < horizon) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.substr(0, horizon);
}

CoinSchedule::CoinSchedule(ScheduleKind kind, CoinAngle theta1, CoinAngle theta2,
                           FibonacciOrdering ordering, std::size_t horizon)
    : kind_(kind), theta1_(theta1), theta2_(theta2), ordering_(ordering) {
  word_ = build_word(horizon);
}

CoinSchedule CoinSchedule::constant(CoinAngle theta, std::size_t horizon) {
  return CoinSchedule(ScheduleKind::constant, theta, theta,
                      FibonacciOrdering::older_block_first, horizon);
}

CoinSchedule CoinSchedule::alternating(CoinAngle theta1, CoinAngle theta2, std::size_t horizon) {
  return CoinSchedule(ScheduleKind::alternating, theta1, theta2,
                      FibonacciOrdering::older_block_first, horizon);
}

CoinSchedule CoinSchedule::fibonacci(CoinAngle theta1, CoinAngle theta2, std::size_t horizon,
                                     FibonacciOrdering ordering) {
  return CoinSchedule(ScheduleKind::fibonacci, theta1, theta2, ordering, horizon);
}

std::string CoinSchedule::build_word(std::size_t horizon) const {
  if (horizon == 0) {
    return {};
  }
  switch (kind_) {
    case ScheduleKind::constant:
      return std::string(horizon, '1');
    case ScheduleKind::alternating: {
      std::string word(horizon, '1');
      for (std::size_t i = 1; i < horizon; i += 2) {
        word[i] = '2';
      }
      return word;
    }
    case ScheduleKind::fibonacci:
      return fibonacci_word(horizon, ordering_);
  }
  throw std::logic_error("unreachable schedule kind");
}

void CoinSchedule::extend(std::size_t horizon) {
  if (horizon > word_.size()) {
    word_ = build_word(horizon);
  }
}

CoinAngle CoinSchedule::angle_at(std::size_t step) const {
  if (step >= word_.size()) {
    throw std::out_of_range("schedule word of length " + std::to_string(word_.size()) +
                            " has no angle for step " + std::to_string(step) +
                            "; extend the horizon first");
  }
  return word_[step] == '1' ? theta1_ : theta2_;
}

}  // namespace qwalk
