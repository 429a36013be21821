#pragma once

#include <cstddef>
#include <string>

#include "qwalk/coin.hpp"

namespace qwalk {

// A two-letter word over {'1', '2'} drives the coin choice per step. The
// Fibonacci word is built from blocks s_1 = "1", s_2 = "2"; the ordering flag
// selects which of the two block concatenations generates the infinite word.
enum class FibonacciOrdering {
  older_block_first,  // s_{k+1} = s_{k-1} ++ s_k
  newer_block_first,  // s_{k+1} = s_k ++ s_{k-1}
};

// Prefix of length `horizon` of the infinite Fibonacci word. Block lengths
// are the Fibonacci numbers 1, 1, 2, 3, 5, ...
std::string fibonacci_word(std::size_t horizon,
                           FibonacciOrdering ordering = FibonacciOrdering::older_block_first);

enum class ScheduleKind { constant, alternating, fibonacci };

// Time-ordered coin-angle sequence: letter word[t] picks the angle applied on
// the step leaving time t.
class CoinSchedule {
 public:
  static CoinSchedule constant(CoinAngle theta, std::size_t horizon);
  static CoinSchedule alternating(CoinAngle theta1, CoinAngle theta2, std::size_t horizon);
  static CoinSchedule fibonacci(CoinAngle theta1, CoinAngle theta2, std::size_t horizon,
                                FibonacciOrdering ordering = FibonacciOrdering::older_block_first);

  ScheduleKind kind() const { return kind_; }
  CoinAngle theta1() const { return theta1_; }
  CoinAngle theta2() const { return theta2_; }
  FibonacciOrdering ordering() const { return ordering_; }

  const std::string& word() const { return word_; }
  std::size_t horizon() const { return word_.size(); }

  // Grows the materialized word; existing letters are preserved (the word is
  // a prefix of the infinite sequence for every kind).
  void extend(std::size_t horizon);

  // Angle applied on the step leaving time `step`; throws past the horizon.
  CoinAngle angle_at(std::size_t step) const;

 private:
  CoinSchedule(ScheduleKind kind, CoinAngle theta1, CoinAngle theta2,
               FibonacciOrdering ordering, std::size_t horizon);

  std::string build_word(std::size_t horizon) const;

  ScheduleKind kind_;
  CoinAngle theta1_;
  CoinAngle theta2_;
  FibonacciOrdering ordering_;
  std::string word_;
};

}  // namespace qwalk
