#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "distchrom/core.hpp"

namespace distchrom {

/// Periodic coloring pattern: word[i] is the color of every integer congruent
/// to i modulo the word length. Colors are positive and need not be
/// contiguous, though every constructor here emits 1..max.
struct PatternWord {
  std::vector<int> word;

  Int period() const { return static_cast<Int>(word.size()); }
  int max_color() const;
  int color_count() const;  // number of distinct colors

  bool operator==(const PatternWord&) const = default;
};

/// Text form: plain digit string when every color is single-digit
/// ("12345"), otherwise '.'-separated decimal integers ("1.2.3.4.5.6.7.8.9.10").
std::string pattern_to_text(const PatternWord& w);

/// Inverse of pattern_to_text. Throws ParseError on malformed input.
PatternWord parse_pattern_text(std::string_view text);

struct Violation {
  Int index;     // i
  Int distance;  // offending s in S
  Int other;     // (i + s) mod p
};

struct VerificationReport {
  bool valid;
  Int period;
  int color_count;
  std::vector<Violation> violations;       // same color at distance s
  std::vector<Int> period_divisors;        // s in S with s % p == 0
};

/// Checks that the periodic extension of w properly colors G(S): no s in S
/// is a multiple of the period, and w[i] != w[(i+s) mod p] everywhere. Runs
/// on indices only; no graph is materialized. Reports every violation.
VerificationReport verify(const PatternWord& w, const SquareSet& s);

/// The word 1 2 ... p. Properly colors G(S) iff no element of S is a
/// multiple of p, in which case vertices s apart always differ mod p.
PatternWord mod_p_pattern(Int p);

/// Periodic coloring of G({1,a}^2) over at most 6 colors, a >= 3.
/// Three cases by a mod 3 (blocks written left to right):
///   a = 3k:    (123)^k (456)^(k-1) 45     period 2a-1
///   a = 3k+1:  (123)^k (456)^k            period 2a-2
///   a = 3k+2:  (123)^(k+1) (456)^k 45     period 2a+1
PatternWord pattern_1a(Int a);

/// Periodic coloring of G({1,a,a+1}^2) over at most 9 colors, a >= 3.
///   a = 3k:    (123)^k (456)^k (789)^k                  period 3a
///   a = 3k+1:  (123)^k (456)^k 7123 (789)^(k-1) 4568    period 3a+2
///   a = 3k+2:  (123)^(k+1) (456)^(k+1) (789)^k 7        period 3a+1
PatternWord pattern_1aa1(Int a);

/// Periodic coloring of G({1,...,m,a}^2) over at most 4m+2 colors, for
/// m >= 2 and a > m+1. Write a = (2m+1)k + r, B = 1..(2m+1),
/// C = (2m+2)..(4m+2); four cases by r:
///   r < m:       B^k C^(k-1) (2m+2)..(3m+r+2)   period 2a-r-m
///   r = m:       B^k C^k                        period 2a-2m
///   r = m+1:     B^(k+1) C^k (2m+2)(2m+3)       period 2a+1
///   r >= m+2:    B^(k+1) C^k (2m+2)..(m+r+1)    period 2a-r+m+1
/// a = m+1 is rejected with a distinct error: that set is {1..m+1}, colored
/// optimally by the (2m+3)-periodic rainbow mod_p_pattern(2m+3).
PatternWord pattern_1ma(Int m, Int a);

/// Each letter repeated `factor` times. If w properly colors G(S) then the
/// stretched word properly colors G(factor*S), and conversely: scaling the
/// distance set by g decomposes the integers into g congruence classes, each
/// an isomorphic copy colored by w. Used to undo gcd normalization.
PatternWord stretch_pattern(const PatternWord& w, Int factor);

/// Greedy bound: first-fit along the integers never needs more than |S|+1
/// colors on G(S), so chi(G(S)) <= |S|+1.
Int first_fit_bound(const SquareSet& s);

}  // namespace distchrom
