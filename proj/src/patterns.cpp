#include "distchrom/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace distchrom {

int PatternWord::max_color() const {
  int m = 0;
  for (int c : word) m = std::max(m, c);
  return m;
}

int PatternWord::color_count() const {
  std::set<int> s(word.begin(), word.end());
  return static_cast<int>(s.size());
}

std::string pattern_to_text(const PatternWord& w) {
  std::string out;
  if (w.max_color() < 10) {
    for (int c : w.word) out += static_cast<char>('0' + c);
  } else {
    for (size_t i = 0; i < w.word.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(w.word[i]);
    }
  }
  return out;
}

PatternWord parse_pattern_text(std::string_view text) {
  if (text.empty()) throw ParseError("empty pattern");
  std::vector<int> word;
  if (text.find('.') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t dot = text.find('.', pos);
      std::string_view tok = text.substr(
          pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw ParseError("bad pattern token '" + std::string(tok) + "'");
      if (value < 1) throw ParseError("colors must be positive");
      word.push_back(value);
      if (dot == std::string_view::npos) break;
      pos = dot + 1;
      if (pos == text.size()) throw ParseError("trailing '.' in pattern");
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw ParseError(std::string("bad pattern character '") + ch + "'");
      word.push_back(ch - '0');
    }
  }
  return PatternWord{std::move(word)};
}

VerificationReport verify(const PatternWord& w, const SquareSet& s) {
  VerificationReport rep;
  rep.period = w.period();
  rep.color_count = w.color_count();
  if (rep.period == 0) throw std::invalid_argument("empty pattern");
  Int p = rep.period;
  for (Int d : s.elems()) {
    if (d % p == 0) {
      rep.period_divisors.push_back(d);
      continue;  // every index would trivially collide with itself
    }
    for (Int i = 0; i < p; ++i) {
      Int j = (i + d) % p;
      if (w.word[i] == w.word[j]) rep.violations.push_back({i, d, j});
    }
  }
  rep.valid = rep.violations.empty() && rep.period_divisors.empty();
  return rep;
}

namespace {

void run(std::vector<int>& w, int first, int last) {
  for (int c = first; c <= last; ++c) w.push_back(c);
}

void run_times(std::vector<int>& w, int first, int last, Int times) {
  for (Int t = 0; t < times; ++t) run(w, first, last);
}

void check_period(const std::vector<int>& w, Int expect, const char* what) {
  if (static_cast<Int>(w.size()) != expect)
    throw InternalCheckFailure(std::string(what) + ": built period " +
                               std::to_string(w.size()) + ", expected " +
                               std::to_string(expect));
}

}  // namespace

PatternWord mod_p_pattern(Int p) {
  if (p < 1) throw std::invalid_argument("period must be >= 1");
  std::vector<int> w;
  w.reserve(static_cast<size_t>(p));
  run(w, 1, static_cast<int>(p));
  return PatternWord{std::move(w)};
}

PatternWord pattern_1a(Int a) {
  if (a < 3) throw UnsupportedFamily("pattern for {1,a} needs a >= 3");
  std::vector<int> w;
  switch (a % 3) {
    case 0: {
      Int k = a / 3;
      run_times(w, 1, 3, k);
      run_times(w, 4, 6, k - 1);
      run(w, 4, 5);
      check_period(w, 2 * a - 1, "{1,a} case a=3k");
      break;
    }
    case 1: {
      Int k = (a - 1) / 3;
      run_times(w, 1, 3, k);
      run_times(w, 4, 6, k);
      check_period(w, 2 * a - 2, "{1,a} case a=3k+1");
      break;
    }
    default: {
      Int k = (a - 2) / 3;
      run_times(w, 1, 3, k + 1);
      run_times(w, 4, 6, k);
      run(w, 4, 5);
      check_period(w, 2 * a + 1, "{1,a} case a=3k+2");
      break;
    }
  }
  return PatternWord{std::move(w)};
}

PatternWord pattern_1aa1(Int a) {
  if (a < 3) throw UnsupportedFamily("pattern for {1,a,a+1} needs a >= 3");
  std::vector<int> w;
  switch (a % 3) {
    case 0: {
      Int k = a / 3;
      run_times(w, 1, 3, k);
      run_times(w, 4, 6, k);
      run_times(w, 7, 9, k);
      check_period(w, 3 * a, "{1,a,a+1} case a=3k");
      break;
    }
    case 1: {
      Int k = (a - 1) / 3;
      run_times(w, 1, 3, k);
      run_times(w, 4, 6, k);
      w.push_back(7);
      run(w, 1, 3);
      run_times(w, 7, 9, k - 1);
      w.insert(w.end(), {4, 5, 6, 8});
      check_period(w, 3 * a + 2, "{1,a,a+1} case a=3k+1");
      break;
    }
    default: {
      Int k = (a - 2) / 3;
      run_times(w, 1, 3, k + 1);
      run_times(w, 4, 6, k + 1);
      run_times(w, 7, 9, k);
      w.push_back(7);
      check_period(w, 3 * a + 1, "{1,a,a+1} case a=3k+2");
      break;
    }
  }
  return PatternWord{std::move(w)};
}

PatternWord pattern_1ma(Int m, Int a) {
  if (m < 2) throw UnsupportedFamily("pattern for {1..m,a} needs m >= 2");
  if (a <= m) throw UnsupportedFamily("pattern for {1..m,a} needs a > m");
  if (a == m + 1)
    throw UnsupportedFamily(
        "a = m+1 makes the set consecutive; color it with the (2m+3)-periodic "
        "rainbow instead");
  const int b1_last = static_cast<int>(2 * m + 1);
  const int b2_first = b1_last + 1;          // 2m+2
  const int b2_last = static_cast<int>(4 * m + 2);
  Int k = a / (2 * m + 1);
  Int r = a % (2 * m + 1);
  std::vector<int> w;
  if (r < m) {
    // a > m guarantees k >= 1 here
    run_times(w, 1, b1_last, k);
    run_times(w, b2_first, b2_last, k - 1);
    run(w, b2_first, static_cast<int>(3 * m + r + 2));
    check_period(w, 2 * a - r - m, "{1..m,a} case r<m");
  } else if (r == m) {
    run_times(w, 1, b1_last, k);
    run_times(w, b2_first, b2_last, k);
    check_period(w, 2 * a - 2 * m, "{1..m,a} case r=m");
  } else if (r == m + 1) {
    run_times(w, 1, b1_last, k + 1);
    run_times(w, b2_first, b2_last, k);
    run(w, b2_first, b2_first + 1);
    check_period(w, 2 * a + 1, "{1..m,a} case r=m+1");
  } else {
    run_times(w, 1, b1_last, k + 1);
    run_times(w, b2_first, b2_last, k);
    run(w, b2_first, static_cast<int>(m + r + 1));
    check_period(w, 2 * a - r + m + 1, "{1..m,a} case r>=m+2");
  }
  return PatternWord{std::move(w)};
}

PatternWord stretch_pattern(const PatternWord& w, Int factor) {
  if (factor < 1) throw std::invalid_argument("stretch factor must be positive");
  std::vector<int> out;
  out.reserve(w.word.size() * static_cast<size_t>(factor));
  for (int c : w.word)
    for (Int i = 0; i < factor; ++i) out.push_back(c);
  return PatternWord{std::move(out)};
}

Int first_fit_bound(const SquareSet& s) { return s.size() + 1; }

}  // namespace distchrom
