#include "distchrom/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace distchrom {

DistanceSet::DistanceSet(std::vector<Int> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw std::invalid_argument("distance set must be non-empty");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.front() < 1) throw std::invalid_argument("distances must be positive");
  if (elems_.back() > kMaxDistance)
    throw std::invalid_argument("distance exceeds cap " + std::to_string(kMaxDistance));
}

bool DistanceSet::contains(Int d) const {
  return std::binary_search(elems_.begin(), elems_.end(), d);
}

DistanceSet parse_distance_set(std::string_view text) {
  std::vector<Int> out;
  std::set<Int> seen;
  size_t pos = 0;
  if (text.empty()) throw ParseError("empty distance set");
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    Int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || tok.empty())
      throw ParseError("not an integer: '" + std::string(tok) + "'");
    if (value <= 0) throw ParseError("distances must be positive, got " + std::to_string(value));
    if (value > kMaxDistance)
      throw ParseError("distance " + std::to_string(value) + " exceeds cap " +
                       std::to_string(kMaxDistance));
    if (!seen.insert(value).second)
      throw ParseError("duplicate distance " + std::to_string(value));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw ParseError("trailing comma");
  }
  return DistanceSet(std::move(out));
}

std::string format_distance_set(const DistanceSet& d) {
  std::string out;
  for (Int v : d.elems()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

NormalizeResult normalize(const DistanceSet& d) {
  Int g = 0;
  for (Int v : d.elems()) g = std::gcd(g, v);
  if (g == 1) return {d, 1};
  std::vector<Int> scaled;
  scaled.reserve(d.elems().size());
  for (Int v : d.elems()) scaled.push_back(v / g);
  return {DistanceSet(std::move(scaled)), g};
}

SquareSet::SquareSet(std::vector<Int> elems, DistanceSet source)
    : elems_(std::move(elems)), source_(std::move(source)) {
  if (elems_.empty()) throw std::invalid_argument("square set must be non-empty");
}

bool SquareSet::contains(Int d) const {
  return std::binary_search(elems_.begin(), elems_.end(), d);
}

SquareSet square_set(const DistanceSet& d) {
  std::set<Int> acc(d.elems().begin(), d.elems().end());
  const auto& e = d.elems();
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i; j < e.size(); ++j) acc.insert(e[i] + e[j]);  // includes 2d
    for (size_t j = 0; j < i; ++j) acc.insert(e[i] - e[j]);
  }
  return SquareSet(std::vector<Int>(acc.begin(), acc.end()), d);
}

Int max_degree(const DistanceSet& d) { return 2 * d.size(); }

std::variant<CirculantInstance, InfeasiblePeriod> reduce_to_circulant(
    const SquareSet& s, Int p, int k) {
  if (p < 1) throw std::invalid_argument("period must be >= 1");
  if (k < 1) throw std::invalid_argument("colors must be >= 1");
  for (Int v : s.elems())
    if (v % p == 0) return InfeasiblePeriod{v};
  std::set<Int> conn;
  for (Int v : s.elems()) {
    Int r = v % p;
    conn.insert(r);
    conn.insert(p - r);
  }
  return CirculantInstance{p, std::vector<Int>(conn.begin(), conn.end()), k};
}

std::vector<std::pair<Int, Int>> WindowInstance::edges() const {
  std::vector<std::pair<Int, Int>> out;
  for (Int u = 0; u < length; ++u)
    for (Int d : diffs) {
      if (u + d >= length) break;
      out.emplace_back(u, u + d);
    }
  return out;
}

WindowInstance window_instance(const SquareSet& s, Int n, int k) {
  if (n < 1) throw std::invalid_argument("window length must be >= 1");
  if (k < 1) throw std::invalid_argument("colors must be >= 1");
  std::vector<Int> diffs;
  for (Int v : s.elems())
    if (v < n) diffs.push_back(v);
  return WindowInstance{n, std::move(diffs), k};
}

bool is_clique(const std::vector<Int>& vertices, const SquareSet& s) {
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      Int diff = vertices[j] - vertices[i];
      if (diff < 0) diff = -diff;
      if (diff == 0 || !s.contains(diff)) return false;
    }
  return true;
}

namespace {

// D = {1,...,m, a} with m >= 2 and a > m+1?
bool is_one_to_m_a(const DistanceSet& d, Int& m, Int& a) {
  const auto& e = d.elems();
  if (e.size() < 3) return false;
  for (size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] != static_cast<Int>(i) + 1) return false;
  m = static_cast<Int>(e.size()) - 1;
  a = e.back();
  return a > m + 1;
}

}  // namespace

CliqueCertificate clique_certificate(const DistanceSet& d, Int x) {
  std::vector<Int> verts;
  Int m = 0, a = 0;
  if (is_one_to_m_a(d, m, a)) {
    verts.push_back(x + m - a);
    for (Int j = 0; j <= 2 * m; ++j) verts.push_back(x + j);
    verts.push_back(x + m + a);
  } else {
    for (auto it = d.elems().rbegin(); it != d.elems().rend(); ++it)
      verts.push_back(x - *it);
    verts.push_back(x);
    for (Int v : d.elems()) verts.push_back(x + v);
  }
  std::sort(verts.begin(), verts.end());
  SquareSet s = square_set(d);
  if (static_cast<Int>(verts.size()) != max_degree(d) + 1 || !is_clique(verts, s))
    throw InternalCheckFailure("clique certificate failed validation");
  return CliqueCertificate{std::move(verts), x};
}

}  // namespace distchrom
