#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace distchrom {

using Int = long long;

// Largest admissible distance. Keeps every derived quantity (doubled
// distances, period*length products, window indices) far from overflow.
inline constexpr Int kMaxDistance = 1'000'000;

// Malformed textual input (CLI exit code 2).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request outside the supported parameter families (CLI exit code 3).
struct UnsupportedFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A self-check on produced evidence failed; indicates a bug, never bad input
// (CLI exit code 4).
struct InternalCheckFailure : std::logic_error {
  using std::logic_error::logic_error;
};

/// Finite set of distinct positive integers D; generates the distance graph
/// G(D) on the integers where u ~ v iff |u - v| is in D.
class DistanceSet {
 public:
  /// Sorts and deduplicates. Throws std::invalid_argument on an empty set,
  /// non-positive elements, or elements above kMaxDistance.
  explicit DistanceSet(std::vector<Int> elems);

  const std::vector<Int>& elems() const { return elems_; }
  Int size() const { return static_cast<Int>(elems_.size()); }
  Int max() const { return elems_.back(); }
  bool contains(Int d) const;

  bool operator==(const DistanceSet&) const = default;

 private:
  std::vector<Int> elems_;  // strictly increasing, all >= 1
};

/// Strict parser for comma-separated distances, e.g. "1,5,6".
/// Rejects non-integers, zero, negatives, and duplicates with ParseError.
DistanceSet parse_distance_set(std::string_view text);

std::string format_distance_set(const DistanceSet& d);

struct NormalizeResult {
  DistanceSet set;  // d / gcd(d)
  Int divisor;      // the gcd that was divided out
};

/// Divides out gcd(D). The coloring numbers of G(D) and G(D/g) coincide
/// because G(D) is g disjoint translates of G(D/g).
NormalizeResult normalize(const DistanceSet& d);

/// D^2: the distances realized between vertices at graph distance <= 2 in
/// G(D), i.e. D together with all d+d' and all d-d' (d > d'). Coloring G(D^2)
/// is the same problem as 2-distance coloring G(D).
class SquareSet {
 public:
  SquareSet(std::vector<Int> elems, DistanceSet source);

  const std::vector<Int>& elems() const { return elems_; }
  const DistanceSet& source() const { return source_; }
  Int size() const { return static_cast<Int>(elems_.size()); }
  Int max() const { return elems_.back(); }
  bool contains(Int d) const;

 private:
  std::vector<Int> elems_;  // strictly increasing, all >= 1
  DistanceSet source_;
};

SquareSet square_set(const DistanceSet& d);

/// Degree of every vertex of G(D): 2|D|. The 2-distance chromatic number is
/// at least max_degree + 1 (a closed neighborhood is a clique after squaring).
Int max_degree(const DistanceSet& d);

/// Cayley graph on Z_p whose generator set is S reduced mod p. A proper
/// k-coloring of this graph is exactly a p-periodic k-coloring of G(S).
struct CirculantInstance {
  Int period;                   // p >= 1
  std::vector<Int> connection;  // nonzero residues, closed under r -> p-r
  int colors;                   // k
};

/// Returned when some s in S is divisible by p: vertices s apart collapse to
/// the same residue, so no p-periodic proper coloring can exist.
struct InfeasiblePeriod {
  Int witness;  // smallest offending element of S
};

std::variant<CirculantInstance, InfeasiblePeriod> reduce_to_circulant(
    const SquareSet& s, Int p, int k);

/// Induced subgraph of G(S) on the window {0, 1, ..., length-1}. Adjacency is
/// kept as the difference set; edges() materializes pairs on demand.
struct WindowInstance {
  Int length;
  std::vector<Int> diffs;  // S restricted to [1, length-1]
  int colors;

  std::vector<std::pair<Int, Int>> edges() const;
};

WindowInstance window_instance(const SquareSet& s, Int n, int k);

/// Set of vertices pairwise adjacent in G(D^2); witnesses chi >= |vertices|.
struct CliqueCertificate {
  std::vector<Int> vertices;  // sorted
  Int base;                   // the x the certificate is centered on
};

/// Pairwise membership check of all differences in S.
bool is_clique(const std::vector<Int>& vertices, const SquareSet& s);

/// Builds a clique of size max_degree+1 around x and validates it before
/// returning (throws InternalCheckFailure if the check fails). For
/// D = {1,...,m,a} with m >= 2 the clique is {x+m-a} u {x..x+2m} u {x+m+a};
/// every other shape uses the closed neighborhood {x-d} u {x} u {x+d}.
CliqueCertificate clique_certificate(const DistanceSet& d, Int x);

}  // namespace distchrom
