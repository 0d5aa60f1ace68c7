#include "doctest.h"

#include <algorithm>
#include <set>
#include <variant>
#include <vector>

#include "distchrom/core.hpp"

using namespace distchrom;

TEST_CASE("parse_distance_set accepts any order and canonicalizes") {
  CHECK(parse_distance_set("1,2,5").elems() == std::vector<Int>{1, 2, 5});
  CHECK(parse_distance_set("5,1,2").elems() == std::vector<Int>{1, 2, 5});
  CHECK(parse_distance_set("7").elems() == std::vector<Int>{7});
  CHECK(parse_distance_set("1000000").elems() == std::vector<Int>{1'000'000});
}

TEST_CASE("parse_distance_set rejects malformed input with ParseError") {
  CHECK_THROWS_AS(parse_distance_set(""), ParseError);
  CHECK_THROWS_AS(parse_distance_set("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_distance_set("1,x"), ParseError);
  CHECK_THROWS_AS(parse_distance_set("0"), ParseError);
  CHECK_THROWS_AS(parse_distance_set("-3"), ParseError);
  CHECK_THROWS_AS(parse_distance_set("1,1"), ParseError);
  CHECK_THROWS_AS(parse_distance_set("1,2,"), ParseError);
  CHECK_THROWS_AS(parse_distance_set("1 ,2"), ParseError);
  CHECK_THROWS_AS(parse_distance_set("1000001"), ParseError);
}

TEST_CASE("format_distance_set is the canonical inverse of parsing") {
  CHECK(format_distance_set(parse_distance_set("5,1,2")) == "1,2,5");
  CHECK(format_distance_set(parse_distance_set("4")) == "4");
}

TEST_CASE("DistanceSet constructor sorts, deduplicates, validates") {
  CHECK(DistanceSet({3, 1, 3}).elems() == std::vector<Int>{1, 3});
  CHECK(DistanceSet({9, 2}).max() == 9);
  CHECK(DistanceSet({9, 2}).contains(2));
  CHECK_FALSE(DistanceSet({9, 2}).contains(3));
  CHECK_THROWS_AS(DistanceSet({}), std::invalid_argument);
  CHECK_THROWS_AS(DistanceSet({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DistanceSet({-1}), std::invalid_argument);
}

TEST_CASE("normalize divides out the gcd and reports it") {
  NormalizeResult nr = normalize(parse_distance_set("2,6"));
  CHECK(nr.set.elems() == std::vector<Int>{1, 3});
  CHECK(nr.divisor == 2);

  nr = normalize(parse_distance_set("3,5"));
  CHECK(nr.set.elems() == std::vector<Int>{3, 5});
  CHECK(nr.divisor == 1);

  nr = normalize(parse_distance_set("4"));
  CHECK(nr.set.elems() == std::vector<Int>{1});
  CHECK(nr.divisor == 4);

  nr = normalize(parse_distance_set("6,9,15"));
  CHECK(nr.set.elems() == std::vector<Int>{2, 3, 5});
  CHECK(nr.divisor == 3);
}

TEST_CASE("square set of {1,2,5}") {
  DistanceSet d = parse_distance_set("1,2,5");
  SquareSet s = square_set(d);
  CHECK(s.elems() == std::vector<Int>{1, 2, 3, 4, 5, 6, 7, 10});
  CHECK(s.source() == d);
}

TEST_CASE("square set of singletons includes the doubled distance") {
  CHECK(square_set(DistanceSet({1})).elems() == std::vector<Int>{1, 2});
  CHECK(square_set(DistanceSet({4})).elems() == std::vector<Int>{4, 8});
}

TEST_CASE("square set matches brute-force sums and differences") {
  for (const char* text : {"1,7", "2,3", "1,4,5", "3,5,7", "1,2,3,9", "6", "2,9,11,12"}) {
    DistanceSet d = parse_distance_set(text);
    std::set<Int> expect;
    for (Int x : d.elems()) {
      expect.insert(x);
      for (Int y : d.elems()) {
        expect.insert(x + y);  // x == y contributes the doubled distance
        if (x > y) expect.insert(x - y);
      }
    }
    std::vector<Int> want(expect.begin(), expect.end());
    CAPTURE(text);
    CHECK(square_set(d).elems() == want);
  }
}

TEST_CASE("max_degree is twice the set size") {
  CHECK(max_degree(parse_distance_set("1")) == 2);
  CHECK(max_degree(parse_distance_set("1,5")) == 4);
  CHECK(max_degree(parse_distance_set("1,4,5")) == 6);
}

TEST_CASE("reduce_to_circulant flags periods dividing a distance") {
  SquareSet s = square_set(parse_distance_set("1,5"));  // {1,2,4,5,6,10}
  auto r5 = reduce_to_circulant(s, 5, 3);
  REQUIRE(std::holds_alternative<InfeasiblePeriod>(r5));
  CHECK(std::get<InfeasiblePeriod>(r5).witness == 5);

  auto r2 = reduce_to_circulant(s, 2, 3);
  REQUIRE(std::holds_alternative<InfeasiblePeriod>(r2));
  CHECK(std::get<InfeasiblePeriod>(r2).witness == 2);
}

TEST_CASE("reduce_to_circulant folds residues with their complements") {
  SquareSet s = square_set(parse_distance_set("1,7"));  // {1,2,6,7,8,14}
  auto r = reduce_to_circulant(s, 10, 4);
  REQUIRE(std::holds_alternative<CirculantInstance>(r));
  const CirculantInstance& inst = std::get<CirculantInstance>(r);
  CHECK(inst.period == 10);
  CHECK(inst.colors == 4);
  CHECK(inst.connection == std::vector<Int>{1, 2, 3, 4, 6, 7, 8, 9});

  auto r9 = reduce_to_circulant(s, 9, 9);
  REQUIRE(std::holds_alternative<CirculantInstance>(r9));
  CHECK(std::get<CirculantInstance>(r9).connection ==
        std::vector<Int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("window_instance keeps only differences that fit") {
  SquareSet s = square_set(parse_distance_set("1,7"));  // {1,2,6,7,8,14}
  WindowInstance wi = window_instance(s, 8, 3);
  CHECK(wi.length == 8);
  CHECK(wi.colors == 3);
  CHECK(wi.diffs == std::vector<Int>{1, 2, 6, 7});
  auto edges = wi.edges();
  // one edge per pair at distance d: (8-1) + (8-2) + (8-6) + (8-7)
  CHECK(edges.size() == 7 + 6 + 2 + 1);
  for (auto [u, v] : edges) {
    CHECK(0 <= u);
    CHECK(u < v);
    CHECK(v < 8);
    CHECK(s.contains(v - u));
  }
}

TEST_CASE("clique certificates validate and reach max_degree + 1") {
  for (const char* text : {"1", "1,4", "1,7", "1,2,3", "2,5", "1,2,5", "1,2,3,9", "3,5,7"}) {
    CAPTURE(text);
    DistanceSet d = parse_distance_set(text);
    SquareSet s = square_set(d);
    CliqueCertificate cert = clique_certificate(d, 0);
    CHECK(cert.base == 0);
    CHECK(static_cast<Int>(cert.vertices.size()) == max_degree(d) + 1);
    CHECK(std::is_sorted(cert.vertices.begin(), cert.vertices.end()));
    CHECK(is_clique(cert.vertices, s));
    CHECK(std::count(cert.vertices.begin(), cert.vertices.end(), 0) == 1);
  }
}

TEST_CASE("clique certificates translate with the base point") {
  DistanceSet d = parse_distance_set("1,2,5");
  CliqueCertificate at0 = clique_certificate(d, 0);
  CliqueCertificate at11 = clique_certificate(d, 11);
  CHECK(at11.base == 11);
  REQUIRE(at11.vertices.size() == at0.vertices.size());
  for (size_t i = 0; i < at0.vertices.size(); ++i)
    CHECK(at11.vertices[i] == at0.vertices[i] + 11);
  CHECK(is_clique(at11.vertices, square_set(d)));
}

TEST_CASE("is_clique rejects a pair at a missing distance") {
  SquareSet s = square_set(parse_distance_set("1,7"));  // {1,2,6,7,8,14}
  CHECK(is_clique({0, 1, 2}, s));
  CHECK_FALSE(is_clique({0, 1, 4}, s));  // 4 and 3 are not in the square set
}
