#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "model.hpp"

#include <set>

using namespace geoscale;

TEST_CASE("chain vertices set trailing coordinates") {
  Polytope p = make_simplex(3);
  REQUIRE(p.vertices.size() == 4);
  CHECK(p.vertices[0].bits == "000");
  CHECK(p.vertices[1].bits == "001");
  CHECK(p.vertices[2].bits == "011");
  CHECK(p.vertices[3].bits == "111");

  Polytope p1 = make_simplex(1);
  CHECK(p1.vertices[0].bits == "0");
  CHECK(p1.vertices[1].bits == "1");

  CHECK_THROWS_AS(make_simplex(0), DomainError);
}

TEST_CASE("objectives") {
  std::vector<ExactInt> lin = objective_linear(3);
  CHECK(lin == std::vector<ExactInt>{1, 2, 3});
  CHECK(inf_norm(objective_linear(4)) == 4);

  std::vector<ExactInt> pw = objective_geometric(4, 2);
  CHECK(pw == std::vector<ExactInt>{2, 4, 8, 16});
  std::vector<ExactInt> p3 = objective_geometric(3, 3);
  CHECK(p3 == std::vector<ExactInt>{3, 9, 27});
  CHECK(objective_geometric(64, 2)[63].str() == "18446744073709551616");
  CHECK_THROWS_AS(objective_geometric(3, 1), DomainError);
}

TEST_CASE("dot, distance and improvement ratio on the 3-chain") {
  Polytope p = make_simplex(3);
  std::vector<ExactInt> c{1, 2, 3};
  CHECK(dot(c, p.vertices[0]) == 0);
  CHECK(dot(c, p.vertices[1]) == 3);
  CHECK(dot(c, p.vertices[2]) == 5);
  CHECK(dot(c, p.vertices[3]) == 6);
  CHECK(l1_dist(p.vertices[0], p.vertices[3]) == 3);
  CHECK(l1_dist(p.vertices[1], p.vertices[2]) == 1);

  CHECK(ratio(c, p.vertices[0], p.vertices[1]) == ExactRatio(3));
  CHECK(ratio(c, p.vertices[0], p.vertices[2]) == ExactRatio(5, 2));
  CHECK(ratio(c, p.vertices[0], p.vertices[3]) == ExactRatio(2));
  CHECK(ratio(c, p.vertices[1], p.vertices[0]) == ExactRatio(-3));
  CHECK_THROWS_AS(ratio(c, p.vertices[2], p.vertices[2]), DomainError);
}

TEST_CASE("chain objective values increase strictly along the chain") {
  for (int n : {2, 5, 8, 12}) {
    Polytope p = make_simplex(n);
    std::vector<ExactInt> c = objective_linear(n);
    ExactInt prev = dot(c, p.vertices[0]);
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
      ExactInt v = dot(c, p.vertices[i]);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("closed form for chain ratios under geometric objectives") {
  for (ExactInt beta : {ExactInt(2), ExactInt(3), ExactInt(5)}) {
    for (int n : {2, 4, 6, 8}) {
      Polytope p = make_simplex(n);
      std::vector<ExactInt> c = objective_geometric(n, beta);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          if (i == j) continue;
          ExactInt hi = pow_int(beta, n - i + 1), lo = pow_int(beta, n - j + 1);
          int dist = j > i ? j - i : i - j;
          ExactRatio expect =
              ExactRatio(hi - lo) / ExactRatio((beta - 1) * dist);
          CHECK(ratio(c, p.vertices[i], p.vertices[j]) == expect);
        }
      }
    }
  }
}

TEST_CASE("random polytopes are distinct, sorted and deterministic") {
  Polytope full = random_polytope(3, 8, 5);
  REQUIRE(full.vertices.size() == 8);
  for (std::size_t i = 1; i < 8; ++i)
    CHECK(full.vertices[i - 1] < full.vertices[i]);

  Polytope a = random_polytope(6, 20, 11);
  Polytope b = random_polytope(6, 20, 11);
  CHECK(a == b);
  Polytope c = random_polytope(6, 20, 12);
  CHECK(a != c);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Polytope p = random_polytope(5, 12, seed);
    std::set<std::string> seen;
    for (const BitVertex& v : p.vertices) {
      CHECK(v.dimension() == 5);
      CHECK(seen.insert(v.bits).second);
    }
  }

  CHECK(random_polytope(4, 1, 9).vertices.size() == 1);
  CHECK_THROWS_AS(random_polytope(3, 9, 0), DomainError);
  CHECK_THROWS_AS(random_polytope(3, 0, 0), DomainError);
}

TEST_CASE("random instances are deterministic and within bounds") {
  Instance a = random_instance(6, 14, 3, 50);
  Instance b = random_instance(6, 14, 3, 50);
  CHECK(a == b);
  CHECK(a.start < a.polytope.vertices.size());
  for (const ExactInt& v : a.objective) {
    CHECK(v >= -50);
    CHECK(v <= 50);
  }
  CHECK(a != random_instance(6, 14, 4, 50));
}

TEST_CASE("instance JSON round trip") {
  std::string text =
      R"({"n":2,"vertices":["00","01","11"],"c":["1","-2"],"start":0})";
  Instance inst = parse_instance(text);
  CHECK(inst.polytope.n == 2);
  CHECK(inst.polytope.vertices.size() == 3);
  CHECK(inst.objective == std::vector<ExactInt>{1, -2});
  CHECK(inst.start == 0);
  CHECK(parse_instance(write_instance(inst)) == inst);

  // JSON integers are accepted for objective entries
  Instance alt = parse_instance(R"({"n":2,"vertices":["00","11"],"c":[1,-2],"start":1})");
  CHECK(alt.objective == std::vector<ExactInt>{1, -2});

  for (int n : {3, 5, 7}) {
    Instance rand_inst = random_instance(n, 8, 77, 9);
    CHECK(parse_instance(write_instance(rand_inst)) == rand_inst);
  }
}

TEST_CASE("instance JSON diagnostics name the offending field") {
  auto message = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("(no error)");
  };

  CHECK(message("{") .find("invalid JSON") != std::string::npos);
  CHECK(message(R"({"n":0,"vertices":["0"],"c":["1"],"start":0})")
            .find("'n'") != std::string::npos);
  CHECK(message(R"({"vertices":["0"],"c":["1"],"start":0})")
            .find("missing field 'n'") != std::string::npos);
  CHECK(message(R"({"n":2,"vertices":["000","01"],"c":["1","2"],"start":0})")
            .find("length") != std::string::npos);
  CHECK(message(R"({"n":2,"vertices":["00","00"],"c":["1","2"],"start":0})")
            .find("duplicate") != std::string::npos);
  CHECK(message(R"({"n":2,"vertices":["00","0x"],"c":["1","2"],"start":0})")
            .find("0/1") != std::string::npos);
  CHECK(message(R"({"n":2,"vertices":["00","01"],"c":["1","2.5"],"start":0})")
            .find("2.5") != std::string::npos);
  CHECK(message(R"({"n":2,"vertices":["00","01"],"c":[1,2.5],"start":0})")
            .find("not an integer") != std::string::npos);
  CHECK(message(R"({"n":2,"vertices":["00","01"],"c":["1"],"start":0})")
            .find("expected n=2") != std::string::npos);
  CHECK(message(R"({"n":2,"vertices":["00","01"],"c":["1","2"],"start":2})")
            .find("out of range") != std::string::npos);
  CHECK(message(R"({"n":2,"vertices":[],"c":["1","2"],"start":0})")
            .find("non-empty") != std::string::npos);
}

TEST_CASE("polytope construction rejects bad input") {
  CHECK_THROWS_AS(make_polytope(2, {BitVertex{"00"}, BitVertex{"00"}}), DomainError);
  CHECK_THROWS_AS(make_polytope(2, {BitVertex{"001"}}), DomainError);
  CHECK_THROWS_AS(make_polytope(2, {}), DomainError);
  CHECK_THROWS_AS(
      make_instance(make_simplex(2), std::vector<ExactInt>{1}, 0), DomainError);
  CHECK_THROWS_AS(
      make_instance(make_simplex(2), std::vector<ExactInt>{1, 2}, 3), DomainError);
}
