#pragma once

#include "exact.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace geoscale {

/// A 0/1 point in dimension n. bits[k] is coordinate k+1 ('0' or '1'),
/// so coordinate 1 is the leftmost character and string comparison is
/// the coordinatewise lexicographic order.
struct BitVertex {
  std::string bits;

  int dimension() const { return static_cast<int>(bits.size()); }
  auto operator<=>(const BitVertex&) const = default;
};

/// Vertex set of a 0/1 polytope, given explicitly.
struct Polytope {
  int n = 0;
  std::vector<BitVertex> vertices;

  bool operator==(const Polytope&) const = default;
};

/// Validates dimensions and distinctness.
Polytope make_polytope(int n, std::vector<BitVertex> vertices);

struct Instance {
  Polytope polytope;
  std::vector<ExactInt> objective;
  std::size_t start = 0;

  bool operator==(const Instance&) const = default;
};

Instance make_instance(Polytope polytope, std::vector<ExactInt> objective,
                       std::size_t start);

/// Chain of n+1 vertices: vertex i has exactly its last i coordinates 1.
Polytope make_simplex(int n);

/// c_i = i for i = 1..n.
std::vector<ExactInt> objective_linear(int n);

/// c_i = base**i for i = 1..n; base >= 2.
std::vector<ExactInt> objective_geometric(int n, const ExactInt& base);

/// m distinct vertices drawn uniformly without replacement, sorted
/// lexicographically. Deterministic in (n, m, seed).
Polytope random_polytope(int n, std::uint64_t m, std::uint64_t seed);

/// Random instance for experiments: random_polytope plus objective
/// entries uniform in [-cmax, cmax] and a random start vertex.
Instance random_instance(int n, std::uint64_t m, std::uint64_t seed,
                         std::uint32_t cmax);

ExactInt dot(std::span<const ExactInt> objective, const BitVertex& x);

ExactInt l1_dist(const BitVertex& a, const BitVertex& b);

/// c.(to - from) / |to - from|_1; rejects to == from.
ExactRatio ratio(std::span<const ExactInt> objective, const BitVertex& from,
                 const BitVertex& to);

ExactInt inf_norm(std::span<const ExactInt> objective);

/// Reads the JSON instance format:
///   {"n": int, "vertices": ["0110", ...], "c": ["-3", ...], "start": int}
/// Objective entries may be JSON integers or decimal strings.
Instance parse_instance(const std::string& text);

/// Inverse of parse_instance; objective entries always as strings.
std::string write_instance(const Instance& instance);

} // namespace geoscale
