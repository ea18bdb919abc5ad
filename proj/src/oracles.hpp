#pragma once

#include "model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geoscale {

enum class PolicyKind { MaxRatio, MaxGain, MinGain, LexFirst, Random };

/// Selection rule for the feasibility engine. seed matters only for Random.
struct Policy {
  PolicyKind kind = PolicyKind::MaxRatio;
  std::uint64_t seed = 0;

  bool operator==(const Policy&) const = default;
};

/// Names: max-ratio, max-gain, min-gain, lex, random.
Policy parse_policy(const std::string& name, std::uint64_t seed);
std::string policy_name(const Policy& policy);

/// Answer of a vertex oracle. index set iff a qualifying vertex exists;
/// ratio accompanies it where the oracle defines one.
struct OracleAnswer {
  std::optional<std::size_t> index;
  std::optional<ExactRatio> ratio;
};

/// Best normalized improvement from the given vertex: maximizes
/// c.(x - from) / |x - from|_1 over all other vertices, ties broken
/// lexicographically. Absent only for a one-vertex polytope.
OracleAnswer mra_argmax(const Instance& instance, std::size_t from);

/// Indices x with c.(x - from) > mu * |x - from|_1, in vertex order.
std::vector<std::size_t> feasible_set(const Instance& instance, std::size_t from,
                                      const ExactRatio& mu);

/// Applies the policy to feasible_set; absent iff that set is empty.
/// Value ties break lexicographically.
OracleAnswer select(const Policy& policy, const Instance& instance,
                    std::size_t from, const ExactRatio& mu);

/// Lexicographically smallest vertex with strictly better objective.
OracleAnswer improve_any(const Instance& instance, std::size_t from);

struct Optimum {
  std::size_t index = 0;
  ExactInt value;
};

/// Exhaustive maximum; value ties break lexicographically.
Optimum brute_force_opt(const Instance& instance);

} // namespace geoscale
