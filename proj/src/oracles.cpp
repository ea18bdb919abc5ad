#include "oracles.hpp"

#include "rng.hpp"

namespace geoscale {

Policy parse_policy(const std::string& name, std::uint64_t seed) {
  if (name == "max-ratio") return Policy{PolicyKind::MaxRatio, 0};
  if (name == "max-gain") return Policy{PolicyKind::MaxGain, 0};
  if (name == "min-gain") return Policy{PolicyKind::MinGain, 0};
  if (name == "lex") return Policy{PolicyKind::LexFirst, 0};
  if (name == "random") return Policy{PolicyKind::Random, seed};
  throw ParseError("unknown policy \"" + name + "\"");
}

std::string policy_name(const Policy& policy) {
  switch (policy.kind) {
    case PolicyKind::MaxRatio: return "max-ratio";
    case PolicyKind::MaxGain: return "max-gain";
    case PolicyKind::MinGain: return "min-gain";
    case PolicyKind::LexFirst: return "lex";
    case PolicyKind::Random: return "random";
  }
  throw DomainError("bad policy kind");
}

namespace {

void check_from(const Instance& instance, std::size_t from) {
  if (from >= instance.polytope.vertices.size())
    throw DomainError("vertex index " + std::to_string(from) + " out of range");
}

} // namespace

OracleAnswer mra_argmax(const Instance& instance, std::size_t from) {
  check_from(instance, from);
  const auto& verts = instance.polytope.vertices;
  OracleAnswer best;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i == from) continue;
    ExactRatio r = ratio(instance.objective, verts[from], verts[i]);
    if (!best.index || r > *best.ratio ||
        (r == *best.ratio && verts[i] < verts[*best.index])) {
      best.index = i;
      best.ratio = r;
    }
  }
  return best;
}

std::vector<std::size_t> feasible_set(const Instance& instance, std::size_t from,
                                      const ExactRatio& mu) {
  check_from(instance, from);
  if (mu <= 0) throw DomainError("threshold must be positive");
  const auto& verts = instance.polytope.vertices;
  ExactInt p = num(mu), q = den(mu);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i == from) continue;
    ExactInt gain = dot(instance.objective, verts[i]) -
                    dot(instance.objective, verts[from]);
    ExactInt dist = l1_dist(verts[from], verts[i]);
    if (gain * q > p * dist) out.push_back(i);
  }
  return out;
}

OracleAnswer select(const Policy& policy, const Instance& instance,
                    std::size_t from, const ExactRatio& mu) {
  std::vector<std::size_t> feasible = feasible_set(instance, from, mu);
  if (feasible.empty()) return {};
  const auto& verts = instance.polytope.vertices;
  std::size_t pick = feasible.front();

  switch (policy.kind) {
    case PolicyKind::MaxRatio: {
      ExactRatio best = ratio(instance.objective, verts[from], verts[pick]);
      for (std::size_t i : feasible) {
        ExactRatio r = ratio(instance.objective, verts[from], verts[i]);
        if (r > best || (r == best && verts[i] < verts[pick])) {
          best = r;
          pick = i;
        }
      }
      break;
    }
    case PolicyKind::MaxGain:
    case PolicyKind::MinGain: {
      bool want_max = policy.kind == PolicyKind::MaxGain;
      ExactInt best = dot(instance.objective, verts[pick]);
      for (std::size_t i : feasible) {
        ExactInt v = dot(instance.objective, verts[i]);
        bool better = want_max ? v > best : v < best;
        if (better || (v == best && verts[i] < verts[pick])) {
          best = v;
          pick = i;
        }
      }
      break;
    }
    case PolicyKind::LexFirst: {
      for (std::size_t i : feasible)
        if (verts[i] < verts[pick]) pick = i;
      break;
    }
    case PolicyKind::Random: {
      std::uint64_t s = mix_seed(policy.seed, static_cast<std::uint64_t>(from));
      s = mix_seed(s, fnv1a(ratio_str(mu)));
      Rng rng(s);
      pick = feasible[rng.below(feasible.size())];
      break;
    }
  }
  return OracleAnswer{pick, ratio(instance.objective, verts[from], verts[pick])};
}

OracleAnswer improve_any(const Instance& instance, std::size_t from) {
  check_from(instance, from);
  const auto& verts = instance.polytope.vertices;
  ExactInt cur = dot(instance.objective, verts[from]);
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i == from) continue;
    if (dot(instance.objective, verts[i]) > cur &&
        (!pick || verts[i] < verts[*pick]))
      pick = i;
  }
  if (!pick) return {};
  return OracleAnswer{pick, ratio(instance.objective, verts[from], verts[*pick])};
}

Optimum brute_force_opt(const Instance& instance) {
  const auto& verts = instance.polytope.vertices;
  Optimum best{0, dot(instance.objective, verts[0])};
  for (std::size_t i = 1; i < verts.size(); ++i) {
    ExactInt v = dot(instance.objective, verts[i]);
    if (v > best.value || (v == best.value && verts[i] < verts[best.index])) {
      best.index = i;
      best.value = v;
    }
  }
  return best;
}

} // namespace geoscale
