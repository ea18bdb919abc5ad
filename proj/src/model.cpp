#include "model.hpp"

#include "rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace geoscale {

using ordered_json = nlohmann::ordered_json;

Polytope make_polytope(int n, std::vector<BitVertex> vertices) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (vertices.empty()) throw DomainError("polytope needs at least one vertex");
  for (const BitVertex& v : vertices) {
    if (v.dimension() != n)
      throw DomainError("vertex \"" + v.bits + "\" has length " +
                        std::to_string(v.bits.size()) + ", expected n=" +
                        std::to_string(n));
    for (char c : v.bits)
      if (c != '0' && c != '1')
        throw DomainError("vertex \"" + v.bits + "\" contains a character other than 0/1");
  }
  std::vector<BitVertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw DomainError("duplicate vertex \"" + dup->bits + "\"");
  return Polytope{n, std::move(vertices)};
}

Instance make_instance(Polytope polytope, std::vector<ExactInt> objective,
                       std::size_t start) {
  if (objective.size() != static_cast<std::size_t>(polytope.n))
    throw DomainError("objective has " + std::to_string(objective.size()) +
                      " entries, expected n=" + std::to_string(polytope.n));
  if (start >= polytope.vertices.size())
    throw DomainError("start index " + std::to_string(start) + " out of range [0, " +
                      std::to_string(polytope.vertices.size()) + ")");
  return Instance{std::move(polytope), std::move(objective), start};
}

Polytope make_simplex(int n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  std::vector<BitVertex> vertices;
  vertices.reserve(n + 1);
  for (int i = 0; i <= n; ++i)
    vertices.push_back(BitVertex{std::string(n - i, '0') + std::string(i, '1')});
  return Polytope{n, std::move(vertices)};
}

std::vector<ExactInt> objective_linear(int n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  std::vector<ExactInt> c;
  c.reserve(n);
  for (int i = 1; i <= n; ++i) c.emplace_back(i);
  return c;
}

std::vector<ExactInt> objective_geometric(int n, const ExactInt& base) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (base < 2) throw DomainError("geometric base must be at least 2");
  std::vector<ExactInt> c;
  c.reserve(n);
  ExactInt p = base;
  for (int i = 1; i <= n; ++i, p *= base) c.push_back(p);
  return c;
}

namespace {

BitVertex vertex_from_value(int n, std::uint64_t value) {
  std::string bits(n, '0');
  for (int k = 0; k < n; ++k)
    if ((value >> (n - 1 - k)) & 1u) bits[k] = '1';
  return BitVertex{std::move(bits)};
}

} // namespace

Polytope random_polytope(int n, std::uint64_t m, std::uint64_t seed) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  ExactInt total = ExactInt(1) << n;
  if (m < 1 || ExactInt(m) > total)
    throw DomainError("vertex count " + std::to_string(m) +
                      " out of range [1, 2^" + std::to_string(n) + "]");
  Rng rng(mix_seed(seed, 0x706F6C79ULL));
  std::vector<BitVertex> picked;
  picked.reserve(m);
  if (n <= 20) {
    std::uint64_t count = 1ULL << n;
    std::vector<std::uint64_t> pool(count);
    for (std::uint64_t v = 0; v < count; ++v) pool[v] = v;
    for (std::uint64_t i = 0; i < m; ++i) {
      std::uint64_t j = i + rng.below(count - i);
      std::swap(pool[i], pool[j]);
      picked.push_back(vertex_from_value(n, pool[i]));
    }
  } else {
    std::set<std::string> seen;
    while (picked.size() < m) {
      std::string bits(n, '0');
      for (int k = 0; k < n; ++k)
        if (rng.next() & 1u) bits[k] = '1';
      if (seen.insert(bits).second) picked.push_back(BitVertex{bits});
    }
  }
  std::sort(picked.begin(), picked.end());
  return Polytope{n, std::move(picked)};
}

Instance random_instance(int n, std::uint64_t m, std::uint64_t seed,
                         std::uint32_t cmax) {
  Polytope p = random_polytope(n, m, seed);
  Rng rng(mix_seed(seed, 0x6F626A65ULL));
  std::vector<ExactInt> c;
  c.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::int64_t v = static_cast<std::int64_t>(rng.below(2ULL * cmax + 1));
    c.emplace_back(v - static_cast<std::int64_t>(cmax));
  }
  std::size_t start = static_cast<std::size_t>(rng.below(p.vertices.size()));
  return Instance{std::move(p), std::move(c), start};
}

ExactInt dot(std::span<const ExactInt> objective, const BitVertex& x) {
  ExactInt sum = 0;
  for (std::size_t k = 0; k < objective.size(); ++k)
    if (x.bits[k] == '1') sum += objective[k];
  return sum;
}

ExactInt l1_dist(const BitVertex& a, const BitVertex& b) {
  int d = 0;
  for (std::size_t k = 0; k < a.bits.size(); ++k)
    if (a.bits[k] != b.bits[k]) ++d;
  return ExactInt(d);
}

ExactRatio ratio(std::span<const ExactInt> objective, const BitVertex& from,
                 const BitVertex& to) {
  if (from == to) throw DomainError("ratio undefined for identical vertices");
  ExactInt gain = 0;
  int dist = 0;
  for (std::size_t k = 0; k < objective.size(); ++k) {
    if (from.bits[k] == to.bits[k]) continue;
    ++dist;
    if (to.bits[k] == '1')
      gain += objective[k];
    else
      gain -= objective[k];
  }
  return ExactRatio(gain, dist);
}

ExactInt inf_norm(std::span<const ExactInt> objective) {
  ExactInt best = 0;
  for (const ExactInt& v : objective) {
    ExactInt a = v < 0 ? ExactInt(-v) : v;
    if (a > best) best = a;
  }
  return best;
}

Instance parse_instance(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  for (const char* key : {"n", "vertices", "c", "start"})
    if (!j.contains(key))
      throw ParseError(std::string("missing field '") + key + "'");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1)
    throw ParseError("field 'n' must be a positive integer");
  int n = j["n"].get<int>();

  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw ParseError("field 'vertices' must be a non-empty array");
  std::vector<BitVertex> vertices;
  for (const auto& entry : j["vertices"]) {
    if (!entry.is_string())
      throw ParseError("vertices must be bitstrings");
    vertices.push_back(BitVertex{entry.get<std::string>()});
  }

  if (!j["c"].is_array())
    throw ParseError("field 'c' must be an array");
  if (j["c"].size() != static_cast<std::size_t>(n))
    throw ParseError("field 'c' has " + std::to_string(j["c"].size()) +
                     " entries, expected n=" + std::to_string(n));
  std::vector<ExactInt> objective;
  for (const auto& entry : j["c"]) {
    if (entry.is_number_integer()) {
      objective.emplace_back(entry.get<std::int64_t>());
    } else if (entry.is_string()) {
      try {
        objective.push_back(parse_int(entry.get<std::string>()));
      } catch (const ParseError&) {
        throw ParseError("objective entry is not an integer: \"" +
                         entry.get<std::string>() + "\"");
      }
    } else {
      throw ParseError("objective entry is not an integer: " + entry.dump());
    }
  }

  if (!j["start"].is_number_integer() || j["start"].get<std::int64_t>() < 0)
    throw ParseError("field 'start' must be a non-negative integer");
  std::size_t start = j["start"].get<std::size_t>();

  try {
    return make_instance(make_polytope(n, std::move(vertices)),
                         std::move(objective), start);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string write_instance(const Instance& instance) {
  ordered_json j;
  j["n"] = instance.polytope.n;
  ordered_json verts = ordered_json::array();
  for (const BitVertex& v : instance.polytope.vertices) verts.push_back(v.bits);
  j["vertices"] = std::move(verts);
  ordered_json c = ordered_json::array();
  for (const ExactInt& v : instance.objective) c.push_back(v.str());
  j["c"] = std::move(c);
  j["start"] = instance.start;
  return j.dump();
}

} // namespace geoscale
