// Copyright 2026 The rstp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Benchmark instance classes and the .rstp text format.
//
// Classes 1-6: complete graphs, low uniform on {0..U1-1}, high uniform on
// {low+1..U2} with (U1, U2) = (10,10) (15,15) (20,20) (10,20) (15,30) (20,40).
// Class 7: clusters of 5 vertices (cluster k = vertices 5k..5k+4), each a
// complete class-1 graph; the gateways 5k form a complete upper level with
// class-1 intervals shifted by +10. Class 8: as class 7 but the upper level is
// the heap-indexed binary tree over clusters (k linked to 2k+1 and 2k+2).
//
// Randomness: std::mt19937_64 seeded with the 64-bit seed; bounded draws use
// rejection sampling on the raw 64-bit output so the stream is identical on
// every platform. Edges get ids in lexicographic (u, v) order and are drawn
// in that order, low before high.
//
// File format:
//   rstp <n> <m>
//   e <u> <v> <low> <high>      (m lines, 0-based vertices, edge id = line order)

#ifndef RSTP_INSTANCES_HPP_
#define RSTP_INSTANCES_HPP_

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rstp/graph.hpp"

namespace rstp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GeneratorSpec {
  int class_id = 1;
  std::size_t node_count = 10;
  std::uint64_t seed = 0;
};

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    // excess = 2^64 mod bound; draws at or above 2^64 - excess are biased.
    const std::uint64_t excess = (std::uint64_t{0} - bound) % bound;
    const std::uint64_t limit = std::uint64_t{0} - excess;  // 2^64 - excess
    while (true) {
      const std::uint64_t x = engine_();
      if (excess == 0 || x < limit) return x % bound;
    }
  }

  // Uniform on [lo, hi].
  Cost between(Cost lo, Cost hi) {
    return lo + static_cast<Cost>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

struct ClassBounds {
  Cost low_max;   // U1
  Cost high_max;  // U2
};

inline ClassBounds class_bounds(int class_id) {
  switch (class_id) {
    case 1: return {10, 10};
    case 2: return {15, 15};
    case 3: return {20, 20};
    case 4: return {10, 20};
    case 5: return {15, 30};
    case 6: return {20, 40};
    case 7:
    case 8: return {10, 10};
    default: throw std::invalid_argument("class id must be in 1..8");
  }
}

inline constexpr std::size_t kClusterSize = 5;
inline constexpr Cost kUpperLevelShift = 10;

}  // namespace detail

inline void validate(const GeneratorSpec& spec) {
  if (spec.class_id < 1 || spec.class_id > 8) {
    throw std::invalid_argument("class id must be in 1..8");
  }
  if (spec.class_id <= 6 && spec.node_count < 2) {
    throw std::invalid_argument("classes 1-6 need at least 2 nodes");
  }
  if (spec.class_id >= 7 && (spec.node_count == 0 ||
                             spec.node_count % detail::kClusterSize != 0)) {
    throw std::invalid_argument(
        "classes 7-8 need a positive multiple of 5 nodes");
  }
}

inline IntervalGraph generate(const GeneratorSpec& spec) {
  validate(spec);
  const std::size_t n = spec.node_count;
  // (u, v, shifted) with u < v
  std::vector<std::tuple<VertexId, VertexId, bool>> pairs;
  if (spec.class_id <= 6) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v, false);
    }
  } else {
    const std::size_t clusters = n / detail::kClusterSize;
    for (std::size_t k = 0; k < clusters; ++k) {
      const VertexId base = k * detail::kClusterSize;
      for (VertexId u = base; u < base + detail::kClusterSize; ++u) {
        for (VertexId v = u + 1; v < base + detail::kClusterSize; ++v) {
          pairs.emplace_back(u, v, false);
        }
      }
    }
    auto gateway = [](std::size_t k) { return k * detail::kClusterSize; };
    for (std::size_t a = 0; a < clusters; ++a) {
      if (spec.class_id == 7) {
        for (std::size_t b = a + 1; b < clusters; ++b) {
          pairs.emplace_back(gateway(a), gateway(b), true);
        }
      } else {
        for (std::size_t b : {2 * a + 1, 2 * a + 2}) {
          if (b < clusters) pairs.emplace_back(gateway(a), gateway(b), true);
        }
      }
    }
    std::sort(pairs.begin(), pairs.end());
  }
  const auto bounds = detail::class_bounds(spec.class_id);
  InstanceRng rng(spec.seed);
  IntervalGraph g(n);
  for (const auto& [u, v, shifted] : pairs) {
    const Cost low = rng.between(0, bounds.low_max - 1);
    const Cost high = rng.between(low + 1, bounds.high_max);
    const Cost shift = shifted ? detail::kUpperLevelShift : 0;
    g.add_edge(u, v, low + shift, high + shift);
  }
  return g;
}

inline void write_instance(const IntervalGraph& g, std::ostream& out) {
  out << "rstp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << e.low << ' ' << e.high << '\n';
  }
}

inline std::string instance_to_string(const IntervalGraph& g) {
  std::ostringstream os;
  write_instance(g, os);
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& token, std::size_t line, const char* what) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

}  // namespace detail

// Parses and validates an instance: header, edge count, vertex range,
// self-loops, duplicate vertex pairs, bounds, connectivity.
inline IntervalGraph read_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  IntervalGraph g;
  std::set<std::pair<VertexId, VertexId>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = detail::split_tokens(line);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 3 || tok[0] != "rstp") {
        throw ParseError(line_no, "expected header 'rstp <n> <m>'");
      }
      n = detail::parse_number<std::size_t>(tok[1], line_no, "vertex count");
      m = detail::parse_number<std::size_t>(tok[2], line_no, "edge count");
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      g = IntervalGraph(n);
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (tok.size() != 5 || tok[0] != "e") {
      throw ParseError(line_no, "expected 'e <u> <v> <low> <high>'");
    }
    if (g.edge_count() == m) throw ParseError(line_no, "more edges than declared");
    const auto u = detail::parse_number<VertexId>(tok[1], line_no, "vertex");
    const auto v = detail::parse_number<VertexId>(tok[2], line_no, "vertex");
    const auto low = detail::parse_number<Cost>(tok[3], line_no, "cost");
    const auto high = detail::parse_number<Cost>(tok[4], line_no, "cost");
    if (u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (low < 0) throw ParseError(line_no, "negative lower bound");
    if (low > high) throw ParseError(line_no, "low > high");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw ParseError(line_no, "duplicate edge");
    }
    g.add_edge(u, v, low, high);
  }
  if (!have_header) throw ParseError(line_no, "empty instance");
  if (g.edge_count() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(g.edge_count()));
  }
  if (!g.is_connected()) {
    throw InfeasibleError("line " + std::to_string(header_line) +
                          ": graph is disconnected");
  }
  return g;
}

inline IntervalGraph instance_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_instance(is);
}

inline IntervalGraph read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::system_error(errno, std::generic_category(),
                                   "cannot open " + path.string());
  return read_instance(in);
}

inline void write_instance_file(const IntervalGraph& g,
                                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::system_error(errno, std::generic_category(),
                                    "cannot write " + path.string());
  write_instance(g, out);
  if (!out) throw std::system_error(errno, std::generic_category(),
                                    "write failed for " + path.string());
}

}  // namespace rstp

#endif  // RSTP_INSTANCES_HPP_
