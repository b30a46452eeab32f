// Copyright 2026 The hyperzagreb Authors
//
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

#ifndef HYPERZAGREB_CODEC_HPP
#define HYPERZAGREB_CODEC_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperzagreb/graph.hpp"

// Text codecs: graph6 (McKay's 6-bit packed upper triangle, optional
// ">>graph6<<" header) and a plain edge list:
//
//   # comment
//   n m
//   u v      (m lines, 0-based ids)

namespace hz {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::size_t kMaxGraph6Order = 1u << 20;

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
    }
  }
}

inline unsigned sextet(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    throw FormatError(std::string("graph6: byte '") + c + "' outside printable range 63..126");
  }
  return u - 63;
}

}  // namespace detail

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::append_size(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Decodes one graph6 string. Trailing whitespace and the optional header are
/// accepted; anything else that does not match the format is a FormatError.
inline Graph decode_graph6(std::string_view text) {
  text = detail::trim(text);
  if (text.substr(0, detail::kGraph6Header.size()) == detail::kGraph6Header) {
    text.remove_prefix(detail::kGraph6Header.size());
  }
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  const auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw FormatError("graph6: truncated size header");
    std::size_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | detail::sextet(text[pos++]);
    return v;
  };
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = take(1);
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n == 0) throw FormatError("graph6: zero-vertex graphs are not supported");
  if (n > detail::kMaxGraph6Order) {
    throw FormatError("graph6: order " + std::to_string(n) + " exceeds supported maximum");
  }

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < body) {
    throw FormatError("graph6: truncated body (expected " + std::to_string(body) +
                      " bytes for " + std::to_string(n) + " vertices, got " +
                      std::to_string(have) + ")");
  }
  if (have > body) {
    throw FormatError("graph6: vertex count mismatch (" + std::to_string(have) +
                      " body bytes, " + std::to_string(n) + " vertices need " +
                      std::to_string(body) + ")");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned six = detail::sextet(text[pos + k / 6]);
      if ((six >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = detail::sextet(text[pos + body - 1]);
    const unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw FormatError("graph6: nonzero padding bits");
  }
  return make_graph(n, edges);
}

/// One graph per non-blank line.
inline std::vector<Graph> decode_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = detail::trim(text.substr(start, end - start));
    if (!line.empty()) out.push_back(decode_graph6(line));
    start = end + 1;
  }
  return out;
}

inline std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph parse_edgelist(std::string_view text) {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> line_numbers;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (!line.empty()) {
      std::vector<std::uint64_t> fields;
      std::size_t p = 0;
      while (p < line.size()) {
        while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        if (p >= line.size()) break;
        std::size_t q = p;
        while (q < line.size() && !std::isspace(static_cast<unsigned char>(line[q]))) ++q;
        std::uint64_t value = 0;
        const auto token = line.substr(p, q - p);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
          throw FormatError("edge list line " + std::to_string(line_no) +
                            ": not a nonnegative integer: '" + std::string(token) + "'");
        }
        fields.push_back(value);
        p = q;
      }
      if (fields.size() != 2) {
        throw FormatError("edge list line " + std::to_string(line_no) +
                          ": expected two integers, found " + std::to_string(fields.size()));
      }
      rows.push_back(std::move(fields));
      line_numbers.push_back(line_no);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (rows.empty()) throw FormatError("edge list: missing 'n m' header line");
  const std::uint64_t n = rows[0][0];
  const std::uint64_t m = rows[0][1];
  if (rows.size() - 1 != m) {
    throw FormatError("edge list: header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][0] >= n || rows[i][1] >= n) {
      throw FormatError("edge list line " + std::to_string(line_numbers[i]) +
                        ": vertex id out of range for n = " + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(rows[i][0]), static_cast<Vertex>(rows[i][1]));
  }
  try {
    return make_graph(n, edges);
  } catch (const GraphError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

enum class InputFormat { kAuto, kEdgeList, kGraph6 };

/// Edge lists start (after comments and blanks) with a decimal digit; graph6
/// bytes are all in 63..126, so the first significant byte decides.
inline InputFormat detect_format(std::string_view text) {
  std::size_t p = 0;
  while (p < text.size()) {
    const char c = text[p];
    if (c == '#') {
      const auto nl = text.find('\n', p);
      if (nl == std::string_view::npos) break;
      p = nl + 1;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
    } else {
      return std::isdigit(static_cast<unsigned char>(c)) ? InputFormat::kEdgeList
                                                         : InputFormat::kGraph6;
    }
  }
  return InputFormat::kEdgeList;
}

inline Graph read_graph(std::string_view text, InputFormat format = InputFormat::kAuto) {
  if (format == InputFormat::kAuto) format = detect_format(text);
  if (format == InputFormat::kEdgeList) return parse_edgelist(text);
  const auto graphs = decode_graph6_lines(text);
  if (graphs.size() != 1) {
    throw FormatError("graph6 input must contain exactly one graph, found " +
                      std::to_string(graphs.size()));
  }
  return graphs.front();
}

}  // namespace hz

#endif  // HYPERZAGREB_CODEC_HPP
