#pragma once

#include <cerny/automaton.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cerny {

// Text format:
//   n k
//   <n targets of letter 0>
//   ...
//   <n targets of letter k-1>

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::size_t parse_index(const Token& tok, std::size_t line) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, tok.column, "expected a non-negative integer, got '" +
                                           std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace detail

inline Dfa read_dfa(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && detail::split_line(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'n k'");

  const auto header = detail::split_line(lines[0]);
  if (header.size() != 2) {
    const std::size_t col = header.size() > 2 ? header[2].column : lines[0].size() + 1;
    throw ParseError(1, col, "header must be 'n k'");
  }
  const std::size_t n = detail::parse_index(header[0], 1);
  const std::size_t k = detail::parse_index(header[1], 1);
  if (n == 0) throw ParseError(1, header[0].column, "state count must be positive");
  if (k == 0) throw ParseError(1, header[1].column, "alphabet size must be positive");
  if (lines.size() < k + 1) {
    throw ParseError(lines.size() + 1, 1, "missing transition line: expected " +
                                              std::to_string(k) + ", found " +
                                              std::to_string(lines.size() - 1));
  }
  if (lines.size() > k + 1) {
    throw ParseError(k + 2, 1, "unexpected line after " + std::to_string(k) +
                                   " transition lines");
  }

  std::vector<std::vector<State>> table(k);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t line_no = a + 2;
    const auto tokens = detail::split_line(lines[a + 1]);
    if (tokens.size() != n) {
      const std::size_t col = tokens.size() > n ? tokens[n].column : lines[a + 1].size() + 1;
      throw ParseError(line_no, col, "expected " + std::to_string(n) + " targets, found " +
                                         std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) {
      const std::size_t t = detail::parse_index(tok, line_no);
      if (t >= n) {
        throw ParseError(line_no, tok.column, "target " + std::to_string(t) +
                                                  " outside [0, " + std::to_string(n) + ")");
      }
      table[a].push_back(static_cast<State>(t));
    }
  }
  return Dfa(std::move(table));
}

inline Dfa parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_dfa(in);
}

inline Dfa load_dfa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open automaton file '" + path + "'");
  return read_dfa(in);
}

inline void write_dfa(std::ostream& out, const Dfa& dfa) {
  out << dfa.states() << ' ' << dfa.letters() << '\n';
  for (Letter a = 0; a < dfa.letters(); ++a) {
    const auto row = dfa.row(a);
    for (std::size_t p = 0; p < row.size(); ++p) out << (p ? " " : "") << row[p];
    out << '\n';
  }
}

inline std::string to_text(const Dfa& dfa) {
  std::ostringstream out;
  write_dfa(out, dfa);
  return out.str();
}

/// Letters print as 'a', 'b', ... for alphabets of at most 26 letters,
/// otherwise as comma-separated indices.
inline std::string letter_name(Letter a, std::size_t alphabet) {
  if (alphabet <= 26) return std::string(1, static_cast<char>('a' + a));
  return std::to_string(a);
}

inline std::string format_word(const Word& w, std::size_t alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (alphabet > 26 && i > 0) out += ',';
    out += letter_name(w[i], alphabet);
  }
  return out;
}

inline Word parse_word(std::string_view text, std::size_t alphabet) {
  std::vector<Letter> letters;
  if (alphabet <= 26) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < 'a' || static_cast<std::size_t>(c - 'a') >= alphabet) {
        throw InvalidWord("character '" + std::string(1, c) + "' at position " +
                          std::to_string(i) + " is not a letter of a " +
                          std::to_string(alphabet) + "-letter alphabet");
      }
      letters.push_back(static_cast<Letter>(c - 'a'));
    }
    return Word(std::move(letters));
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view piece = text.substr(pos, comma - pos);
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() ||
        value >= alphabet) {
      throw InvalidWord("bad letter index '" + std::string(piece) + "'");
    }
    letters.push_back(value);
    pos = comma + 1;
  }
  return Word(std::move(letters));
}

/// Graphviz rendering of the labelled transition digraph. Parallel edges
/// between the same pair of states are merged into one edge with a
/// comma-separated label.
inline void write_dot(std::ostream& out, const Dfa& dfa, std::string_view name = "dfa") {
  const std::size_t n = dfa.states();
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (State p = 0; p < n; ++p) {
    out << "  " << p << " [label=\"" << p << "\"" << (p == 0 ? ", shape=doublecircle" : "")
        << "];\n";
  }
  for (State p = 0; p < n; ++p) {
    std::vector<std::string> labels(n);
    for (Letter a = 0; a < dfa.letters(); ++a) {
      std::string& l = labels[dfa.next(p, a)];
      if (!l.empty()) l += ",";
      l += letter_name(a, dfa.letters());
    }
    for (State q = 0; q < n; ++q) {
      if (!labels[q].empty())
        out << "  " << p << " -> " << q << " [label=\"" << labels[q] << "\"];\n";
    }
  }
  out << "}\n";
}

}  // namespace cerny
