#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stareig/codes.hpp"
#include "stareig/eigenfunction.hpp"
#include "stareig/rational.hpp"
#include "stareig/special_matrix.hpp"

namespace stareig {

using nlohmann::json;

// Rationals travel as exact strings "p" or "p/q"; integers are accepted on
// input for convenience. Floats are refused, they cannot round-trip.
inline json rational_to_json(const Rational& r) { return json(to_string(r)); }

inline Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer())
    return Rational(BigInt(v.get<std::int64_t>()));
  if (v.is_number_unsigned())
    return Rational(BigInt(v.get<std::uint64_t>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  throw std::invalid_argument(where + ": expected an integer or a rational string, got " +
                              std::string(v.type_name()));
}

namespace detail {

inline int require_n(const json& j, const std::string& where, int min_n) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw std::invalid_argument(where + ": missing integer field \"n\"");
  int n = j.at("n").get<int>();
  if (n < min_n)
    throw std::invalid_argument(where + ": n = " + std::to_string(n) + " is below " +
                                std::to_string(min_n));
  return n;
}

}  // namespace detail

// {n, entries: n x n array}, row-major, exact strings on output.
inline json matrix_to_json(const SquareMatrix& M) {
  json rows = json::array();
  for (int i = 1; i <= M.n(); ++i) {
    json row = json::array();
    for (int j = 1; j <= M.n(); ++j) row.push_back(rational_to_json(M.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", M.n()}, {"entries", std::move(rows)}};
}

inline SquareMatrix matrix_from_json(const json& j) {
  int n = detail::require_n(j, "matrix", 1);
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw std::invalid_argument("matrix: missing array field \"entries\"");
  const json& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("matrix: expected " + std::to_string(n) + " rows, got " +
                                std::to_string(rows.size()));
  SquareMatrix M(n);
  for (int i = 1; i <= n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix: row " + std::to_string(i) + " must have " +
                                  std::to_string(n) + " entries");
    for (int j2 = 1; j2 <= n; ++j2)
      M.set(i, j2,
            rational_from_json(row[static_cast<std::size_t>(j2 - 1)],
                               "matrix entry (" + std::to_string(i) + ", " +
                                   std::to_string(j2) + ")"));
  }
  return M;
}

// {n, entries: [{i, j, value}]} with i the symbol index and j the position
// index of the basis coefficient mu_i^j. Zero coefficients are omitted on
// output; input may list any subset, each index pair at most once.
inline json coefficients_to_json(const CoefficientVector& c) {
  json entries = json::array();
  for (int u = 2; u <= c.n(); ++u)
    for (int w = 3; w <= c.n(); ++w)
      if (c.at(u, w) != 0)
        entries.push_back(json{{"i", u}, {"j", w}, {"value", rational_to_json(c.at(u, w))}});
  return json{{"n", c.n()}, {"entries", std::move(entries)}};
}

inline CoefficientVector coefficients_from_json(const json& j) {
  int n = detail::require_n(j, "coefficients", 3);
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw std::invalid_argument("coefficients: missing array field \"entries\"");
  CoefficientVector c(n);
  std::vector<char> seen(static_cast<std::size_t>((n - 1) * (n - 2)), 0);
  for (const json& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("value") ||
        !e.at("i").is_number_integer() || !e.at("j").is_number_integer())
      throw std::invalid_argument("coefficients: entries must be {i, j, value} records");
    int u = e.at("i").get<int>();
    int w = e.at("j").get<int>();
    if (u < 2 || u > n || w < 3 || w > n)
      throw std::invalid_argument("coefficients: index (" + std::to_string(u) + ", " +
                                  std::to_string(w) + ") outside 2..n x 3..n");
    std::size_t slot = static_cast<std::size_t>((u - 2) * (n - 2) + (w - 3));
    if (seen[slot])
      throw std::invalid_argument("coefficients: duplicate index (" + std::to_string(u) +
                                  ", " + std::to_string(w) + ")");
    seen[slot] = 1;
    c.set(u, w, rational_from_json(e.at("value"), "coefficient (" + std::to_string(u) +
                                                      ", " + std::to_string(w) + ")"));
  }
  return c;
}

// {n, values: [f at rank 0, f at rank 1, ...]}, only for n <= 6.
inline json value_table_to_json(const VertexFunction& f) {
  if (f.n() > 6)
    throw std::invalid_argument("value_table_to_json: n capped at 6, got " +
                                std::to_string(f.n()));
  json values = json::array();
  for (PermutationEnumerator e(f.n()); !e.done(); e.advance())
    values.push_back(rational_to_json(f(e.current())));
  return json{{"n", f.n()}, {"values", std::move(values)}};
}

// {n, ranks: sorted list}.
inline json vertex_set_to_json(const VertexSet& s) {
  json ranks = json::array();
  for (PermRank r : s.ranks()) ranks.push_back(r);
  return json{{"n", s.n()}, {"ranks", std::move(ranks)}};
}

inline VertexSet vertex_set_from_json(const json& j) {
  int n = detail::require_n(j, "vertex set", 3);
  if (!j.contains("ranks") || !j.at("ranks").is_array())
    throw std::invalid_argument("vertex set: missing array field \"ranks\"");
  VertexSet s(n);
  for (const json& v : j.at("ranks")) {
    if (!v.is_number_integer())
      throw std::invalid_argument("vertex set: ranks must be integers");
    std::int64_t r = v.get<std::int64_t>();
    if (r < 0) throw std::invalid_argument("vertex set: negative rank");
    s.insert(static_cast<PermRank>(r));
  }
  return s;
}

inline json quotient_to_json(const QuotientMatrix& q) {
  json rows = json::array();
  for (const auto& row : q) rows.push_back(row);
  return rows;
}

// Parses a JSON file, translating parse failures into errors that carry the
// path and the 1-based line and column of the offending byte.
inline json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    if (byte > text.size()) byte = text.size();
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + e.what());
  }
}

inline SquareMatrix load_matrix_file(const std::string& path) {
  try {
    return matrix_from_json(load_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace stareig
