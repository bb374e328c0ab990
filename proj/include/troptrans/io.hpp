/*
 *   Copyright 2026 The troptrans Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Matrix documents. JSON form:
//
//   {"n": 2, "convention": "max-plus",
//    "entries": [["0", "-1/2"], [".", "-3"]],
//    "name": "...", "source": "..."}
//
// Entries are integers, rationals "p/q", or finite decimals; "." or "-inf"
// is the semiring zero. Under "max-times-float" entries are nonnegative
// decimals, 0 is the semiring zero, and values are mapped through the
// natural logarithm into approximate mode. The text form has one row per
// line, whitespace separated, '#' starting a comment, max-plus only.

#ifndef TROPTRANS_IO_HPP
#define TROPTRANS_IO_HPP

#include <cctype>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace troptrans {

  using json = nlohmann::json;

  enum class Convention { max_plus, max_times_float };

  inline char const* to_string(Convention c) {
    return c == Convention::max_plus ? "max-plus" : "max-times-float";
  }

  struct MatrixDocument {
    Convention                            convention = Convention::max_plus;
    std::vector<std::vector<std::string>> entries;
    std::string                           name;
    std::string                           source;

    std::size_t n() const {
      return entries.size();
    }
  };

  namespace detail {
    inline std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }

    inline bool all_digits(std::string const& s) {
      return !s.empty()
             && std::all_of(s.begin(), s.end(), [](unsigned char c) {
                  return std::isdigit(c) != 0;
                });
    }
  }  // namespace detail

  /// Exact max-plus entry.
  inline TropicalWeight parse_weight(std::string const& raw) {
    std::string s = detail::trim(raw);
    if (s == "." || s == "-inf") {
      return TropicalWeight();
    }
    auto bad = [&]() {
      return ParseError("malformed entry '" + raw + "'");
    };
    std::string body = s;
    bool        neg  = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
      neg  = body[0] == '-';
      body = body.substr(1);
    }
    Rational q;
    if (auto slash = body.find('/'); slash != std::string::npos) {
      auto num = body.substr(0, slash), den = body.substr(slash + 1);
      if (!detail::all_digits(num) || !detail::all_digits(den)) {
        throw bad();
      }
      mpz_class d(den);
      if (d == 0) {
        throw ParseError("zero denominator in '" + raw + "'");
      }
      q = Rational(mpz_class(num), d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
      auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !detail::all_digits(ip))
          || (!fp.empty() && !detail::all_digits(fp))) {
        throw bad();
      }
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
      q = Rational(mpz_class(ip.empty() ? "0" : ip) * scale
                       + mpz_class(fp.empty() ? "0" : fp),
                   scale);
    } else {
      if (!detail::all_digits(body)) {
        throw bad();
      }
      q = Rational(mpz_class(body));
    }
    q.canonicalize();
    if (neg) {
      q = -q;
    }
    return TropicalWeight(q);
  }

  /// Canonical text of an exact weight: "p/q", integer, or "-inf".
  inline std::string format_weight(TropicalWeight const& w) {
    return w.to_string();
  }

  /// Max-times decimal entry mapped to log domain; 0 is the semiring zero.
  inline Weight<double> parse_max_times(std::string const& raw) {
    std::string s = detail::trim(raw);
    std::size_t used = 0;
    double      v    = 0;
    try {
      v = std::stod(s, &used);
    } catch (std::exception const&) {
      throw ParseError("malformed max-times entry '" + raw + "'");
    }
    if (used != s.size() || !std::isfinite(v) || v < 0) {
      throw ParseError("max-times entries must be finite and >= 0: '" + raw
                       + "'");
    }
    return v == 0 ? Weight<double>() : Weight<double>(std::log(v));
  }

  namespace detail {
    inline std::string entry_text(json const& e) {
      if (e.is_string()) {
        return e.get<std::string>();
      }
      if (e.is_number_integer()) {
        return std::to_string(e.get<long long>());
      }
      if (e.is_number_float()) {
        return e.dump();
      }
      if (e.is_null()) {
        return ".";
      }
      throw ParseError("matrix entries must be strings or numbers");
    }

    inline void check_square(MatrixDocument const& doc) {
      if (doc.entries.empty()) {
        throw ParseError("matrix must have at least one row");
      }
      for (auto const& row : doc.entries) {
        if (row.size() != doc.entries.size()) {
          throw ParseError("matrix is not square");
        }
      }
    }
  }  // namespace detail

  inline MatrixDocument document_from_json(json const& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
      throw ParseError("matrix document needs an \"entries\" array");
    }
    MatrixDocument doc;
    if (j.contains("convention")) {
      auto c = j["convention"].get<std::string>();
      if (c == "max-plus") {
        doc.convention = Convention::max_plus;
      } else if (c == "max-times-float") {
        doc.convention = Convention::max_times_float;
      } else {
        throw ParseError("unknown convention '" + c + "'");
      }
    }
    for (auto const& row : j["entries"]) {
      if (!row.is_array()) {
        throw ParseError("each matrix row must be an array");
      }
      std::vector<std::string> r;
      for (auto const& e : row) {
        r.push_back(detail::entry_text(e));
      }
      doc.entries.push_back(std::move(r));
    }
    detail::check_square(doc);
    if (j.contains("n") && j["n"].get<std::size_t>() != doc.n()) {
      throw ParseError("\"n\" does not match the number of rows");
    }
    if (j.contains("name")) {
      doc.name = j["name"].get<std::string>();
    }
    if (j.contains("source")) {
      doc.source = j["source"].get<std::string>();
    }
    return doc;
  }

  /// Whitespace text form.
  inline MatrixDocument document_from_text(std::string const& text) {
    MatrixDocument     doc;
    std::istringstream in(text);
    std::string        line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.resize(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> row;
      std::string              tok;
      while (ls >> tok) {
        row.push_back(tok);
      }
      if (!row.empty()) {
        doc.entries.push_back(std::move(row));
      }
    }
    detail::check_square(doc);
    return doc;
  }

  /// JSON if the first non-blank character is '{', text otherwise.
  inline MatrixDocument parse_document(std::string const& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (json::exception const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      try {
        return document_from_json(j);
      } catch (json::exception const& e) {
        throw ParseError(std::string("invalid matrix document: ") + e.what());
      }
    }
    return document_from_text(text);
  }

  inline TropMatrix to_exact(MatrixDocument const& doc) {
    if (doc.convention != Convention::max_plus) {
      throw ParseError("exact mode needs a max-plus document");
    }
    std::size_t const n = doc.n();
    TropMatrix        a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = parse_weight(doc.entries[i][j]);
      }
    }
    return a;
  }

  inline Matrix<double> to_approx(MatrixDocument const& doc) {
    std::size_t const n = doc.n();
    Matrix<double>    a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (doc.convention == Convention::max_times_float) {
          a(i, j) = parse_max_times(doc.entries[i][j]);
        } else {
          auto w = parse_weight(doc.entries[i][j]);
          if (w.is_finite()) {
            a(i, j) = Weight<double>(w.value().get_d());
          }
        }
      }
    }
    return a;
  }

  inline MatrixDocument document_from_matrix(TropMatrix const& a,
                                             std::string       name   = {},
                                             std::string       source = {}) {
    MatrixDocument doc;
    doc.name   = std::move(name);
    doc.source = std::move(source);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        row.push_back(format_weight(a(i, j)));
      }
      doc.entries.push_back(std::move(row));
    }
    return doc;
  }

  inline json to_json(MatrixDocument const& doc) {
    json j;
    j["n"]          = doc.n();
    j["convention"] = to_string(doc.convention);
    j["entries"]    = doc.entries;
    if (!doc.name.empty()) {
      j["name"] = doc.name;
    }
    if (!doc.source.empty()) {
      j["source"] = doc.source;
    }
    return j;
  }

  inline json matrix_to_json(TropMatrix const& a) {
    return to_json(document_from_matrix(a));
  }

  inline std::string to_text(MatrixDocument const& doc) {
    std::string out;
    for (auto const& row : doc.entries) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out += (j ? " " : "") + (row[j] == "-inf" ? std::string(".") : row[j]);
      }
      out += '\n';
    }
    return out;
  }

  namespace detail {
    inline TropMatrix parse_block(json const& rows, char const* what) {
      if (!rows.is_array() || rows.empty()) {
        throw ParseError(std::string("factorization: \"") + what
                         + "\" must be a nonempty array of rows");
      }
      std::size_t const r = rows[0].size();
      TropMatrix        m(rows.size(), r);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != r) {
          throw ParseError(std::string("factorization: \"") + what
                           + "\" is ragged");
        }
        for (std::size_t a = 0; a < r; ++a) {
          m(i, a) = parse_weight(entry_text(rows[i][a]));
        }
      }
      return m;
    }

    inline json block_to_json(TropMatrix const& m) {
      json rows = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t a = 0; a < m.cols(); ++a) {
          row.push_back(format_weight(m(i, a)));
        }
        rows.push_back(row);
      }
      return rows;
    }
  }  // namespace detail

  /// {"V": [[...] n rows of r], "W": [[...] n rows of r]}, either at top
  /// level or under a "factorization" key of a matrix document.
  inline Factorization<Rational> parse_factorization(std::string const& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::exception const& e) {
      throw ParseError(std::string("invalid factorization JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("factorization")) {
      j = json(j["factorization"]);
    }
    if (!j.is_object() || !j.contains("V") || !j.contains("W")) {
      throw ParseError("factorization needs \"V\" and \"W\"");
    }
    return {detail::parse_block(j["V"], "V"), detail::parse_block(j["W"], "W")};
  }

  inline json factorization_to_json(Factorization<Rational> const& f) {
    return json{{"V", detail::block_to_json(f.V)},
                {"W", detail::block_to_json(f.W)}};
  }

}  // namespace troptrans

#endif  // TROPTRANS_IO_HPP
