#pragma once

// Cayley table files.
//
// JSON: {"n": int|null, "labels": [string...], "table": [[int...]...]}
// CSV:  first record holds the labels, each following record one table row.
//       Fields containing ',' or '"' are quoted as in RFC 4180.
//
// Export output is deterministic, so export(import(export(S))) reproduces
// the same bytes.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bnrank/errors.hpp"
#include "bnrank/semigroup.hpp"

namespace bnrank {

enum class TableFormat { Json, Csv };

inline std::string export_json(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "{\n  \"n\": ";
  if (s.n()) {
    out << *s.n();
  } else {
    out << "null";
  }
  out << ",\n  \"labels\": [";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << (i ? ", " : "") << nlohmann::json(s.label(i)).dump();
  }
  out << "],\n  \"table\": [\n";
  for (std::size_t a = 0; a < s.size(); ++a) {
    out << "    [";
    for (std::size_t b = 0; b < s.size(); ++b) out << (b ? "," : "") << s.sum(a, b);
    out << (a + 1 < s.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

namespace detail {

inline std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Splits CSV text into records of fields. Reports 1-based line and column
// of the first malformed quote.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, field_started = false;
  std::size_t line = 1, col = 0;
  std::size_t quote_line = 0, quote_col = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    ++col;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
          ++col;
        } else {
          quoted = false;
          if (i + 1 < text.size() && text[i + 1] != ',' && text[i + 1] != '\n' && text[i + 1] != '\r') {
            throw ParseError("unexpected character after closing quote", line, col + 1);
          }
        }
      } else {
        if (c == '\n') {
          ++line;
          col = 0;
        }
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) throw ParseError("quote inside unquoted field", line, col);
        quoted = true;
        field_started = true;
        quote_line = line;
        quote_col = col;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        ++line;
        col = 0;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", quote_line, quote_col);
  if (field_started || !row.empty()) {
    end_field();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline FiniteSemigroup::Index parse_entry(const std::string& f, std::size_t line, std::size_t field) {
  if (f.empty() || f.size() > 9) throw ParseError("bad table entry '" + f + "'", line, field);
  FiniteSemigroup::Index v = 0;
  for (char c : f) {
    if (c < '0' || c > '9') throw ParseError("bad table entry '" + f + "'", line, field);
    v = v * 10 + static_cast<FiniteSemigroup::Index>(c - '0');
  }
  return v;
}

}  // namespace detail

inline std::string export_csv(const FiniteSemigroup& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + detail::csv_field(s.label(i));
  }
  out += '\n';
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (b) out += ',';
      out += std::to_string(s.sum(a, b));
    }
    out += '\n';
  }
  return out;
}

inline std::string export_table(const FiniteSemigroup& s, TableFormat format) {
  return format == TableFormat::Json ? export_json(s) : export_csv(s);
}

inline FiniteSemigroup import_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = detail::line_and_column(text, offset);
    throw ParseError(e.what(), line, col);
  }
  auto shape_error = [](const std::string& what) -> ParseError { return ParseError(what, 0, 0); };
  if (!doc.is_object()) throw shape_error("top level must be an object");
  if (!doc.contains("labels") || !doc["labels"].is_array()) throw shape_error("missing \"labels\" array");
  if (!doc.contains("table") || !doc["table"].is_array()) throw shape_error("missing \"table\" array");
  std::optional<int> n;
  if (doc.contains("n") && !doc["n"].is_null()) {
    if (!doc["n"].is_number_integer()) throw shape_error("\"n\" must be an integer or null");
    n = doc["n"].get<int>();
  }
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw shape_error("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<FiniteSemigroup::Index> table;
  for (const auto& row : doc["table"]) {
    if (!row.is_array() || row.size() != labels.size()) {
      throw ValidationError("table rows must have one entry per label");
    }
    for (const auto& e : row) {
      if (!e.is_number_unsigned()) throw ValidationError("table entries must be nonnegative integers");
      table.push_back(e.get<FiniteSemigroup::Index>());
    }
  }
  if (doc["table"].size() != labels.size()) throw ValidationError("table must have one row per label");
  return FiniteSemigroup(std::move(labels), std::move(table), n);
}

inline FiniteSemigroup import_csv(std::string_view text, std::optional<int> n = std::nullopt) {
  auto rows = detail::parse_csv(text);
  if (rows.empty()) throw ParseError("empty file", 1, 1);
  auto labels = rows.front();
  if (rows.size() != labels.size() + 1) throw ValidationError("table must have one row per label");
  std::vector<FiniteSemigroup::Index> table;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != labels.size()) {
      throw ParseError("row has " + std::to_string(rows[r].size()) + " fields, expected "
                           + std::to_string(labels.size()),
                       r + 1, 1);
    }
    for (std::size_t f = 0; f < rows[r].size(); ++f) {
      table.push_back(detail::parse_entry(rows[r][f], r + 1, f + 1));
    }
  }
  return FiniteSemigroup(std::move(labels), std::move(table), n);
}

// JSON if the first non-blank character opens an object or array, else CSV.
inline FiniteSemigroup import_table(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) return import_json(text);
  return import_csv(text);
}

}  // namespace bnrank
