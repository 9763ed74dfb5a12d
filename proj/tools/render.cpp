// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT

#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace cnct_render {

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string grouped(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  std::string s = buf;
  if (s.find_first_of("eE") != std::string::npos) return s;
  const auto dot = s.find('.');
  if (dot == std::string::npos) return s;
  std::string out = s.substr(0, dot + 1);
  for (std::size_t i = dot + 1; i < s.size(); ++i) {
    if (i > dot + 1 && (i - dot - 1) % 3 == 0) out += '~';
    out += s[i];
  }
  return out;
}

std::string grouped_complex(std::complex<double> v) {
  std::string s = grouped(v.real());
  s += v.imag() < 0.0 ? " -" : " +";
  s += grouped(std::fabs(v.imag()));
  s += 'i';
  return s;
}

namespace {

std::string text_scalar(std::complex<double> v, bool is_complex) {
  return is_complex ? grouped_complex(v) : grouped(v.real());
}

std::string csv_scalar(std::complex<double> v, bool is_complex) {
  if (!is_complex) return shortest(v.real());
  std::string s = shortest(v.real());
  s += v.imag() < 0.0 ? '-' : '+';
  s += shortest(std::fabs(v.imag()));
  s += 'i';
  return s;
}

std::string json_scalar(std::complex<double> v, bool is_complex) {
  if (!is_complex) return shortest(v.real());
  return "[" + shortest(v.real()) + "," + shortest(v.imag()) + "]";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof esc, "\\u%04x", c);
          out += esc;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

struct column_set {
  bool euler = false;
  bool levin = false;
  bool weniger = false;
};

column_set columns_of(const output_document& doc) {
  column_set c;
  for (const auto& r : doc.rows) {
    c.euler |= r.euler.has_value();
    c.levin |= r.levin_d.has_value();
    c.weniger |= r.weniger_delta.has_value();
  }
  return c;
}

}  // namespace

std::string render_text(const output_document& doc) {
  std::string out = "problem: " + doc.problem + "\n";
  for (const auto& [k, v] : doc.params) out += k + ": " + v + "\n";
  out += "scale: " + shortest(doc.scale) + "\n\n";

  const column_set cols = columns_of(doc);
  std::vector<std::string> header{"n", "partial_sum"};
  if (cols.euler) header.emplace_back("euler");
  if (cols.levin) header.emplace_back("levin_d");
  if (cols.weniger) header.emplace_back("weniger_delta");

  std::vector<std::vector<std::string>> grid;
  grid.push_back(header);
  for (const auto& r : doc.rows) {
    std::vector<std::string> row;
    row.push_back(std::to_string(r.n));
    row.push_back(text_scalar(r.partial_sum, doc.is_complex));
    const auto opt = [&](const std::optional<std::complex<double>>& v) {
      row.push_back(v ? text_scalar(*v, doc.is_complex) : std::string());
    };
    if (cols.euler) opt(r.euler);
    if (cols.levin) opt(r.levin_d);
    if (cols.weniger) opt(r.weniger_delta);
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += "  ";
      out.append(width[i] - row[i].size(), ' ');
      out += row[i];
    }
    out += '\n';
  }

  out += "\nvalue: " + text_scalar(doc.value, doc.is_complex) + "\n";
  out += "error_estimate: " + grouped(doc.error_estimate) + "\n";
  out += "term_evaluations: " + std::to_string(doc.term_evaluations) + "\n";
  out += "order_used: " + std::to_string(doc.order_used) + "\n";
  out += std::string("converged: ") + (doc.converged ? "yes" : "no");
  return out;
}

std::string render_csv(const output_document& doc) {
  std::string out = "n,partial_sum,euler,levin_d,weniger_delta";
  for (const auto& r : doc.rows) {
    out += '\n';
    out += std::to_string(r.n) + ',';
    out += csv_scalar(r.partial_sum, doc.is_complex);
    const auto opt = [&](const std::optional<std::complex<double>>& v) {
      out += ',';
      if (v) out += csv_scalar(*v, doc.is_complex);
    };
    opt(r.euler);
    opt(r.levin_d);
    opt(r.weniger_delta);
  }
  return out;
}

std::string render_json(const output_document& doc) {
  std::string out = "{\n";
  out += "  \"problem\": " + json_string(doc.problem) + ",\n";
  out += "  \"params\": {";
  for (std::size_t i = 0; i < doc.params.size(); ++i) {
    if (i > 0) out += ", ";
    out += json_string(doc.params[i].first) + ": " +
           json_string(doc.params[i].second);
  }
  out += "},\n";
  out += "  \"scale\": " + shortest(doc.scale) + ",\n";
  out += "  \"rows\": [";
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto& r = doc.rows[i];
    out += i > 0 ? ",\n    " : "\n    ";
    out += "{\"n\": " + std::to_string(r.n);
    out += ", \"partial_sum\": " + json_scalar(r.partial_sum, doc.is_complex);
    const auto opt = [&](const char* name,
                         const std::optional<std::complex<double>>& v) {
      if (v)
        out += std::string(", \"") + name +
               "\": " + json_scalar(*v, doc.is_complex);
    };
    opt("euler", r.euler);
    opt("levin_d", r.levin_d);
    opt("weniger_delta", r.weniger_delta);
    out += '}';
  }
  out += doc.rows.empty() ? "],\n" : "\n  ],\n";
  out += "  \"value\": " + json_scalar(doc.value, doc.is_complex) + ",\n";
  out += "  \"error_estimate\": " + shortest(doc.error_estimate) + ",\n";
  out +=
      "  \"term_evaluations\": " + std::to_string(doc.term_evaluations) + ",\n";
  out += "  \"order_used\": " + std::to_string(doc.order_used) + ",\n";
  out += std::string("  \"converged\": ") + (doc.converged ? "true" : "false") +
         "\n}";
  return out;
}

}  // namespace cnct_render
