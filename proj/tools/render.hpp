// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Output document model and renderers shared by the CLI and its tests.
// Every format is a pure function of the document, so a document
// reconstructed from the JSON output renders byte-identical text/CSV.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cnct_render {

struct output_row {
  std::uint64_t n = 0;
  std::complex<double> partial_sum{};
  std::optional<std::complex<double>> euler;
  std::optional<std::complex<double>> levin_d;
  std::optional<std::complex<double>> weniger_delta;
};

/// One rendered run.  All numeric payload (rows, value, error estimate) is
/// stored already scaled; `scale` is recorded for the reader.
struct output_document {
  std::string problem;
  std::vector<std::pair<std::string, std::string>> params;
  double scale = 1.0;
  bool is_complex = false;
  std::vector<output_row> rows;
  std::complex<double> value{};
  double error_estimate = 0.0;
  std::uint64_t term_evaluations = 0;
  std::uint64_t order_used = 0;
  bool converged = false;
};

/// Shortest round-trip decimal form (std::to_chars).
std::string shortest(double v);

/// %.15g with the fractional digits grouped in threes by '~'
/// (exponent forms pass through ungrouped).
std::string grouped(double v);

/// Complex in text form: "re +imi" / "re -imi" with grouped components.
std::string grouped_complex(std::complex<double> v);

std::string render_text(const output_document& doc);
std::string render_csv(const output_document& doc);
std::string render_json(const output_document& doc);

}  // namespace cnct_render
