// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Command-line front end over the cnct C API.
//
// Exit codes: 0 success, 1 reference check failed (--check), 2 usage or
// domain error, 3 the run did not converge by the order limit.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cnct/cnct.h"
#include "render.hpp"

namespace {

using cnct_render::output_document;
using cnct_render::output_row;

using params_list = std::vector<std::pair<std::string, std::string>>;

struct common_opts {
  double tol = 1e-14;
  unsigned max_order = 30;
  double beta = 1.0;
  std::string transform = "both";
  std::string format = "text";
  double scale = std::numeric_limits<double>::quiet_NaN();  // NaN = not given
  long long orders = -1;                                    // -1 = not given
};

void add_common(CLI::App* cmd, common_opts& g) {
  cmd->add_option("--tol", g.tol, "relative convergence tolerance");
  cmd->add_option("--max-order", g.max_order, "highest transform order");
  cmd->add_option("--beta", g.beta, "transform shift parameter (> 0)");
  cmd->add_option("--transform", g.transform,
                  "diagonal(s) to compute: levin-d, weniger-delta, euler, both")
      ->check(CLI::IsMember({"levin-d", "weniger-delta", "euler", "both"}));
  cmd->add_option("--format", g.format, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--scale", g.scale, "multiply all displayed values");
  cmd->add_option("--orders", g.orders,
                  "show at least this many transform orders");
}

cnct_transform transform_of(const std::string& name) {
  if (name == "levin-d") return CNCT_TRANSFORM_LEVIN_D;
  if (name == "weniger-delta") return CNCT_TRANSFORM_WENIGER_DELTA;
  if (name == "euler") return CNCT_TRANSFORM_EULER;
  return CNCT_TRANSFORM_BOTH;
}

cnct_options options_of(const common_opts& g) {
  cnct_options co;
  cnct_options_init(&co);
  co.transform = transform_of(g.transform);
  co.beta = g.beta;
  co.target_rel_tol = g.tol;
  co.max_order = g.max_order;
  if (g.orders >= 0) {
    co.min_rows = static_cast<uint32_t>(g.orders) + 1;
    co.max_order = std::max(co.max_order, static_cast<uint32_t>(g.orders));
  }
  return co;
}

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 2;
}

int api_error() { return usage_error(cnct_last_error()); }

bool strict_parse(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

/// Accepts "a", "a+bi", "a-bi", "bi" (no spaces; decimal or exponent forms).
bool parse_complex_literal(std::string text, double& re, double& im) {
  re = 0.0;
  im = 0.0;
  if (text.empty()) return false;
  if (text.back() != 'i') return strict_parse(text, re);
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    const char c = text[i];
    if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_s, im_s;
  if (split == std::string::npos) {
    re_s = "0";
    im_s = text;
  } else {
    re_s = text.substr(0, split);
    im_s = text.substr(split);
  }
  if (im_s.empty() || im_s == "+") im_s = "1";
  if (im_s == "-") im_s = "-1";
  return strict_parse(re_s, re) && strict_parse(im_s, im);
}

struct problem_deleter {
  void operator()(cnct_problem* p) const { cnct_problem_free(p); }
};
struct result_deleter {
  void operator()(cnct_result* r) const { cnct_result_free(r); }
};
using problem_ptr = std::unique_ptr<cnct_problem, problem_deleter>;
using result_ptr = std::unique_ptr<cnct_result, result_deleter>;

output_document make_document(const cnct_result* r, std::string problem,
                              params_list params, double scale) {
  output_document doc;
  doc.problem = std::move(problem);
  doc.params = std::move(params);
  doc.scale = scale;
  doc.is_complex = cnct_result_is_complex(r) != 0;
  const std::size_t rows = cnct_result_row_count(r);
  doc.rows.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    cnct_row row;
    if (cnct_result_row(r, i, &row) != CNCT_OK) break;
    output_row o;
    o.n = row.n;
    o.partial_sum =
        scale * std::complex<double>(row.partial_sum[0], row.partial_sum[1]);
    if (row.has_euler)
      o.euler = scale * std::complex<double>(row.euler[0], row.euler[1]);
    if (row.has_levin_d)
      o.levin_d = scale * std::complex<double>(row.levin_d[0], row.levin_d[1]);
    if (row.has_weniger_delta)
      o.weniger_delta = scale * std::complex<double>(row.weniger_delta[0],
                                                     row.weniger_delta[1]);
    doc.rows.push_back(std::move(o));
  }
  double re = 0.0, im = 0.0;
  cnct_result_value(r, &re, &im);
  doc.value = scale * std::complex<double>(re, im);
  doc.error_estimate = std::fabs(scale) * cnct_result_error_estimate(r);
  doc.term_evaluations = cnct_result_term_evaluations(r);
  doc.order_used = cnct_result_order_used(r);
  doc.converged = cnct_result_converged(r) != 0;
  return doc;
}

void print_warnings(const cnct_result* r) {
  const std::size_t n = cnct_result_warning_count(r);
  for (std::size_t i = 0; i < n; ++i)
    std::fprintf(stderr, "warning: %s\n", cnct_result_warning(r, i));
}

std::string render(const output_document& doc, const std::string& format) {
  if (format == "json") return cnct_render::render_json(doc);
  if (format == "csv") return cnct_render::render_csv(doc);
  return cnct_render::render_text(doc);
}

/// Run a prepared problem and print one document.  Returns the exit code.
int run_and_print(const cnct_problem* p, const std::string& name,
                  params_list params, const common_opts& g,
                  const cnct_options& co) {
  cnct_result* raw = nullptr;
  if (cnct_run(p, &co, &raw) != CNCT_OK) return api_error();
  const result_ptr r(raw);
  print_warnings(r.get());
  const double scale = std::isnan(g.scale) ? 1.0 : g.scale;
  const output_document doc =
      make_document(r.get(), name, std::move(params), scale);
  std::printf("%s\n", render(doc, g.format).c_str());
  return doc.converged ? 0 : 3;
}

// ------------------------------------------------------------------
// Commands
// ------------------------------------------------------------------

int cmd_zeta(const std::string& z_text, const common_opts& g) {
  double re = 0.0, im = 0.0;
  if (!parse_complex_literal(z_text, re, im))
    return usage_error("cannot parse argument '" + z_text + "'");
  cnct_problem* raw = nullptr;
  const cnct_status st = im == 0.0 ? cnct_problem_zeta(re, &raw)
                                   : cnct_problem_zeta_complex(re, im, &raw);
  if (st != CNCT_OK) return api_error();
  const problem_ptr p(raw);
  cnct_options co = options_of(g);
  co.include_euler = 1;  // zeta tables carry the Euler comparison column
  return run_and_print(p.get(), "zeta", {{"z", z_text}}, g, co);
}

int cmd_lerch(const std::string& z, double s, double alpha,
              const common_opts& g) {
  cnct_problem* raw = nullptr;
  if (cnct_problem_lerch(z.c_str(), s, alpha, &raw) != CNCT_OK)
    return api_error();
  const problem_ptr p(raw);
  return run_and_print(p.get(), "lerch",
                       {{"z", z},
                        {"s", cnct_render::shortest(s)},
                        {"alpha", cnct_render::shortest(alpha)}},
                       g, options_of(g));
}

int cmd_polylog(double s, const std::string& z, const common_opts& g) {
  cnct_problem* raw = nullptr;
  if (cnct_problem_polylog(s, z.c_str(), &raw) != CNCT_OK) return api_error();
  const problem_ptr p(raw);
  return run_and_print(p.get(), "polylog",
                       {{"s", cnct_render::shortest(s)}, {"z", z}}, g,
                       options_of(g));
}

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += cnct_render::shortest(v[i]);
  }
  return s;
}

int cmd_hyp(const std::vector<double>& nums, const std::vector<double>& dens,
            const std::string& z, const common_opts& g) {
  cnct_problem* raw = nullptr;
  if (cnct_problem_hyp(nums.data(), nums.size(), dens.data(), dens.size(),
                       z.c_str(), &raw) != CNCT_OK)
    return api_error();
  const problem_ptr p(raw);
  return run_and_print(p.get(), "hyp",
                       {{"num", join_doubles(nums)},
                        {"den", join_doubles(dens)},
                        {"z", z}},
                       g, options_of(g));
}

int cmd_bessel_sum(const std::string& r, double y, const common_opts& g) {
  cnct_problem* raw = nullptr;
  if (cnct_problem_bessel_sum(r.c_str(), y, &raw) != CNCT_OK)
    return api_error();
  const problem_ptr p(raw);
  return run_and_print(p.get(), "bessel-sum",
                       {{"r", r}, {"y", cnct_render::shortest(y)}}, g,
                       options_of(g));
}

int cmd_accelerate(const std::string& path, const common_opts& g) {
  std::ifstream in(path);
  if (!in) return usage_error("cannot open '" + path + "'");
  std::vector<double> re, im;
  bool complex_input = false;
  bool first_line = true;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() > 2)
      return usage_error(path + ":" + std::to_string(lineno) +
                         ": expected one number or a re/im pair");
    const bool is_complex = tok.size() == 2;
    if (first_line) {
      complex_input = is_complex;
      first_line = false;
    } else if (is_complex != complex_input) {
      return usage_error(path + ":" + std::to_string(lineno) +
                         ": inconsistent real/complex input");
    }
    double vr = 0.0, vi = 0.0;
    if (!strict_parse(tok[0], vr) ||
        (is_complex && !strict_parse(tok[1], vi)))
      return usage_error(path + ":" + std::to_string(lineno) +
                         ": cannot parse '" + line + "'");
    re.push_back(vr);
    im.push_back(vi);
  }
  if (re.size() < 4)
    return usage_error("need at least 4 terms, got " +
                       std::to_string(re.size()));

  cnct_problem* raw = nullptr;
  cnct_status st;
  if (complex_input) {
    std::vector<double> pairs(2 * re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      pairs[2 * i] = re[i];
      pairs[2 * i + 1] = im[i];
    }
    st = cnct_problem_alternating_complex(pairs.data(), re.size(), &raw);
  } else {
    st = cnct_problem_alternating(re.data(), re.size(), &raw);
  }
  if (st != CNCT_OK) return api_error();
  const problem_ptr p(raw);
  return run_and_print(
      p.get(), "accelerate",
      {{"source", path}, {"terms", std::to_string(re.size())}}, g,
      options_of(g));
}

// ------------------------------------------------------------------
// Benchmark tables
// ------------------------------------------------------------------

struct table_spec {
  const char* id;
  double scale;
  unsigned orders;
  bool include_euler;
  bool complex_golden;
  double golden_re;
  double golden_im;
  double euler_golden;  // NaN when the table has no Euler reference
  cnct_status (*make)(cnct_problem**);
  params_list params;
};

const std::vector<table_spec>& table_registry() {
  static const double nan = std::numeric_limits<double>::quiet_NaN();
  static const std::vector<table_spec> tables = {
      {"4.1", 1e-3, 15, true, false, 0.100577943338497, 0.0, 0.100577817763434,
       [](cnct_problem** p) { return cnct_problem_zeta(1.01, p); },
       {{"series", "zeta"}, {"z", "1.01"}}},
      {"4.2", 10.0, 13, false, false, -0.833333333333333, 0.0, nan,
       [](cnct_problem** p) { return cnct_problem_zeta(-1.0, p); },
       {{"series", "zeta"}, {"z", "-1"}}},
      {"4.3", 1.0, 23, false, true, 0.107439455835313, -0.312976660556163, nan,
       [](cnct_problem** p) { return cnct_problem_zeta_complex(0.5, 13.7, p); },
       {{"series", "zeta"}, {"z", "0.5+13.7i"}}},
      {"5.1", 1e-2, 20, false, false, 0.115129254649702, 0.0, nan,
       [](cnct_problem** p) { return cnct_problem_polylog(1.0, "0.99999", p); },
       {{"series", "polylog"}, {"s", "1"}, {"z", "0.99999"}}},
      {"5.2", 1e-1, 15, false, false, 0.164480893699293, 0.0, nan,
       [](cnct_problem** p) { return cnct_problem_polylog(2.0, "0.99999", p); },
       {{"series", "polylog"}, {"s", "2"}, {"z", "0.99999"}}},
      {"5.3", 1e-1, 15, false, false, 0.120204045438733, 0.0, nan,
       [](cnct_problem** p) { return cnct_problem_polylog(3.0, "0.99999", p); },
       {{"series", "polylog"}, {"s", "3"}, {"z", "0.99999"}}},
      {"5.4", 1e4, 20, false, false, 0.798585139222548, 0.0, nan,
       [](cnct_problem** p) {
         return cnct_problem_lerch("0.99999", 2.0, 10000.0, p);
       },
       {{"series", "lerch"},
        {"z", "0.99999"},
        {"s", "2"},
        {"alpha", "10000"}}},
      {"6.1", 1e-4, 20, false, false, 0.238434298763330, 0.0, nan,
       [](cnct_problem** p) {
         const double nums[] = {1.0, 1.5, 5.0};
         const double dens[] = {1.125, 5.875};
         return cnct_problem_hyp(nums, 3, dens, 2, "0.99999", p);
       },
       {{"series", "hyp"},
        {"num", "1,1.5,5"},
        {"den", "1.125,5.875"},
        {"z", "0.99999"}}},
      {"6.2", 1e-1, 20, false, false, 0.267102823984762, 0.0, nan,
       [](cnct_problem** p) {
         const double nums[] = {1.0, 3.0, 7.0};
         const double dens[] = {2.5, 14.0};
         return cnct_problem_hyp(nums, 3, dens, 2, "0.99999", p);
       },
       {{"series", "hyp"},
        {"num", "1,3,7"},
        {"den", "2.5,14"},
        {"z", "0.99999"}}},
      {"6.3", 1e-1, 20, false, false, 0.267108047538428, 0.0, nan,
       [](cnct_problem** p) {
         const double nums[] = {1.0, 3.0, 7.0};
         const double dens[] = {2.5, 14.0};
         return cnct_problem_hyp(nums, 3, dens, 2, "1", p);
       },
       {{"series", "hyp"}, {"num", "1,3,7"}, {"den", "2.5,14"}, {"z", "1"}}},
      {"7.1", 1e-5, 25, false, false, -0.142847143207135, 0.0, nan,
       [](cnct_problem** p) { return cnct_problem_bessel_sum("0.9999", 0.7, p); },
       {{"series", "bessel-sum"}, {"r", "0.9999"}, {"y", "0.7"}}},
  };
  return tables;
}

/// Run one benchmark table; appends its rendered document to out.
/// check_failed is OR-accumulated.
int run_table(const table_spec& spec, const common_opts& g, bool check,
              std::string& out, bool& check_failed) {
  cnct_problem* praw = nullptr;
  if (spec.make(&praw) != CNCT_OK) return api_error();
  const problem_ptr p(praw);

  const unsigned orders =
      g.orders >= 0 ? static_cast<unsigned>(g.orders) : spec.orders;
  cnct_options co = options_of(g);
  co.max_order = orders;
  co.min_rows = orders + 1;
  co.include_euler = spec.include_euler ? 1 : 0;

  cnct_result* rraw = nullptr;
  if (cnct_run(p.get(), &co, &rraw) != CNCT_OK) return api_error();
  const result_ptr r(rraw);
  print_warnings(r.get());

  const double scale = std::isnan(g.scale) ? spec.scale : g.scale;
  params_list params = spec.params;
  const output_document doc = make_document(
      r.get(), std::string("table ") + spec.id, std::move(params), scale);
  out += render(doc, g.format);

  if (check) {
    bool ok;
    if (spec.complex_golden) {
      ok = std::fabs(doc.value.real() - spec.golden_re) <= 1e-12 &&
           std::fabs(doc.value.imag() - spec.golden_im) <= 1e-12;
    } else {
      ok = std::fabs(doc.value.real() - spec.golden_re) <=
           5e-13 * std::fabs(spec.golden_re);
    }
    if (ok && !std::isnan(spec.euler_golden)) {
      const auto& last = doc.rows.back();
      ok = last.euler.has_value() &&
           std::fabs(last.euler->real() - spec.euler_golden) <=
               5e-13 * std::fabs(spec.euler_golden);
    }
    if (ok) {
      std::fprintf(stderr, "check %s: ok\n", spec.id);
    } else {
      std::fprintf(stderr, "check %s: FAIL (value %.17g%+.17gi)\n", spec.id,
                   doc.value.real(), doc.value.imag());
      check_failed = true;
    }
  }
  return 0;
}

// Tables reproduce a fixed number of orders, so (unlike the function
// commands) their exit code reflects only the reference check; table 4.3
// legitimately ends with its last increments just above the default
// tolerance, exactly as deep as its reference rows go.
int cmd_table(const std::string& id, bool check, const common_opts& g) {
  std::vector<const table_spec*> selected;
  for (const auto& t : table_registry())
    if (id == "all" || id == t.id) selected.push_back(&t);
  if (selected.empty()) return usage_error("unknown table id '" + id + "'");

  std::string out;
  bool check_failed = false;
  bool json_many = g.format == "json" && selected.size() > 1;
  if (json_many) out += "[\n";
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (i > 0) out += json_many ? ",\n" : "\n\n";
    const int rc = run_table(*selected[i], g, check, out, check_failed);
    if (rc != 0) return rc;
  }
  if (json_many) out += "\n]";
  std::printf("%s\n", out.c_str());
  return check_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cnct: series convergence acceleration"};
  app.require_subcommand(1);
  common_opts g;
  int rc = 0;

  auto* zeta = app.add_subcommand(
      "zeta", "Riemann zeta via its condensed alternating series");
  std::string zeta_z;
  zeta->add_option("--z", zeta_z, "argument, real or complex (e.g. 0.5+13.7i)")
      ->required();
  add_common(zeta, g);
  zeta->callback([&] { rc = cmd_zeta(zeta_z, g); });

  auto* lerch = app.add_subcommand("lerch", "Lerch transcendent Phi(z,s,alpha)");
  std::string lerch_z;
  double lerch_s = 1.0, lerch_alpha = 1.0;
  lerch->add_option("--z", lerch_z, "geometric argument, 0 < z <= 1")
      ->required();
  lerch->add_option("--s", lerch_s, "exponent")->required();
  lerch->add_option("--alpha", lerch_alpha, "offset, > 0")->required();
  add_common(lerch, g);
  lerch->callback([&] { rc = cmd_lerch(lerch_z, lerch_s, lerch_alpha, g); });

  auto* polylog = app.add_subcommand("polylog", "polylogarithm Li_s(z)");
  double polylog_s = 1.0;
  std::string polylog_z;
  polylog->add_option("--s", polylog_s, "order")->required();
  polylog->add_option("--z", polylog_z, "argument, 0 < z <= 1")->required();
  add_common(polylog, g);
  polylog->callback([&] { rc = cmd_polylog(polylog_s, polylog_z, g); });

  auto* hyp =
      app.add_subcommand("hyp", "generalized hypergeometric p+1Fp(num;den;z)");
  std::vector<double> hyp_num, hyp_den;
  std::string hyp_z;
  hyp->add_option("--num", hyp_num, "numerator parameters (comma separated)")
      ->required()
      ->delimiter(',');
  hyp->add_option("--den", hyp_den, "denominator parameters (comma separated)")
      ->delimiter(',');
  hyp->add_option("--z", hyp_z, "argument, 0 < z <= 1")->required();
  add_common(hyp, g);
  hyp->callback([&] { rc = cmd_hyp(hyp_num, hyp_den, hyp_z, g); });

  auto* bessel = app.add_subcommand(
      "bessel-sum", "modified spherical Bessel-Hankel product sum");
  std::string bessel_r;
  double bessel_y = 1.0;
  bessel->add_option("--r", bessel_r, "geometric ratio, 0 < r < 1")->required();
  bessel->add_option("--y", bessel_y, "argument, > 0")->required();
  add_common(bessel, g);
  bessel->callback([&] { rc = cmd_bessel_sum(bessel_r, bessel_y, g); });

  auto* table =
      app.add_subcommand("table", "reproduce a built-in benchmark table");
  std::string table_id;
  bool table_check = false;
  bool table_all = false;
  table->add_option("id", table_id, "table id (4.1 ... 7.1) or 'all'");
  table->add_flag("--all", table_all, "run every table in id order");
  table->add_flag("--check", table_check,
                  "verify the accelerated value against the reference");
  add_common(table, g);
  table->callback([&] {
    if (table_all) table_id = "all";
    if (table_id.empty()) {
      rc = usage_error("table needs an id (4.1 ... 7.1) or --all");
      return;
    }
    rc = cmd_table(table_id, table_check, g);
  });

  auto* accel = app.add_subcommand(
      "accelerate", "accelerate alternating terms read from a file");
  std::string accel_file;
  accel
      ->add_option("--input", accel_file,
                   "text file: one signed term (or 're im' pair) per line, "
                   "# starts a comment")
      ->required();
  add_common(accel, g);
  accel->callback([&] { rc = cmd_accelerate(accel_file, g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
