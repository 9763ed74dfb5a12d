// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// C API implementation: thin handle/exception boundary over the C++ core.

#include "cnct/cnct.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "condense/condensation.hpp"
#include "core/partial_sums.hpp"
#include "core/scalar.hpp"
#include "core/series.hpp"
#include "driver/accelerate.hpp"
#include "functions/appendix.hpp"
#include "functions/bessel.hpp"
#include "functions/hypergeometric.hpp"
#include "functions/lerch.hpp"
#include "functions/zeta.hpp"
#include "transform/transforms.hpp"
#include "util/decimal.hpp"

namespace {

thread_local std::string g_last_error = "no error";

cnct_status fail(cnct_status st, const char* msg) {
  g_last_error = msg;
  return st;
}

/// Run f() inside the exception boundary, translating the library's error
/// hierarchy to status codes.
template <class F>
cnct_status guarded(F&& f) {
  try {
    return f();
  } catch (const cnct::pole_error& e) {
    return fail(CNCT_ERR_POLE, e.what());
  } catch (const cnct::inner_sum_error& e) {
    return fail(CNCT_ERR_INNER_SUM, e.what());
  } catch (const cnct::overflow_guard_error& e) {
    return fail(CNCT_ERR_OVERFLOW_GUARD, e.what());
  } catch (const cnct::contract_error& e) {
    return fail(CNCT_ERR_CONTRACT, e.what());
  } catch (const cnct::domain_error& e) {
    return fail(CNCT_ERR_DOMAIN, e.what());
  } catch (const cnct::error& e) {
    return fail(CNCT_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CNCT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CNCT_ERR_INTERNAL, e.what());
  }
}

cnct::series_terms<cnct::real> custom_series(cnct_term_fn fn, void* ctx,
                                             cnct_sign_pattern sign) {
  cnct::sign_pattern tag;
  switch (sign) {
    case CNCT_SIGN_MONOTONE_NONNEGATIVE:
      tag = cnct::sign_pattern::monotone_nonnegative;
      break;
    case CNCT_SIGN_MONOTONE_NONPOSITIVE:
      tag = cnct::sign_pattern::monotone_nonpositive;
      break;
    case CNCT_SIGN_ALTERNATING:
      tag = cnct::sign_pattern::alternating;
      break;
    case CNCT_SIGN_GENERAL:
      tag = cnct::sign_pattern::general;
      break;
    default:
      throw cnct::domain_error("invalid sign pattern");
  }
  return cnct::series_terms<cnct::real>(
      [fn, ctx](std::uint64_t idx) { return fn(idx, ctx); }, tag);
}

cnct::acceleration_options make_options(const cnct_options* o) {
  cnct::acceleration_options opt;
  if (o == nullptr) return opt;
  switch (o->transform) {
    case CNCT_TRANSFORM_LEVIN_D:
      opt.transform = cnct::transform_kind::levin_d;
      break;
    case CNCT_TRANSFORM_WENIGER_DELTA:
      opt.transform = cnct::transform_kind::weniger_delta;
      break;
    case CNCT_TRANSFORM_EULER:
      opt.transform = cnct::transform_kind::euler;
      break;
    case CNCT_TRANSFORM_BOTH:
      opt.transform = cnct::transform_kind::both;
      break;
    default:
      throw cnct::domain_error("invalid transform selector");
  }
  opt.beta = o->beta;
  opt.target_rel_tol = o->target_rel_tol;
  opt.max_order = o->max_order;
  opt.min_rows = o->min_rows;
  opt.include_euler = o->include_euler != 0;
  return opt;
}

cnct::condensation_config make_condensation(const cnct_options* o) {
  cnct::condensation_config cfg;
  if (o == nullptr) return cfg;
  cfg.inner_rel_tol = o->inner_rel_tol;
  cfg.inner_abs_floor = o->inner_abs_floor;
  cfg.max_inner_terms = o->max_inner_terms;
  cfg.max_index = o->max_index;
  return cfg;
}

/// Alternating sums and condensed-term magnitudes from signed terms
/// t_j = (-1)^j A_j.
template <class S>
void split_alternating(const std::vector<S>& t, std::vector<S>& sums,
                       std::vector<S>& condensed) {
  sums.clear();
  condensed.clear();
  sums.reserve(t.size());
  condensed.reserve(t.size());
  S acc = S(0);
  for (std::size_t j = 0; j < t.size(); ++j) {
    acc += t[j];
    sums.push_back(acc);
    condensed.push_back((j % 2 == 0) ? t[j] : -t[j]);
  }
}

template <class S, class Z>
cnct::acceleration_result<S> run_zeta_alt(
    Z z, const cnct::acceleration_options& opt) {
  // Order m consumes A_{m+1}, so max_order+2 closed-form terms suffice.
  std::vector<S> a;
  std::vector<S> sums;
  a.reserve(opt.max_order + 2);
  sums.reserve(opt.max_order + 2);
  S acc = S(0);
  for (std::size_t j = 0; j < opt.max_order + 2; ++j) {
    const S v = cnct::zeta_condensed_closed(z, j);
    acc += (j % 2 == 0) ? v : -v;
    a.push_back(v);
    sums.push_back(acc);
  }
  return cnct::accelerate_alternating(sums, a, opt);
}

template <class S>
void fill_row(const cnct::output_row<S>& src, cnct_row* out) {
  const auto put = [](const S& v, double* slot) {
    const cnct::cplx c(v);
    slot[0] = c.real();
    slot[1] = c.imag();
  };
  out->n = src.n;
  put(src.partial_sum, out->partial_sum);
  out->has_euler = src.euler.has_value() ? 1 : 0;
  out->has_levin_d = src.levin_d.has_value() ? 1 : 0;
  out->has_weniger_delta = src.weniger_delta.has_value() ? 1 : 0;
  put(src.euler.value_or(S(0)), out->euler);
  put(src.levin_d.value_or(S(0)), out->levin_d);
  put(src.weniger_delta.value_or(S(0)), out->weniger_delta);
}

cnct::transform_family make_family(cnct_family family) {
  switch (family) {
    case CNCT_FAMILY_LEVIN_D:
      return cnct::transform_family::levin_d;
    case CNCT_FAMILY_WENIGER_DELTA:
      return cnct::transform_family::weniger_delta;
    default:
      throw cnct::domain_error("invalid transform family");
  }
}

}  // namespace

struct cnct_problem {
  enum class kind {
    monotone_series,       // condensation pipeline
    alternating_series,    // generator of signed terms t_j
    alternating_fixed,     // fixed list of signed terms
    alternating_fixed_c,   // fixed complex list
    zeta_alt,              // closed-form condensed zeta, real z
    zeta_alt_c             // closed-form condensed zeta, complex z
  };
  kind k = kind::monotone_series;
  std::optional<cnct::series_terms<cnct::real>> terms;
  std::vector<double> fixed;
  std::vector<cnct::cplx> fixed_c;
  double z = 0.0;
  cnct::cplx zc{};
};

struct cnct_result {
  bool is_complex = false;
  cnct::acceleration_result<cnct::real> re;
  cnct::acceleration_result<cnct::cplx> cx;
};

extern "C" {

const char* cnct_last_error(void) { return g_last_error.c_str(); }

uint32_t cnct_abi_version(void) { return 1; }

void cnct_options_init(cnct_options* o) {
  if (o == nullptr) return;
  o->transform = CNCT_TRANSFORM_BOTH;
  o->beta = 1.0;
  o->target_rel_tol = 1e-14;
  o->max_order = 30;
  o->min_rows = 0;
  o->include_euler = 0;
  const cnct::condensation_config cfg;
  o->inner_rel_tol = cfg.inner_rel_tol;
  o->inner_abs_floor = cfg.inner_abs_floor;
  o->max_inner_terms = static_cast<uint32_t>(cfg.max_inner_terms);
  o->max_index = cfg.max_index;
}

// ------------------------------------------------------------------
// Problem constructors
// ------------------------------------------------------------------

static cnct_status deliver(cnct_problem** out,
                           std::unique_ptr<cnct_problem> p) {
  *out = p.release();
  return CNCT_OK;
}

cnct_status cnct_problem_zeta(double z, cnct_problem** out) {
  if (out == nullptr) return fail(CNCT_ERR_BAD_ARG, "null output pointer");
  return guarded([&]() {
    if (z == 1.0) throw cnct::pole_error("zeta prefactor pole at z = 1");
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::zeta_alt;
    p->z = z;
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_zeta_complex(double re, double im,
                                      cnct_problem** out) {
  if (out == nullptr) return fail(CNCT_ERR_BAD_ARG, "null output pointer");
  return guarded([&]() {
    if (re == 1.0 && im == 0.0)
      throw cnct::pole_error("zeta prefactor pole at z = 1");
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::zeta_alt_c;
    p->zc = cnct::cplx(re, im);
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_zeta_dirichlet(double z, cnct_problem** out) {
  if (out == nullptr) return fail(CNCT_ERR_BAD_ARG, "null output pointer");
  return guarded([&]() {
    if (!(z > 1.0))
      throw cnct::domain_error("dirichlet condensation requires z > 1");
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::monotone_series;
    p->terms = cnct::zeta_dirichlet_terms(z);
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_lerch(const char* z, double s, double alpha,
                               cnct_problem** out) {
  if (out == nullptr || z == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    cnct::lerch_params lp;
    lp.z = cnct::parse_decimal(z);
    lp.s = s;
    lp.alpha = alpha;
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::monotone_series;
    p->terms = cnct::lerch_terms(lp);
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_polylog(double s, const char* z,
                                 cnct_problem** out) {
  if (out == nullptr || z == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::monotone_series;
    p->terms = cnct::polylog_terms(s, cnct::parse_decimal(z));
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_hyp(const double* nums, size_t num_count,
                             const double* dens, size_t den_count,
                             const char* z, cnct_problem** out) {
  if (out == nullptr || z == nullptr || nums == nullptr ||
      (dens == nullptr && den_count > 0))
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    cnct::hyp_params hp;
    hp.nums.assign(nums, nums + num_count);
    hp.dens.assign(dens, dens + den_count);
    hp.z = cnct::parse_decimal(z);
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::monotone_series;
    p->terms = cnct::pfq_terms(hp);
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_bessel_sum(const char* r, double y,
                                    cnct_problem** out) {
  if (out == nullptr || r == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    cnct::bessel_sum_params bp;
    bp.r = cnct::parse_decimal(r);
    bp.y = y;
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::monotone_series;
    p->terms = cnct::bessel_product_terms(bp);
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_alternating(const double* terms, size_t count,
                                     cnct_problem** out) {
  if (out == nullptr || terms == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    if (count < 4)
      throw cnct::domain_error("alternating input needs at least 4 terms");
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::alternating_fixed;
    p->fixed.assign(terms, terms + count);
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_alternating_complex(const double* re_im_pairs,
                                             size_t count,
                                             cnct_problem** out) {
  if (out == nullptr || re_im_pairs == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    if (count < 4)
      throw cnct::domain_error("alternating input needs at least 4 terms");
    auto p = std::make_unique<cnct_problem>();
    p->k = cnct_problem::kind::alternating_fixed_c;
    p->fixed_c.reserve(count);
    for (size_t i = 0; i < count; ++i)
      p->fixed_c.emplace_back(re_im_pairs[2 * i], re_im_pairs[2 * i + 1]);
    return deliver(out, std::move(p));
  });
}

cnct_status cnct_problem_custom(cnct_term_fn fn, void* ctx,
                                cnct_sign_pattern sign, cnct_problem** out) {
  if (out == nullptr || fn == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    auto p = std::make_unique<cnct_problem>();
    p->terms = custom_series(fn, ctx, sign);
    p->k = cnct::is_monotone(p->terms->pattern())
               ? cnct_problem::kind::monotone_series
               : cnct_problem::kind::alternating_series;
    return deliver(out, std::move(p));
  });
}

void cnct_problem_free(cnct_problem* p) { delete p; }

// ------------------------------------------------------------------
// Running
// ------------------------------------------------------------------

cnct_status cnct_run(const cnct_problem* p, const cnct_options* o,
                     cnct_result** out) {
  if (p == nullptr || out == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    const cnct::acceleration_options opt = make_options(o);
    auto res = std::make_unique<cnct_result>();
    switch (p->k) {
      case cnct_problem::kind::monotone_series:
      case cnct_problem::kind::alternating_series: {
        cnct::acceleration_request req{
            *p->terms, opt, make_condensation(o),
            p->k == cnct_problem::kind::monotone_series
                ? cnct::acceleration_mode::condense_then_accelerate
                : cnct::acceleration_mode::accelerate_given_alternating};
        res->re = cnct::cnct(req);
        break;
      }
      case cnct_problem::kind::alternating_fixed: {
        std::vector<double> sums, condensed;
        split_alternating(p->fixed, sums, condensed);
        res->re = cnct::accelerate_alternating(sums, condensed, opt);
        break;
      }
      case cnct_problem::kind::alternating_fixed_c: {
        std::vector<cnct::cplx> sums, condensed;
        split_alternating(p->fixed_c, sums, condensed);
        res->cx = cnct::accelerate_alternating(sums, condensed, opt);
        res->is_complex = true;
        break;
      }
      case cnct_problem::kind::zeta_alt:
        res->re = run_zeta_alt<cnct::real>(p->z, opt);
        break;
      case cnct_problem::kind::zeta_alt_c:
        res->cx = run_zeta_alt<cnct::cplx>(p->zc, opt);
        res->is_complex = true;
        break;
    }
    *out = res.release();
    return CNCT_OK;
  });
}

void cnct_result_free(cnct_result* r) { delete r; }

int cnct_result_is_complex(const cnct_result* r) {
  return (r != nullptr && r->is_complex) ? 1 : 0;
}

void cnct_result_value(const cnct_result* r, double* re, double* im) {
  if (r == nullptr) return;
  const cnct::cplx v = r->is_complex ? r->cx.value : cnct::cplx(r->re.value);
  if (re != nullptr) *re = v.real();
  if (im != nullptr) *im = v.imag();
}

double cnct_result_error_estimate(const cnct_result* r) {
  if (r == nullptr) return 0.0;
  return r->is_complex ? r->cx.error_estimate : r->re.error_estimate;
}

uint64_t cnct_result_term_evaluations(const cnct_result* r) {
  if (r == nullptr) return 0;
  return r->is_complex ? r->cx.term_evaluations : r->re.term_evaluations;
}

uint32_t cnct_result_order_used(const cnct_result* r) {
  if (r == nullptr) return 0;
  return static_cast<uint32_t>(r->is_complex ? r->cx.order_used
                                             : r->re.order_used);
}

int cnct_result_converged(const cnct_result* r) {
  if (r == nullptr) return 0;
  return (r->is_complex ? r->cx.converged : r->re.converged) ? 1 : 0;
}

size_t cnct_result_row_count(const cnct_result* r) {
  if (r == nullptr) return 0;
  return r->is_complex ? r->cx.rows.size() : r->re.rows.size();
}

cnct_status cnct_result_row(const cnct_result* r, size_t i, cnct_row* out) {
  if (r == nullptr || out == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  if (i >= cnct_result_row_count(r))
    return fail(CNCT_ERR_BAD_ARG, "row index out of range");
  if (r->is_complex)
    fill_row(r->cx.rows[i], out);
  else
    fill_row(r->re.rows[i], out);
  return CNCT_OK;
}

size_t cnct_result_warning_count(const cnct_result* r) {
  if (r == nullptr) return 0;
  return r->is_complex ? r->cx.stability_warnings.size()
                       : r->re.stability_warnings.size();
}

const char* cnct_result_warning(const cnct_result* r, size_t i) {
  if (r == nullptr) return "";
  const auto& w =
      r->is_complex ? r->cx.stability_warnings : r->re.stability_warnings;
  return i < w.size() ? w[i].c_str() : "";
}

// ------------------------------------------------------------------
// Transform-level entry points
// ------------------------------------------------------------------

cnct_status cnct_transform_diagonal(cnct_family family, double beta,
                                    const double* s, const double* omega,
                                    size_t count, double* diag_out,
                                    int* flag_out) {
  if (s == nullptr || omega == nullptr || diag_out == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    cnct::diagonal_accelerator<cnct::real> acc(make_family(family), beta);
    for (size_t m = 0; m < count; ++m) {
      const auto e = acc.push(s[m], omega[m]);
      diag_out[m] = e.value;
      if (flag_out != nullptr) flag_out[m] = e.flagged ? 1 : 0;
    }
    return CNCT_OK;
  });
}

cnct_status cnct_transform_direct(cnct_family family, double beta,
                                  const double* s, const double* omega,
                                  size_t count, uint32_t k, uint32_t n,
                                  double* value_out) {
  if (s == nullptr || omega == nullptr || value_out == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    const std::vector<double> sv(s, s + count);
    const std::vector<double> ov(omega, omega + count);
    const auto r = family == CNCT_FAMILY_LEVIN_D
                       ? cnct::levin_direct(beta, sv, ov, k, n)
                       : cnct::weniger_direct(beta, sv, ov, k, n);
    *value_out = r.value;
    return CNCT_OK;
  });
}

cnct_status cnct_euler_transform(const double* u, size_t count, double* out) {
  if (u == nullptr || out == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    if (count == 0) throw cnct::domain_error("empty input");
    const std::vector<double> uv(u, u + count);
    const std::vector<double> e = cnct::euler_transform(uv, count - 1);
    std::memcpy(out, e.data(), count * sizeof(double));
    return CNCT_OK;
  });
}

cnct_status cnct_condense(cnct_term_fn fn, void* ctx, cnct_sign_pattern sign,
                          const cnct_options* o, size_t count, double* a_out,
                          uint64_t* evals_out) {
  if (fn == nullptr || a_out == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    cnct::condensed_cache<cnct::real> cache(
        cnct::memoized_terms<cnct::real>(custom_series(fn, ctx, sign)),
        make_condensation(o));
    for (size_t j = 0; j < count; ++j) a_out[j] = cache.term(j).value;
    if (evals_out != nullptr) *evals_out = cache.evaluations();
    return CNCT_OK;
  });
}

// ------------------------------------------------------------------
// Reference values
// ------------------------------------------------------------------

cnct_status cnct_zeta_neg_int(uint32_t l, double* out) {
  if (out == nullptr) return fail(CNCT_ERR_BAD_ARG, "null output pointer");
  return guarded([&]() {
    *out = cnct::zeta_neg_int(l);
    return CNCT_OK;
  });
}

cnct_status cnct_euler_maclaurin_zeta(double z, uint32_t n, uint32_t q,
                                      double* out) {
  if (out == nullptr) return fail(CNCT_ERR_BAD_ARG, "null output pointer");
  return guarded([&]() {
    *out = cnct::euler_maclaurin_zeta(z, n, q);
    return CNCT_OK;
  });
}

cnct_status cnct_zeta_truncation_estimate(double z, uint64_t n, double* out) {
  if (out == nullptr) return fail(CNCT_ERR_BAD_ARG, "null output pointer");
  return guarded([&]() {
    *out = cnct::zeta_truncation_estimate(z, n);
    return CNCT_OK;
  });
}

cnct_status cnct_bessel_closed_form(const char* r, double y, double* out) {
  if (out == nullptr || r == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    cnct::bessel_sum_params bp;
    bp.r = cnct::parse_decimal(r);
    bp.y = y;
    *out = cnct::bessel_sum_closed_form(bp);
    return CNCT_OK;
  });
}

cnct_status cnct_one_f_zero_value(uint32_t l, double* out) {
  if (out == nullptr) return fail(CNCT_ERR_BAD_ARG, "null output pointer");
  return guarded([&]() {
    *out = cnct::one_f_zero_value(l);
    return CNCT_OK;
  });
}

cnct_status cnct_alternating_power_tail(int64_t n, int l, double* out) {
  if (out == nullptr) return fail(CNCT_ERR_BAD_ARG, "null output pointer");
  return guarded([&]() {
    *out = cnct::alternating_power_tail(n, l);
    return CNCT_OK;
  });
}

cnct_status cnct_parse_decimal(const char* text, double* hi, double* lo) {
  if (text == nullptr || hi == nullptr || lo == nullptr)
    return fail(CNCT_ERR_BAD_ARG, "null pointer argument");
  return guarded([&]() {
    const cnct::decimal_value v = cnct::parse_decimal(text);
    *hi = v.hi;
    *lo = v.lo;
    return CNCT_OK;
  });
}

}  // extern "C"
