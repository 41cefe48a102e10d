#include "eicp/eicp.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "eicp/enumeration.hpp"
#include "eicp/error.hpp"
#include "eicp/families.hpp"
#include "eicp/localization.hpp"
#include "eicp/report.hpp"

struct eicp_pair {
  eicp::MatrixPair pair;
};

struct eicp_report {
  eicp::Report report;
  std::string json;
  std::string text;
};

struct eicp_family {
  eicp::FamilyInstance instance;
};

namespace {

thread_local std::string g_last_error;

eicp_status fail(eicp_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
eicp_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const eicp::Error& e) {
    return fail(static_cast<eicp_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EICP_ERR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(EICP_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(EICP_ERR_UNKNOWN, "unknown error");
  }
}

eicp_status null_arg(const char* name) {
  return fail(EICP_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

eicp_status copy_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf || cap < s.size() + 1) return fail(EICP_ERR_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return EICP_OK;
}

template <class T>
eicp_status copy_array(const std::vector<T>& v, T* buf, size_t cap, size_t* count) {
  if (count) *count = v.size();
  if (v.size() > cap || (!buf && !v.empty())) return fail(EICP_ERR_BUFFER_TOO_SMALL, "buffer too small");
  std::copy(v.begin(), v.end(), buf);
  return EICP_OK;
}

eicp_interval to_c(const eicp::Interval& iv) { return {iv.lo(), iv.hi()}; }

eicp_certificate to_c(const eicp::ClassCertificate& c) {
  eicp_certificate out{c.is_sdd, c.is_dd, c.is_pd, EICP_COPOSITIVITY_UNKNOWN};
  if (c.copositivity.status == eicp::Copositivity::Copositive) out.copositivity = EICP_COPOSITIVE;
  if (c.copositivity.status == eicp::Copositivity::NotCopositive) out.copositivity = EICP_NOT_COPOSITIVE;
  return out;
}

eicp_status new_pair(eicp::MatrixPair pair, eicp_pair** out) {
  *out = new eicp_pair{std::move(pair)};
  return EICP_OK;
}

}  // namespace

extern "C" {

const char* eicp_version(void) { return "1.0.0"; }

const char* eicp_status_name(eicp_status status) {
  switch (status) {
    case EICP_OK: return "OK";
    case EICP_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case EICP_ERR_UNKNOWN: return "Unknown";
    default: return eicp::error_code_name(static_cast<eicp::ErrorCode>(status));
  }
}

const char* eicp_last_error_message(void) { return g_last_error.c_str(); }

eicp_status eicp_pair_create(size_t n, const double* a, const double* b, eicp_pair** out) {
  if (!a) return null_arg("a");
  if (!out) return null_arg("out");
  if (n == 0) return fail(EICP_ERR_INVALID_ARGUMENT, "n must be positive");
  return guarded([&] {
    eicp::SymMatrix ma(n, {a, n * n});
    eicp::SymMatrix mb = b ? eicp::SymMatrix(n, {b, n * n}) : eicp::SymMatrix::identity(n);
    return new_pair(eicp::MatrixPair(std::move(ma), std::move(mb)), out);
  });
}

eicp_status eicp_pair_from_json(const char* text, eicp_pair** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guarded([&] { return new_pair(eicp::parse_instance(text), out); });
}

eicp_status eicp_pair_from_file(const char* path, eicp_pair** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] { return new_pair(eicp::read_instance_file(path), out); });
}

void eicp_pair_destroy(eicp_pair* pair) { delete pair; }

eicp_status eicp_pair_size(const eicp_pair* pair, size_t* n) {
  if (!pair) return null_arg("pair");
  if (!n) return null_arg("n");
  *n = pair->pair.size();
  return EICP_OK;
}

eicp_status eicp_pair_to_json(const eicp_pair* pair, char* buf, size_t cap, size_t* needed) {
  if (!pair) return null_arg("pair");
  return guarded([&] { return copy_string(eicp::instance_to_json(pair->pair.a(), pair->pair.b()), buf, cap, needed); });
}

eicp_status eicp_pair_certificates(const eicp_pair* pair, eicp_certificate* a, eicp_certificate* b) {
  if (!pair) return null_arg("pair");
  if (a) *a = to_c(pair->pair.cert_a());
  if (b) *b = to_c(pair->pair.cert_b());
  return EICP_OK;
}

eicp_status eicp_pair_shift(const eicp_pair* pair, double mu, eicp_pair** out) {
  if (!pair) return null_arg("pair");
  if (!out) return null_arg("out");
  return guarded([&] { return new_pair(eicp::shift_pair(pair->pair, mu), out); });
}

eicp_status eicp_suggest_shift(const eicp_pair* pair, double* mu) {
  if (!pair) return null_arg("pair");
  if (!mu) return null_arg("mu");
  return guarded([&] {
    *mu = eicp::suggest_shift(pair->pair);
    return EICP_OK;
  });
}

eicp_status eicp_hull_k1(const eicp_pair* pair, eicp_interval* out) {
  if (!pair) return null_arg("pair");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = to_c(eicp::hull_bounds_k1(pair->pair));
    return EICP_OK;
  });
}

eicp_status eicp_hull_k2(const eicp_pair* pair, eicp_interval* out) {
  if (!pair) return null_arg("pair");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = to_c(eicp::hull_bounds_k2(pair->pair));
    return EICP_OK;
  });
}

eicp_status eicp_gamma(const eicp_pair* pair, eicp_interval* out) {
  if (!pair) return null_arg("pair");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = to_c(eicp::gamma_interval(pair->pair));
    return EICP_OK;
  });
}

eicp_status eicp_set_intervals(const eicp_pair* pair, eicp_set_kind kind, eicp_interval* buf,
                               size_t cap, size_t* count) {
  if (!pair) return null_arg("pair");
  return guarded([&] {
    eicp::LocalizationSet set;
    switch (kind) {
      case EICP_SET_K1: set = eicp::k1_set(pair->pair); break;
      case EICP_SET_K1_COP: set = eicp::k1_cop_set(pair->pair); break;
      case EICP_SET_K2: set = eicp::k2_set(pair->pair); break;
      default: return fail(EICP_ERR_INVALID_ARGUMENT, "unknown set kind");
    }
    std::vector<eicp_interval> out;
    for (const eicp::Interval& iv : set.set.intervals()) out.push_back(to_c(iv));
    return copy_array(out, buf, cap, count);
  });
}

eicp_status eicp_spectrum_values(const eicp_pair* pair, size_t n_max, double* buf, size_t cap,
                                 size_t* count) {
  if (!pair) return null_arg("pair");
  return guarded([&] {
    eicp::EnumerationOptions opts;
    if (n_max) opts.n_max = n_max;
    return copy_array(eicp::enumerate_spectrum(pair->pair, opts).values, buf, cap, count);
  });
}

eicp_status eicp_multi_row_roots(const eicp_pair* pair, const size_t* rows, size_t k,
                                 double* low_min, double* up_max) {
  if (!pair) return null_arg("pair");
  if (!rows) return null_arg("rows");
  return guarded([&] {
    const std::vector<std::size_t> idx(rows, rows + k);
    const eicp::MultiRowRoots r = eicp::multi_row_roots(pair->pair, idx);
    if (low_min) *low_min = r.low_min;
    if (up_max) *up_max = r.up_max;
    return EICP_OK;
  });
}

eicp_status eicp_family_all_ones(size_t n, double eps, eicp_family** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new eicp_family{eicp::all_ones_family(n, eps)};
    return EICP_OK;
  });
}

eicp_status eicp_family_proportional(size_t n, double beta, double r, double c, eicp_family** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new eicp_family{eicp::proportional_family(n, beta, r, c)};
    return EICP_OK;
  });
}

void eicp_family_destroy(eicp_family* family) { delete family; }

eicp_status eicp_family_pair(const eicp_family* family, eicp_pair** out) {
  if (!family) return null_arg("family");
  if (!out) return null_arg("out");
  return guarded([&] { return new_pair(family->instance.pair, out); });
}

eicp_status eicp_family_expected_values(const eicp_family* family, eicp_family_expected* out) {
  if (!family) return null_arg("family");
  if (!out) return null_arg("out");
  const eicp::FamilyInstance& f = family->instance;
  *out = {to_c(f.expected_hull_k1), to_c(f.expected_hull_k2), to_c(f.expected_gamma)};
  return EICP_OK;
}

eicp_status eicp_family_sidecar_json(const eicp_family* family, char* buf, size_t cap, size_t* needed) {
  if (!family) return null_arg("family");
  return guarded([&] { return copy_string(eicp::family_sidecar_json(family->instance), buf, cap, needed); });
}

void eicp_options_default(eicp_options* opts) {
  if (!opts) return;
  const eicp::EnumerationOptions e;
  *opts = eicp_options{1, 1, 1, 0, 0, EICP_SHIFT_NONE, 0.0, e.n_max, e.support_tol, 0.0, e.sign_tol, e.dedup_rel_tol};
}

eicp_status eicp_report_create(const eicp_pair* pair, const eicp_options* opts, eicp_report** out) {
  if (!pair) return null_arg("pair");
  if (!out) return null_arg("out");
  eicp_options o;
  eicp_options_default(&o);
  if (opts) o = *opts;
  return guarded([&] {
    eicp::ReportOptions ro;
    ro.want_k1 = o.want_k1 != 0;
    ro.want_k1_cop = o.want_k1_cop != 0;
    ro.want_k2 = o.want_k2 != 0;
    ro.require_sets = o.require_sets != 0;
    ro.want_spectrum = o.want_spectrum != 0;
    switch (o.shift_mode) {
      case EICP_SHIFT_NONE: ro.shift_mode = eicp::ShiftMode::None; break;
      case EICP_SHIFT_AUTO: ro.shift_mode = eicp::ShiftMode::Auto; break;
      case EICP_SHIFT_FIXED: ro.shift_mode = eicp::ShiftMode::Fixed; break;
      default: return fail(EICP_ERR_INVALID_ARGUMENT, "unknown shift mode");
    }
    ro.shift = o.shift;
    ro.enumeration.n_max = o.n_max;
    ro.enumeration.support_tol = o.support_tol;
    if (o.feas_tol > 0.0) ro.enumeration.feas_tol = o.feas_tol;
    ro.enumeration.sign_tol = o.sign_tol;
    ro.enumeration.dedup_rel_tol = o.dedup_rel_tol;
    auto* rep = new eicp_report{eicp::build_report(pair->pair, ro), {}, {}};
    try {
      rep->json = eicp::report_to_json(rep->report);
      rep->text = eicp::render_text(rep->report);
    } catch (...) {
      delete rep;
      throw;
    }
    *out = rep;
    return EICP_OK;
  });
}

void eicp_report_destroy(eicp_report* report) { delete report; }

eicp_status eicp_report_json(const eicp_report* report, char* buf, size_t cap, size_t* needed) {
  if (!report) return null_arg("report");
  return copy_string(report->json, buf, cap, needed);
}

eicp_status eicp_report_text(const eicp_report* report, char* buf, size_t cap, size_t* needed) {
  if (!report) return null_arg("report");
  return copy_string(report->text, buf, cap, needed);
}

}  // extern "C"
