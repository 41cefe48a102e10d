#include "eicp/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eicp/error.hpp"

namespace eicp {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---- verdicts ----

bool all_in(const Vector& values, const IntervalUnion& set, double tol) {
  return std::all_of(values.begin(), values.end(), [&](double v) { return set.contains(v, tol); });
}

bool members_inside(const std::vector<Interval>& inner, const std::vector<Interval>& outer, double tol) {
  return std::all_of(inner.begin(), inner.end(), [&](const Interval& piece) {
    return std::any_of(outer.begin(), outer.end(),
                       [&](const Interval& host) { return host.contains(piece, tol); });
  });
}

Verdicts compute_verdicts(const Report& r) {
  Verdicts v;
  const double mem = r.tolerances.membership;
  const double con = r.tolerances.containment;
  if (r.spectrum) {
    const Vector& pi = r.spectrum->values;
    if (r.k1) v.spectrum_in_k1 = all_in(pi, r.k1->set, mem);
    if (r.k1_cop) v.spectrum_in_k1_cop = all_in(pi, r.k1_cop->set, mem);
    if (r.k2) v.spectrum_in_k2 = all_in(pi, r.k2->set, mem);
    if (r.gamma) v.spectrum_in_gamma = all_in(pi, IntervalUnion({*r.gamma}), mem);
  }
  if (r.k2 && r.k1_cop) {
    std::vector<Interval> k2_members;
    for (const IndexedInterval& m : r.k2->raw) k2_members.push_back(m.interval);
    v.k2_intervals_in_k1_cop = members_inside(k2_members, r.k1_cop->set.intervals(), con);
    v.k2_hull_in_k1_cop_hull = r.k1_cop->hull().contains(r.k2->hull(), con);
  }
  if (r.k1_cop && r.k1) {
    v.k1_cop_in_k1 = members_inside(r.k1_cop->set.intervals(), r.k1->set.intervals(), con);
  }
  return v;
}

template <class F>
std::optional<LocalizationSet> maybe_set(F build, bool wanted, bool available, bool require,
                                         const MatrixPair& pair) {
  if (!wanted) return std::nullopt;
  if (!available && !require) return std::nullopt;
  return build(pair);  // throws HypothesisViolation when unavailable
}

}  // namespace

Report build_report(const MatrixPair& pair, const ReportOptions& opts) {
  Report r;
  r.a = pair.a();
  r.b = pair.b();
  r.tolerances.support = opts.enumeration.support_tol;
  r.tolerances.feasibility = effective_feas_tol(pair, opts.enumeration);
  r.tolerances.sign = opts.enumeration.sign_tol;
  r.tolerances.dedup_rel = opts.enumeration.dedup_rel_tol;
  r.tolerances.n_max = opts.enumeration.n_max;
  r.tolerances.max_exact_n = pair.max_exact_n();

  auto start = Clock::now();
  r.cert_a = pair.cert_a();
  r.cert_b = pair.cert_b();
  std::optional<MatrixPair> shifted;
  if (opts.shift_mode != ShiftMode::None) {
    r.shift = opts.shift_mode == ShiftMode::Auto ? suggest_shift(pair) : opts.shift;
    shifted = shift_pair(pair, r.shift);
    r.shifted_cert_a = shifted->cert_a();
  }
  r.timings.certify_ms = elapsed_ms(start);

  start = Clock::now();
  const MatrixPair& work = shifted ? *shifted : pair;
  const Assumptions as = assumptions_of(work);
  r.k1 = maybe_set(k1_set, opts.want_k1, as.one_row(), opts.require_sets, work);
  r.k1_cop = maybe_set(k1_cop_set, opts.want_k1_cop, as.two_row(), opts.require_sets, work);
  r.k2 = maybe_set(k2_set, opts.want_k2, as.two_row(), opts.require_sets, work);
  if (r.shift != 0.0) {
    for (auto* s : {&r.k1, &r.k1_cop, &r.k2})
      if (*s) *s = (*s)->shifted(-r.shift);
  }
  if (pair.cert_b().is_pd) r.gamma = gamma_interval(pair);
  r.timings.localize_ms = elapsed_ms(start);

  if (opts.want_spectrum) {
    start = Clock::now();
    r.spectrum = enumerate_spectrum(pair, opts.enumeration);
    r.timings.spectrum_ms = elapsed_ms(start);
  }
  r.verdicts = compute_verdicts(r);
  return r;
}

// ---- JSON ----

namespace {

void emit(const json& j, std::string& out, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        emit(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      out += '[';
      // Numeric arrays stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
      bool first = true;
      for (const json& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        emit(e, out, indent, depth + 1);
      }
      if (!flat && !j.empty()) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      // Keep a float marker so the value parses back as a double.
      if (std::string_view(buf).find_first_of(".eEn") == std::string_view::npos) out += ".0";
      return;
    }
    default:
      out += j.dump();
  }
}

json matrix_json(const SymMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (double v : m.row(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

SymMatrix matrix_from_json(const json& j, std::size_t n, double sym_tol) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorCode::ParseError, "matrix must have n rows");
  Vector data;
  data.reserve(n * n);
  for (const json& row : j) {
    if (!row.is_array() || row.size() != n) throw Error(ErrorCode::ParseError, "matrix rows must have n entries");
    for (const json& v : row) {
      if (!v.is_number()) throw Error(ErrorCode::ParseError, "matrix entries must be numbers");
      data.push_back(v.get<double>());
    }
  }
  try {
    return SymMatrix(n, data, sym_tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json interval_json(const Interval& iv) { return json::array({iv.lo(), iv.hi()}); }

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "interval must be [lo, hi]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

const char* copositivity_name(Copositivity c) {
  switch (c) {
    case Copositivity::Copositive: return "copositive";
    case Copositivity::NotCopositive: return "not_copositive";
    case Copositivity::Unknown: return "unknown";
  }
  return "unknown";
}

const char* route_name(CopositivityRoute r) {
  switch (r) {
    case CopositivityRoute::Nonnegative: return "nonnegative";
    case CopositivityRoute::PositiveDefinite: return "positive_definite";
    case CopositivityRoute::Exhaustive: return "exhaustive";
    case CopositivityRoute::None: return "none";
  }
  return "none";
}

template <class E, std::size_t N>
E enum_from(const std::string& s, const std::pair<const char*, E> (&table)[N]) {
  for (const auto& [name, value] : table)
    if (s == name) return value;
  throw Error(ErrorCode::ParseError, "unknown enum value '" + s + "'");
}

json cert_json(const ClassCertificate& c) {
  json j{{"sdd", c.is_sdd},
         {"dd", c.is_dd},
         {"pd", c.is_pd},
         {"copositivity", copositivity_name(c.copositivity.status)},
         {"copositivity_route", route_name(c.copositivity.route)}};
  j["witness"] = c.copositivity.witness ? json(*c.copositivity.witness) : json(nullptr);
  return j;
}

ClassCertificate cert_from_json(const json& j) {
  static const std::pair<const char*, Copositivity> statuses[] = {
      {"copositive", Copositivity::Copositive},
      {"not_copositive", Copositivity::NotCopositive},
      {"unknown", Copositivity::Unknown}};
  static const std::pair<const char*, CopositivityRoute> routes[] = {
      {"nonnegative", CopositivityRoute::Nonnegative},
      {"positive_definite", CopositivityRoute::PositiveDefinite},
      {"exhaustive", CopositivityRoute::Exhaustive},
      {"none", CopositivityRoute::None}};
  ClassCertificate c;
  c.is_sdd = j.at("sdd").get<bool>();
  c.is_dd = j.at("dd").get<bool>();
  c.is_pd = j.at("pd").get<bool>();
  c.copositivity.status = enum_from(j.at("copositivity").get<std::string>(), statuses);
  c.copositivity.route = enum_from(j.at("copositivity_route").get<std::string>(), routes);
  if (!j.at("witness").is_null()) c.copositivity.witness = j.at("witness").get<Vector>();
  return c;
}

json set_json(const LocalizationSet& s) {
  json raw = json::array();
  for (const IndexedInterval& m : s.raw)
    raw.push_back({{"i", m.i}, {"j", m.j}, {"interval", interval_json(m.interval)}});
  json uni = json::array();
  for (const Interval& iv : s.set.intervals()) uni.push_back(interval_json(iv));
  return {{"raw", raw}, {"union", uni}, {"hull", interval_json(s.hull())}};
}

LocalizationSet set_from_json(const json& j) {
  LocalizationSet s;
  for (const json& m : j.at("raw"))
    s.raw.push_back({interval_from_json(m.at("interval")), m.at("i").get<std::size_t>(),
                     m.at("j").get<std::size_t>()});
  std::vector<Interval> members;
  for (const json& iv : j.at("union")) members.push_back(interval_from_json(iv));
  s.set = IntervalUnion(std::move(members));
  return s;
}

json spectrum_json(const Spectrum& sp) {
  json sols = json::array();
  for (const EicpSolution& s : sp.solutions)
    sols.push_back({{"lambda", s.lambda}, {"support", s.support}, {"x", s.x}, {"w", s.w}});
  return {{"values", sp.values}, {"solutions", sols}, {"degenerate_supports", sp.degenerate_supports}};
}

Spectrum spectrum_from_json(const json& j) {
  Spectrum sp;
  sp.values = j.at("values").get<Vector>();
  for (const json& s : j.at("solutions"))
    sp.solutions.push_back({s.at("lambda").get<double>(), s.at("x").get<Vector>(),
                            s.at("support").get<std::vector<std::size_t>>(), s.at("w").get<Vector>()});
  sp.degenerate_supports = j.at("degenerate_supports").get<std::vector<std::vector<std::size_t>>>();
  return sp;
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::optional<bool> opt_bool_from(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<bool>();
}

}  // namespace

std::string report_to_json(const Report& r, int indent) {
  json j;
  j["input"] = {{"n", r.a.size()}, {"A", matrix_json(r.a)}, {"B", matrix_json(r.b)}};
  j["certificates"] = {{"A", cert_json(r.cert_a)}, {"B", cert_json(r.cert_b)}};
  j["shift"] = {{"mu", r.shift},
                {"shifted_A", r.shifted_cert_a ? cert_json(*r.shifted_cert_a) : json(nullptr)}};
  json sets = json::object();
  sets["k1"] = r.k1 ? set_json(*r.k1) : json(nullptr);
  sets["k1_cop"] = r.k1_cop ? set_json(*r.k1_cop) : json(nullptr);
  sets["k2"] = r.k2 ? set_json(*r.k2) : json(nullptr);
  j["sets"] = sets;
  j["gamma"] = r.gamma ? interval_json(*r.gamma) : json(nullptr);
  j["spectrum"] = r.spectrum ? spectrum_json(*r.spectrum) : json(nullptr);
  const Verdicts& v = r.verdicts;
  j["verdicts"] = {{"spectrum_in_k1", opt_bool(v.spectrum_in_k1)},
                   {"spectrum_in_k1_cop", opt_bool(v.spectrum_in_k1_cop)},
                   {"spectrum_in_k2", opt_bool(v.spectrum_in_k2)},
                   {"spectrum_in_gamma", opt_bool(v.spectrum_in_gamma)},
                   {"k2_intervals_in_k1_cop", opt_bool(v.k2_intervals_in_k1_cop)},
                   {"k2_hull_in_k1_cop_hull", opt_bool(v.k2_hull_in_k1_cop_hull)},
                   {"k1_cop_in_k1", opt_bool(v.k1_cop_in_k1)}};
  const Tolerances& t = r.tolerances;
  j["tolerances"] = {{"support", t.support},       {"feasibility", t.feasibility},
                     {"sign", t.sign},             {"dedup_rel", t.dedup_rel},
                     {"membership", t.membership}, {"containment", t.containment},
                     {"n_max", t.n_max},           {"max_exact_n", t.max_exact_n}};
  j["timings_ms"] = {{"certify", r.timings.certify_ms},
                     {"localize", r.timings.localize_ms},
                     {"spectrum", r.timings.spectrum_ms}};
  std::string out;
  emit(j, out, indent, 0);
  out += '\n';
  return out;
}

Report report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    const json& in = j.at("input");
    const std::size_t n = in.at("n").get<std::size_t>();
    r.a = matrix_from_json(in.at("A"), n, kSymmetryTol);
    r.b = matrix_from_json(in.at("B"), n, kSymmetryTol);
    r.cert_a = cert_from_json(j.at("certificates").at("A"));
    r.cert_b = cert_from_json(j.at("certificates").at("B"));
    r.shift = j.at("shift").at("mu").get<double>();
    if (!j.at("shift").at("shifted_A").is_null()) r.shifted_cert_a = cert_from_json(j.at("shift").at("shifted_A"));
    const json& sets = j.at("sets");
    if (!sets.at("k1").is_null()) r.k1 = set_from_json(sets.at("k1"));
    if (!sets.at("k1_cop").is_null()) r.k1_cop = set_from_json(sets.at("k1_cop"));
    if (!sets.at("k2").is_null()) r.k2 = set_from_json(sets.at("k2"));
    if (!j.at("gamma").is_null()) r.gamma = interval_from_json(j.at("gamma"));
    if (!j.at("spectrum").is_null()) r.spectrum = spectrum_from_json(j.at("spectrum"));
    const json& v = j.at("verdicts");
    r.verdicts.spectrum_in_k1 = opt_bool_from(v, "spectrum_in_k1");
    r.verdicts.spectrum_in_k1_cop = opt_bool_from(v, "spectrum_in_k1_cop");
    r.verdicts.spectrum_in_k2 = opt_bool_from(v, "spectrum_in_k2");
    r.verdicts.spectrum_in_gamma = opt_bool_from(v, "spectrum_in_gamma");
    r.verdicts.k2_intervals_in_k1_cop = opt_bool_from(v, "k2_intervals_in_k1_cop");
    r.verdicts.k2_hull_in_k1_cop_hull = opt_bool_from(v, "k2_hull_in_k1_cop_hull");
    r.verdicts.k1_cop_in_k1 = opt_bool_from(v, "k1_cop_in_k1");
    const json& t = j.at("tolerances");
    r.tolerances.support = t.at("support").get<double>();
    r.tolerances.feasibility = t.at("feasibility").get<double>();
    r.tolerances.sign = t.at("sign").get<double>();
    r.tolerances.dedup_rel = t.at("dedup_rel").get<double>();
    r.tolerances.membership = t.at("membership").get<double>();
    r.tolerances.containment = t.at("containment").get<double>();
    r.tolerances.n_max = t.at("n_max").get<std::size_t>();
    r.tolerances.max_exact_n = t.at("max_exact_n").get<std::size_t>();
    const json& tm = j.at("timings_ms");
    r.timings.certify_ms = tm.at("certify").get<double>();
    r.timings.localize_ms = tm.at("localize").get<double>();
    r.timings.spectrum_ms = tm.at("spectrum").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

// ---- text rendering ----

namespace {

constexpr int kColumns = 80;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string cert_line(const char* name, const ClassCertificate& c) {
  std::string s = std::string(name) + ": SDD " + (c.is_sdd ? "yes" : "no") + ", PD " +
                  (c.is_pd ? "yes" : "no") + ", copositive " + copositivity_name(c.copositivity.status);
  if (c.copositivity.status != Copositivity::Unknown) s += std::string(" (") + route_name(c.copositivity.route) + ")";
  return s + "\n";
}

struct Axis {
  double lo;
  double hi;

  int column(double v) const {
    const double t = (v - lo) / (hi - lo) * (kColumns - 1);
    return std::clamp(static_cast<int>(std::lround(t)), 0, kColumns - 1);
  }
};

std::string draw(const Axis& axis, const std::vector<Interval>& pieces) {
  std::string line(kColumns, ' ');
  for (const Interval& iv : pieces) {
    const int a = axis.column(iv.lo());
    const int b = axis.column(iv.hi());
    if (a == b) {
      line[static_cast<std::size_t>(a)] = '|';
      continue;
    }
    for (int c = a + 1; c < b; ++c) line[static_cast<std::size_t>(c)] = '=';
    line[static_cast<std::size_t>(a)] = '[';
    line[static_cast<std::size_t>(b)] = ']';
  }
  return line;
}

std::string union_text(const IntervalUnion& u) {
  std::string s;
  for (const Interval& iv : u.intervals()) {
    if (!s.empty()) s += " U ";
    s += "[" + fmt(iv.lo()) + ", " + fmt(iv.hi()) + "]";
  }
  return s;
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "n = " << r.a.size() << "\n";
  os << cert_line("A", r.cert_a) << cert_line("B", r.cert_b);
  if (r.shifted_cert_a) {
    os << "shift mu = " << fmt(r.shift) << " (sets built on A + mu B, reported shifted back)\n";
    os << cert_line("A + mu B", *r.shifted_cert_a);
  }

  const std::pair<const char*, const std::optional<LocalizationSet>*> sets[] = {
      {"K1 ", &r.k1}, {"K1'", &r.k1_cop}, {"K2 ", &r.k2}};
  for (const auto& [name, set] : sets) {
    if (!*set) continue;
    const Interval h = (*set)->hull();
    os << name << " = " << union_text((*set)->set) << "   hull [" << fmt(h.lo()) << ", " << fmt(h.hi()) << "]\n";
  }
  if (r.gamma) os << "Gamma = [" << fmt(r.gamma->lo()) << ", " << fmt(r.gamma->hi()) << "]\n";
  if (r.spectrum) {
    os << "spectrum (" << r.spectrum->values.size() << " values):\n";
    for (const EicpSolution& s : r.spectrum->solutions) {
      os << "  lambda = " << fmt(s.lambda) << "  support {";
      for (std::size_t k = 0; k < s.support.size(); ++k) os << (k ? "," : "") << s.support[k] + 1;
      os << "}  x = (";
      for (std::size_t k = 0; k < s.x.size(); ++k) os << (k ? ", " : "") << fmt(s.x[k]);
      os << ")\n";
    }
    if (!r.spectrum->degenerate_supports.empty())
      os << "  note: " << r.spectrum->degenerate_supports.size()
         << " support(s) had repeated generalized eigenvalues; only basis vectors were tested\n";
  }

  // Number line over the K1 hull (or whatever is available), padded 5% each side.
  std::optional<Interval> base;
  if (r.k1) base = r.k1->hull();
  else if (r.gamma) base = *r.gamma;
  if (base) {
    double lo = base->lo();
    double hi = base->hi();
    const double pad = 0.05 * (hi - lo > 0.0 ? hi - lo : 1.0 + std::abs(lo));
    Axis axis{lo - pad, hi + pad};
    os << "\nnumber line [" << fmt(axis.lo) << ", " << fmt(axis.hi) << "]\n";
    for (const auto& [name, set] : sets)
      if (*set) os << name << "   " << draw(axis, (*set)->set.intervals()) << "\n";
    if (r.gamma) os << "Gamma " << draw(axis, {*r.gamma}) << "\n";
    if (r.spectrum) {
      std::string marks(kColumns, ' ');
      for (double v : r.spectrum->values) marks[static_cast<std::size_t>(axis.column(v))] = '*';
      os << "Pi    " << marks << "\n";
    }
  }

  const auto verdict = [&](const char* what, const std::optional<bool>& v) {
    if (v) os << "  " << what << ": " << (*v ? "yes" : "NO") << "\n";
  };
  const Verdicts& v = r.verdicts;
  if (v.spectrum_in_k1 || v.k2_intervals_in_k1_cop || v.k1_cop_in_k1) os << "\ncontainment:\n";
  verdict("Pi in K1", v.spectrum_in_k1);
  verdict("Pi in K1'", v.spectrum_in_k1_cop);
  verdict("Pi in K2", v.spectrum_in_k2);
  verdict("Pi in Gamma", v.spectrum_in_gamma);
  verdict("each K2 interval in a K1' interval", v.k2_intervals_in_k1_cop);
  verdict("hull(K2) in hull(K1')", v.k2_hull_in_k1_cop_hull);
  verdict("K1' in K1", v.k1_cop_in_k1);
  return os.str();
}

// ---- instance files ----

MatrixPair parse_instance(const std::string& text, std::size_t max_exact_n) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("A"))
    throw Error(ErrorCode::ParseError, "instance needs keys n and A");
  if (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() == 0)
    throw Error(ErrorCode::ParseError, "n must be a positive integer");
  const std::size_t n = j.at("n").get<std::size_t>();
  constexpr double kFileSymTol = 1e-9;
  SymMatrix a = matrix_from_json(j.at("A"), n, kFileSymTol);
  SymMatrix b = j.contains("B") && !j.at("B").is_null() ? matrix_from_json(j.at("B"), n, kFileSymTol)
                                                        : SymMatrix::identity(n);
  return MatrixPair(std::move(a), std::move(b), max_exact_n);
}

MatrixPair read_instance_file(const std::string& path, std::size_t max_exact_n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str(), max_exact_n);
}

std::string instance_to_json(const SymMatrix& a, const SymMatrix& b) {
  const json j{{"n", a.size()}, {"A", matrix_json(a)}, {"B", matrix_json(b)}};
  std::string out;
  emit(j, out, 2, 0);
  return out + "\n";
}

std::string family_sidecar_json(const FamilyInstance& inst) {
  json params;
  std::string family;
  if (const auto* p = std::get_if<AllOnesParams>(&inst.params)) {
    family = "all_ones";
    params = {{"n", p->n}, {"eps", p->eps}};
  } else {
    const auto& q = std::get<ProportionalParams>(inst.params);
    family = "proportional";
    params = {{"n", q.n}, {"beta", q.beta}, {"R", q.r}, {"c", q.c}};
  }
  const json j{{"family", family},
               {"params", params},
               {"expected", {{"hull_k1", interval_json(inst.expected_hull_k1)},
                             {"hull_k2", interval_json(inst.expected_hull_k2)},
                             {"gamma", interval_json(inst.expected_gamma)}}}};
  std::string out;
  emit(j, out, 2, 0);
  return out + "\n";
}

}  // namespace eicp
