#pragma once

#include <optional>
#include <string>

#include "eicp/enumeration.hpp"
#include "eicp/families.hpp"
#include "eicp/localization.hpp"

namespace eicp {

enum class ShiftMode { None, Auto, Fixed };

struct ReportOptions {
  bool want_k1 = true;
  bool want_k1_cop = true;
  bool want_k2 = true;
  /// Throw HypothesisViolation for a wanted set whose hypotheses fail,
  /// instead of leaving it out.
  bool require_sets = false;
  bool want_spectrum = false;
  ShiftMode shift_mode = ShiftMode::None;
  double shift = 0.0;  // used with ShiftMode::Fixed
  EnumerationOptions enumeration;
};

/// Containment checks; absent when an operand is unavailable.
struct Verdicts {
  std::optional<bool> spectrum_in_k1;
  std::optional<bool> spectrum_in_k1_cop;
  std::optional<bool> spectrum_in_k2;
  std::optional<bool> spectrum_in_gamma;
  /// Every K2 member interval lies inside a single K1' interval.
  std::optional<bool> k2_intervals_in_k1_cop;
  /// hull(K2) lies inside hull(K1').
  std::optional<bool> k2_hull_in_k1_cop_hull;
  std::optional<bool> k1_cop_in_k1;

  bool operator==(const Verdicts&) const = default;
};

struct Tolerances {
  double support = 0.0;
  double feasibility = 0.0;
  double sign = 0.0;
  double dedup_rel = 0.0;
  double membership = 1e-7;   // lambda in a set
  double containment = 1e-9;  // set inside set, on endpoints
  std::size_t n_max = 0;
  std::size_t max_exact_n = 0;

  bool operator==(const Tolerances&) const = default;
};

struct Timings {
  double certify_ms = 0.0;
  double localize_ms = 0.0;
  double spectrum_ms = 0.0;

  bool operator==(const Timings&) const = default;
};

struct Report {
  SymMatrix a{1};
  SymMatrix b{1};
  ClassCertificate cert_a;
  ClassCertificate cert_b;
  double shift = 0.0;
  std::optional<ClassCertificate> shifted_cert_a;
  /// Sets are built on (A + shift B, B) and reported shifted back by -shift.
  std::optional<LocalizationSet> k1;
  std::optional<LocalizationSet> k1_cop;
  std::optional<LocalizationSet> k2;
  std::optional<Interval> gamma;
  std::optional<Spectrum> spectrum;
  Verdicts verdicts;
  Tolerances tolerances;
  Timings timings;

  bool operator==(const Report&) const = default;
};

Report build_report(const MatrixPair& pair, const ReportOptions& opts = {});

/// Reals are written with 17 significant digits so parsing restores them exactly.
std::string report_to_json(const Report& r, int indent = 2);
/// Throws ParseError on malformed input.
Report report_from_json(const std::string& text);

/// Human-readable summary with an 80-column number line of each set.
std::string render_text(const Report& r);

/// Instance document: {"n": n, "A": [[...]], "B": [[...]]}; B may be omitted
/// (identity). Matrices must be symmetric within 1e-9 relative. Any defect
/// is reported as ParseError.
MatrixPair parse_instance(const std::string& text,
                          std::size_t max_exact_n = kDefaultMaxExactCopositiveN);
MatrixPair read_instance_file(const std::string& path,
                              std::size_t max_exact_n = kDefaultMaxExactCopositiveN);
std::string instance_to_json(const SymMatrix& a, const SymMatrix& b);

/// Expected hulls and Gamma of a generated family member.
std::string family_sidecar_json(const FamilyInstance& inst);

}  // namespace eicp
