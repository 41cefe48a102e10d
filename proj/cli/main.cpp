// eicp command-line front end. Exit codes: 0 ok, 1 other failure, 2 parse,
// 3 hypothesis, 4 size, 5 parameters.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eicp/eicp.h"

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kHypothesis = 3, kSize = 4, kParams = 5 };

int exit_code(eicp_status s) {
  switch (s) {
    case EICP_OK: return kOk;
    case EICP_ERR_PARSE:
    case EICP_ERR_NOT_SYMMETRIC:
    case EICP_ERR_DIMENSION_MISMATCH: return kParse;
    case EICP_ERR_HYPOTHESIS_VIOLATION:
    case EICP_ERR_NOT_POSITIVE_DEFINITE:
    case EICP_ERR_NEGATIVE_DISCRIMINANT: return kHypothesis;
    case EICP_ERR_DIMENSION_TOO_LARGE: return kSize;
    case EICP_ERR_PARAM_OUT_OF_RANGE:
    case EICP_ERR_NEGATIVE_SHIFT: return kParams;
    default: return kFailure;
  }
}

int report_error(eicp_status s) {
  std::cerr << "error: " << eicp_status_name(s) << ": " << eicp_last_error_message() << "\n";
  return exit_code(s);
}

template <class Getter>
std::string fetch_string(Getter get) {
  size_t needed = 0;
  get(nullptr, 0, &needed);
  std::string out(needed, '\0');
  if (get(out.data(), out.size(), &needed) != EICP_OK) return {};
  out.resize(needed - 1);
  return out;
}

struct PairHandle {
  eicp_pair* p = nullptr;
  ~PairHandle() { eicp_pair_destroy(p); }
};

struct ReportHandle {
  eicp_report* r = nullptr;
  ~ReportHandle() { eicp_report_destroy(r); }
};

struct FamilyHandle {
  eicp_family* f = nullptr;
  ~FamilyHandle() { eicp_family_destroy(f); }
};

int run_report(const std::string& path, const eicp_options& opts, bool json) {
  PairHandle pair;
  if (eicp_status s = eicp_pair_from_file(path.c_str(), &pair.p); s != EICP_OK) return report_error(s);
  ReportHandle rep;
  if (eicp_status s = eicp_report_create(pair.p, &opts, &rep.r); s != EICP_OK) return report_error(s);
  const std::string out = fetch_string([&](char* b, size_t c, size_t* n) {
    return json ? eicp_report_json(rep.r, b, c, n) : eicp_report_text(rep.r, b, c, n);
  });
  std::cout << out;
  return kOk;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localization sets and complementarity spectra of symmetric matrix pairs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eicp_version()));

  eicp_options opts;
  eicp_options_default(&opts);
  std::string path;
  bool json = false;

  auto* check = app.add_subcommand("check", "Certify SDD, PD and copositivity of A and B");
  std::vector<std::string> require;
  check->add_option("file", path, "Instance file")->required();
  check->add_option("--require", require, "Certificates that must hold: a-pd, a-copositive, a-sdd, b-pd, b-sdd")
      ->delimiter(',')
      ->check(CLI::IsMember({"a-pd", "a-copositive", "a-sdd", "b-pd", "b-sdd"}));
  check->add_flag("--json", json, "Print the machine-readable report");

  auto* localize = app.add_subcommand("localize", "Build localization sets");
  std::vector<std::string> sets{"k1", "k1cop", "k2"};
  std::string shift = "none";
  localize->add_option("file", path, "Instance file")->required();
  localize->add_option("--sets", sets, "Sets to build")
      ->delimiter(',')
      ->check(CLI::IsMember({"k1", "k1cop", "k2"}))
      ->capture_default_str();
  localize->add_option("--shift", shift, "Spectral shift: none, auto, or a value mu >= 0")->capture_default_str();
  localize->add_flag("--json", json, "Print the machine-readable report");

  auto* spectrum = app.add_subcommand("spectrum", "Enumerate the complementarity spectrum");
  double feas_tol = 0.0;
  spectrum->add_option("file", path, "Instance file")->required();
  spectrum->add_option("--nmax", opts.n_max, "Largest dimension to enumerate")->capture_default_str();
  spectrum->add_option("--tol-feas", feas_tol, "Feasibility tolerance (default 1e-8 (1 + ||A|| + ||B||))");
  spectrum->add_option("--tol-support", opts.support_tol, "Support tolerance")->capture_default_str();
  spectrum->add_option("--tol-sign", opts.sign_tol, "Eigenvector sign tolerance")->capture_default_str();
  spectrum->add_option("--tol-dedup", opts.dedup_rel_tol, "Relative deduplication tolerance")->capture_default_str();
  spectrum->add_flag("--json", json, "Print the machine-readable report");

  auto* family = app.add_subcommand("family", "Write a parametric family member and its expected sets");
  int prop = 0;
  size_t n = 3;
  double eps = 2.0, beta = 2.0, r = 1.0, c = 1.0;
  std::string emit;
  family->add_option("--prop", prop, "4: A = E + eps I, B = (n-1+eps) I - E; 5: B = beta I + R/(n-1) (E-I), A = c B")
      ->required()
      ->check(CLI::IsMember({4, 5}));
  family->add_option("--n", n, "Dimension")->capture_default_str();
  family->add_option("--eps", eps, "eps > 1")->capture_default_str();
  family->add_option("--beta", beta, "beta > R")->capture_default_str();
  family->add_option("--R", r, "R > 0")->capture_default_str();
  family->add_option("--c", c, "c > 0")->capture_default_str();
  family->add_option("--emit", emit, "Instance path; expected values go to <path>.expected.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  if (*check) {
    opts.want_k1 = opts.want_k1_cop = opts.want_k2 = 0;
    PairHandle pair;
    if (eicp_status s = eicp_pair_from_file(path.c_str(), &pair.p); s != EICP_OK) return report_error(s);
    if (int rc = run_report(path, opts, json); rc != kOk) return rc;
    eicp_certificate ca, cb;
    eicp_pair_certificates(pair.p, &ca, &cb);
    int rc = kOk;
    for (const std::string& req : require) {
      const eicp_certificate& cert = req[0] == 'a' ? ca : cb;
      const std::string what = req.substr(2);
      const bool ok = what == "pd" ? cert.pd : what == "sdd" ? cert.sdd : cert.copositivity == EICP_COPOSITIVE;
      if (!ok) {
        std::cerr << "requirement not met: " << req << "\n";
        rc = kHypothesis;
      }
    }
    return rc;
  }

  if (*localize) {
    opts.want_k1 = opts.want_k1_cop = opts.want_k2 = 0;
    for (const std::string& s : sets) {
      if (s == "k1") opts.want_k1 = 1;
      if (s == "k1cop") opts.want_k1_cop = 1;
      if (s == "k2") opts.want_k2 = 1;
    }
    opts.require_sets = 1;
    if (shift == "auto") {
      opts.shift_mode = EICP_SHIFT_AUTO;
    } else if (shift != "none") {
      try {
        size_t used = 0;
        opts.shift = std::stod(shift, &used);
        if (used != shift.size()) throw std::invalid_argument(shift);
      } catch (const std::exception&) {
        std::cerr << "error: --shift expects none, auto or a number\n";
        return kParse;
      }
      opts.shift_mode = EICP_SHIFT_FIXED;
    }
    return run_report(path, opts, json);
  }

  if (*spectrum) {
    opts.want_spectrum = 1;
    opts.feas_tol = feas_tol;
    return run_report(path, opts, json);
  }

  FamilyHandle fam;
  const eicp_status s = prop == 4 ? eicp_family_all_ones(n, eps, &fam.f)
                                  : eicp_family_proportional(n, beta, r, c, &fam.f);
  if (s != EICP_OK) return report_error(s);
  PairHandle pair;
  if (eicp_status st = eicp_family_pair(fam.f, &pair.p); st != EICP_OK) return report_error(st);
  const std::string instance =
      fetch_string([&](char* b, size_t cap, size_t* need) { return eicp_pair_to_json(pair.p, b, cap, need); });
  const std::string sidecar =
      fetch_string([&](char* b, size_t cap, size_t* need) { return eicp_family_sidecar_json(fam.f, b, cap, need); });
  if (emit.empty()) {
    std::cout << instance << sidecar;
    return kOk;
  }
  if (!write_file(emit, instance) || !write_file(emit + ".expected.json", sidecar)) {
    std::cerr << "error: cannot write " << emit << "\n";
    return kFailure;
  }
  std::cout << "wrote " << emit << " and " << emit << ".expected.json\n";
  return kOk;
}
