// Command-line front end: sequences, property reports, certificates,
// asymptotic ratios and the (l, a) log-concavity table.
//
// Exit codes: 0 success, 1 property violation, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpseq/asymptotics.hpp"
#include "gpseq/exact_core.hpp"
#include "gpseq/poly_certificates.hpp"
#include "gpseq/property_checks.hpp"
#include "gpseq/rational.hpp"
#include "gpseq/serialize.hpp"
#include "gpseq/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

gpseq::SeqParams make_params(std::uint64_t m, std::uint32_t l, const std::string& a_text) {
  try {
    return gpseq::SeqParams(m, l, gpseq::parse_rational(a_text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

gpseq::ExactSequence sequence_for(const gpseq::SeqParams& p) {
  if (p.l() == 2 && p.a() == 1) return gpseq::central_binomial_sequence(p.m());
  return gpseq::full_sequence(p);
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad list element \"" + item + "\"");
    }
  }
  if (out.empty()) throw UsageError("empty --m-list");
  return out;
}

int cmd_seq(std::uint64_t m, std::uint32_t l, const std::string& a, bool as_json) {
  const auto seq = sequence_for(make_params(m, l, a));
  if (as_json) {
    std::cout << gpseq::to_json(seq).dump(2) << '\n';
  } else {
    for (std::size_t r = 0; r < seq.size(); ++r) std::cout << r << ' ' << gpseq::to_string(seq.entries[r]) << '\n';
  }
  return kOk;
}

int cmd_check(std::uint64_t m, std::uint32_t l, const std::string& a) {
  const auto rep = gpseq::conjecture_report(sequence_for(make_params(m, l, a)));
  std::cout << gpseq::to_json(rep).dump(2) << '\n';
  return rep.unimodal ? kOk : kViolation;
}

int cmd_peak(std::uint64_t m_max, std::uint32_t l, const std::string& a) {
  int status = kOk;
  std::cout << "m center window peaks unique hit\n";
  for (std::uint64_t m = 2; m <= m_max; ++m) {
    const auto rep = gpseq::conjecture_report(sequence_for(make_params(m, l, a)));
    std::ostringstream peaks;
    for (std::size_t i = 0; i < rep.peak_set.size(); ++i) peaks << (i ? "," : "") << rep.peak_set[i];
    const bool ok = rep.window_hit && rep.unique_max;
    std::cout << m << ' ' << rep.conjectured_center << " [" << rep.window_lo << ',' << rep.window_hi << "] "
              << peaks.str() << ' ' << (rep.unique_max ? "yes" : "no") << ' '
              << (ok ? "yes" : (rep.known_exception ? "exception" : "NO")) << '\n';
    if (!ok && !rep.known_exception) status = kViolation;
    if (!rep.unimodal) status = kViolation;
  }
  return status;
}

int cmd_polycert(std::uint64_t n_max, std::uint64_t m_max, std::uint64_t q_max) {
  if (n_max < 2) throw UsageError("--n-max must be at least 2");
  const auto table = gpseq::build_xy(n_max + 1);
  std::vector<gpseq::Verdict> verdicts = gpseq::verify_closed_forms(table);
  verdicts.push_back(gpseq::verify_lemma37(table));
  verdicts.push_back(gpseq::verify_sign_certificate(table, n_max));
  verdicts.push_back(gpseq::verify_lemma32_upto(m_max));
  verdicts.push_back(gpseq::verify_final_goal_upto(q_max));
  verdicts.push_back(gpseq::verify_lemma34_chain_upto(q_max, &table));

  nlohmann::json out = nlohmann::json::array();
  bool ok = true;
  for (const auto& v : verdicts) {
    out.push_back(gpseq::to_json(v));
    ok = ok && v.passed;
  }
  std::cout << out.dump(2) << '\n';
  return ok ? kOk : kViolation;
}

int cmd_asympt(const std::string& list, std::uint32_t l, const std::string& a) {
  nlohmann::json out = nlohmann::json::array();
  for (std::uint64_t m : parse_list(list)) {
    if (m < 2) throw UsageError("m must be at least 2");
    const auto params = make_params(m, l, a);
    nlohmann::json row{{"m", m}};
    if (params.l() == 2 && params.a() == 1) {
      row["sandwich"] = gpseq::to_json(gpseq::sandwich_bounds(m));
      row["theorem_ratio"] = gpseq::to_json(gpseq::theorem_ratio(m));
    }
    row["conjectured_ratio"] = gpseq::to_json(gpseq::conjectured_ratio(params));
    out.push_back(row);
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_table2(std::uint32_t l_max, std::uint32_t a_max, std::uint64_t m_max, const std::string& out_path,
               const std::string& format, unsigned threads, const std::string& shard_dir) {
  gpseq::SweepGrid grid{{1, l_max}, {1, a_max}, m_max};
  gpseq::ExportFormat fmt;
  try {
    grid.validate();
    fmt = gpseq::parse_export_format(format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  gpseq::SweepOptions options;
  options.threads = threads;
  if (!shard_dir.empty()) options.shard_dir = shard_dir;

  const auto report = gpseq::run_table2(grid, options);
  gpseq::export_report(report, fmt, out_path);

  std::cout << gpseq::table_csv(report);
  std::cout << "unimodal on every sequence: " << (report.unimodality_all ? "yes" : "NO") << '\n';
  std::cout << "peak window violations: " << report.window_violations.size()
            << " (known l=1 exceptions missing the window: " << report.exception_misses.size() << ")\n";
  std::cout << "columns weakly increasing: " << (report.columns_monotone() ? "yes" : "NO") << '\n';
  std::cout << "l-threshold persistence: " << (report.thresholds_persistent() ? "yes" : "NO") << " ("
            << report.thresholds.size() << " (a, m) pairs)\n";
  const bool ok = report.unimodality_all && report.window_violations.empty() && report.columns_monotone() &&
                  report.thresholds_persistent();
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on generalized binomial power-sum sequences"};
  app.require_subcommand(1);

  std::uint64_t m = 0;
  std::uint32_t l = 2;
  std::string a = "1";
  bool as_json = false;
  std::uint64_t m_max = 100;
  std::uint64_t n_max = 200;
  std::uint64_t cert_m_max = 2000;
  std::uint64_t q_max = 500;
  std::string m_list;
  std::uint32_t l_max = 20;
  std::uint32_t a_max = 10;
  std::string out_path;
  std::string format = "csv";
  unsigned threads = gpseq::default_thread_count();
  std::string shard_dir;

  auto* seq = app.add_subcommand("seq", "print the exact sequence");
  seq->add_option("--m", m, "sequence length parameter")->required();
  seq->add_option("--l", l, "power-sum exponent")->required()->check(CLI::PositiveNumber);
  seq->add_option("--a", a, "weight base, \"p/q\" or decimal")->required();
  seq->add_flag("--json", as_json, "emit JSON");

  auto* check = app.add_subcommand("check", "property report for one sequence");
  check->add_option("--m", m)->required();
  check->add_option("--l", l)->required()->check(CLI::PositiveNumber);
  check->add_option("--a", a)->required();

  auto* peak = app.add_subcommand("peak", "peak location against the conjectured window for m = 2..m-max");
  peak->add_option("--m-max", m_max)->required();
  peak->add_option("--l", l)->required()->check(CLI::PositiveNumber);
  peak->add_option("--a", a)->required();

  auto* polycert = app.add_subcommand("polycert", "run every certificate check");
  polycert->add_option("--n-max", n_max, "largest n for coefficient checks, q for the sign certificate")
      ->capture_default_str();
  polycert->add_option("--m-max", cert_m_max, "largest m for the left-peak lemma")->capture_default_str();
  polycert->add_option("--q-max", q_max, "largest q for the final inequality and the equivalence chain")
      ->capture_default_str();

  auto* asympt = app.add_subcommand("asympt", "sandwich bounds and asymptotic ratios");
  asympt->add_option("--m-list", m_list, "comma-separated m values")->required();
  asympt->add_option("--l", l)->capture_default_str()->check(CLI::PositiveNumber);
  asympt->add_option("--a", a)->capture_default_str();

  auto* table2 = app.add_subcommand("table2", "largest non-log-concave m per (l, a)");
  table2->add_option("--l-max", l_max)->capture_default_str();
  table2->add_option("--a-max", a_max)->capture_default_str();
  table2->add_option("--m-max", m_max)->capture_default_str();
  table2->add_option("--out", out_path, "output file")->required();
  table2->add_option("--format", format, "csv or json")->capture_default_str();
  table2->add_option("--threads", threads, "worker threads (default from GPSEQ_THREADS)")->capture_default_str();
  table2->add_option("--shard-dir", shard_dir, "directory for resumable per-cell results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*seq) return cmd_seq(m, l, a, as_json);
    if (*check) return cmd_check(m, l, a);
    if (*peak) return cmd_peak(m_max, l, a);
    if (*polycert) return cmd_polycert(n_max, cert_m_max, q_max);
    if (*asympt) return cmd_asympt(m_list, l, a);
    if (*table2) return cmd_table2(l_max, a_max, m_max, out_path, format, threads, shard_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const gpseq::CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return kViolation;
  } catch (const gpseq::TheoryViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
