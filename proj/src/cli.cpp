#include "lzero/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "lzero/errors.hpp"
#include "lzero/report.hpp"
#include "lzero/version.hpp"

namespace lzero {
namespace {

double parse_real(std::string_view text) {
  std::string s(text);
  if (s.empty() || s == "+" || s == "-") return s == "-" ? -1.0 : 1.0;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw RejectedInput("cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw RejectedInput("cannot parse number '" + s + "'");
  return v;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExactX parse_x(const std::string& text) {
  Rational r;
  try {
    r = Rational::parse(text);
  } catch (const RejectedInput& e) {
    throw UsageError(std::string("--x: ") + e.what());
  }
  return ExactX(r);
}

struct Common {
  std::string cache_path;
  bool csv = false;
  bool json_flag = false;
  std::string precision = "standard";

  std::unique_ptr<ZeroCache> open_cache() const {
    std::string path = cache_path;
    if (path.empty())
      if (const char* env = std::getenv("LZERO_CACHE")) path = env;
    if (path.empty()) return nullptr;
    return std::make_unique<ZeroCache>(path);
  }

  ZeroSettings settings() const {
    ZeroSettings s;
    s.eval.precision = precision == "extended" ? Precision::extended : Precision::standard;
    return s;
  }
};

void add_cache(CLI::App* cmd, Common& c) {
  cmd->add_option("--cache", c.cache_path, "Zero cache (JSON Lines); defaults to $LZERO_CACHE");
  cmd->add_option("--precision", c.precision, "Arithmetic mode")->check(CLI::IsMember({"standard", "extended"}));
}

void flush_warnings(const ZeroCache* cache, std::ostream& err) {
  if (!cache) return;
  for (const auto& w : cache->warnings()) err << "cache: " << w << '\n';
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::pair<i64, i64> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw RejectedInput("range must look like A:B");
  try {
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw RejectedInput("cannot parse range '" + text + "'");
  }
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '*') s += ch;
  if (s.empty()) throw RejectedInput("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s), 0.0};
  s.pop_back();
  // split at the last sign that is not an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s)};
  return {parse_real(s.substr(0, split)), parse_real(s.substr(split))};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of Dirichlet L-functions, Landau sums and distinctness checks", "lzero"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kCodeVersion));
  Common common;

  i64 modulus = 0;
  bool primitive_only = false;
  auto* chars = app.add_subcommand("chars", "List the characters mod q");
  chars->add_option("--modulus", modulus, "Modulus q")->required();
  chars->add_flag("--primitive-only", primitive_only, "Only primitive characters");

  std::string label, s_text;
  auto* eval = app.add_subcommand("eval", "Evaluate L(s, chi)");
  eval->add_option("--label", label, "Conrey label q.n")->required();
  eval->add_option("--s", s_text, "Point sigma+it")->required();
  eval->add_option("--precision", common.precision, "Arithmetic mode")->check(CLI::IsMember({"standard", "extended"}));

  double t1 = 0, t2 = 0;
  auto* zeros = app.add_subcommand("zeros", "Zeros in a height window");
  zeros->add_option("--label", label, "Conrey label q.n")->required();
  zeros->add_option("--t1", t1, "Lower height")->required();
  zeros->add_option("--t2", t2, "Upper height")->required();
  add_cache(zeros, common);

  std::vector<std::string> x_texts;
  auto* landau = app.add_subcommand("landau", "Landau sums over zeros against main term and error budget");
  landau->add_option("--label", label, "Conrey label q.n")->required();
  landau->add_option("--x", x_texts, "Exact rational x, repeatable (7, 5/2, 2.5)")->required();
  landau->add_option("--t1", t1, "Lower height")->required();
  landau->add_option("--t2", t2, "Upper height")->required();
  landau->add_flag("--json", common.json_flag, "JSON output (default)");
  landau->add_flag("--csv", common.csv, "CSV output");
  add_cache(landau, common);

  std::string x_text;
  double bound = 5.0;
  auto* thm2 = app.add_subcommand("verify-thm2", "One Landau report with a pass flag");
  thm2->add_option("--label", label, "Conrey label q.n")->required();
  thm2->add_option("--x", x_text, "Exact rational x")->required();
  thm2->add_option("--t1", t1, "Lower height")->required();
  thm2->add_option("--t2", t2, "Upper height")->required();
  thm2->add_option("--bound", bound, "Pass when |S - M| / E is at most this")->capture_default_str();
  add_cache(thm2, common);

  std::string q_range;
  std::optional<double> theta;
  double c3 = 2, c4 = 1;
  bool cubefree_only = false;
  auto* burgess = app.add_subcommand("burgess", "Witness primes and Burgess ratios over a modulus range");
  burgess->add_option("--q-range", q_range, "A:B")->required();
  burgess->add_option("--theta", theta, "Exponent (default 0.4, or 0.3 with --cubefree-only)");
  burgess->add_option("--c3", c3, "Witness range constant")->capture_default_str();
  burgess->add_option("--c4", c4, "Witness distance constant")->capture_default_str();
  burgess->add_flag("--cubefree-only", cubefree_only, "Cubefree moduli, cubefree exponents");
  burgess->add_flag("--csv", common.csv, "CSV output");

  std::string label1, label2;
  double T = 0, tolerance = 1e-6;
  double lower = 0;
  auto* distinct = app.add_subcommand("distinct", "Compare zero multisets of two characters on (t1, T)");
  distinct->add_option("--label1", label1, "Conrey label q.n1")->required();
  distinct->add_option("--label2", label2, "Conrey label q.n2")->required();
  distinct->add_option("--T", T, "Upper height")->required();
  distinct->add_option("--t1", lower, "Lower height")->capture_default_str();
  distinct->add_option("--tol", tolerance, "Matching tolerance")->capture_default_str();
  distinct->add_option("--theta", theta, "Recorded exponent (echoed)");
  distinct->add_flag("--json", common.json_flag, "JSON output (default)");
  add_cache(distinct, common);

  DistinctnessParams dp;
  auto* thm1 = app.add_subcommand("verify-thm1", "Witness prime, Landau sums and multiset diff for a pair");
  thm1->add_option("--label1", label1, "Conrey label q.n1")->required();
  thm1->add_option("--label2", label2, "Conrey label q.n2")->required();
  thm1->add_option("--T", T, "Height")->required();
  thm1->add_option("--theta", theta, "Exponent (default 0.4, or 0.3 with --cubefree)");
  thm1->add_option("--c1", dp.c1, "Hypothesis constant")->capture_default_str();
  thm1->add_option("--c2", dp.c2, "Region width constant")->capture_default_str();
  thm1->add_option("--c3", dp.c3, "Witness range constant")->capture_default_str();
  thm1->add_option("--c4", dp.c4, "Witness distance constant")->capture_default_str();
  thm1->add_option("--tol", dp.tolerance, "Matching tolerance")->capture_default_str();
  thm1->add_flag("--cubefree", dp.cubefree, "Cubefree exponents");
  add_cache(thm1, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage_error;
  }

  try {
    if (*chars) {
      json arr = json::array();
      for (const auto& chi : primitive_only ? enumerate_primitive(modulus) : enumerate_characters(modulus))
        arr.push_back(to_json(chi));
      emit(out, arr);
    } else if (*eval) {
      const auto chi = character_from_label(CharacterLabel::parse(label));
      const auto s = parse_complex(s_text);
      EvalSettings es;
      es.precision = common.precision == "extended" ? Precision::extended : Precision::standard;
      std::complex<double> value;
      double error = 0;
      if (es.precision == Precision::extended) {
        const auto r = eval_L<long double>(chi, std::complex<long double>(s), es);
        value = std::complex<double>(r.value);
        error = static_cast<double>(r.error);
      } else {
        const auto r = eval_L<double>(chi, s, es);
        value = r.value;
        error = r.error;
      }
      json j;
      j["kind"] = "eval";
      j["version"] = kCodeVersion;
      j["fingerprint"] = es.fingerprint();
      j["label"] = chi.label().str();
      j["s"] = complex_json(s);
      j["value_re"] = value.real();
      j["value_im"] = value.imag();
      j["err_estimate"] = error;
      j["certified"] = error <= es.target_accuracy * std::max(1.0, std::abs(value));
      emit(out, j);
    } else if (*zeros) {
      const auto chi = character_from_label(CharacterLabel::parse(label));
      const auto cache = common.open_cache();
      const auto settings = common.settings();
      const auto list = cached_find_zeros(chi, t1, t2, settings, cache.get());
      flush_warnings(cache.get(), err);
      emit(out, to_json(list, settings));
    } else if (*landau) {
      const auto chi = character_from_label(CharacterLabel::parse(label));
      const auto cache = common.open_cache();
      const auto settings = common.settings();
      std::vector<ExactX> xs;
      for (const auto& t : x_texts) xs.push_back(parse_x(t));
      if (common.csv) out << landau_csv_header() << '\n';
      json arr = json::array();
      for (const auto& x : xs) {
        const auto rep = verify_thm2(chi, x, t1, t2, settings, cache.get());
        if (common.csv)
          out << landau_csv_row(rep) << '\n';
        else
          arr.push_back(to_json(rep, settings));
      }
      flush_warnings(cache.get(), err);
      if (!common.csv) emit(out, arr.size() == 1 ? arr[0] : arr);
    } else if (*thm2) {
      const auto chi = character_from_label(CharacterLabel::parse(label));
      const auto cache = common.open_cache();
      const auto settings = common.settings();
      const auto rep = verify_thm2(chi, parse_x(x_text), t1, t2, settings, cache.get());
      flush_warnings(cache.get(), err);
      json j = to_json(rep, settings);
      j["bound"] = bound;
      j["within_bound"] = rep.ratio <= bound;
      emit(out, j);
    } else if (*burgess) {
      const auto [lo, hi] = parse_range(q_range);
      const double th = theta.value_or(cubefree_only ? 0.3 : 0.4);
      BurgessParams bp;
      bp.theta = th;
      bp.c3 = c3;
      bp.c4 = c4;
      bp.cubefree = cubefree_only;
      if (cubefree_only) {
        bp.r = burgess_min_r_cubefree(th);
        bp.eps = burgess_eps_cubefree(th, bp.r);
      } else {
        bp.eps = std::max(0.0, burgess_eps_general(th));
      }
      const auto table = scan_lemma3(lo, hi, th, c3, c4, cubefree_only);
      std::vector<CharSumReport> sums;
      for (const auto& row : table.rows) {
        const double H = std::ceil(std::pow(static_cast<double>(row.label.modulus), th));
        sums.push_back(char_sum_report(character_from_label(row.label), 0, H, bp));
      }
      if (common.csv) {
        out << burgess_csv_header() << '\n';
        for (std::size_t k = 0; k < table.rows.size(); ++k) out << burgess_csv_row(table.rows[k], sums[k]) << '\n';
      } else {
        json j = to_json(table);
        j["params"]["cubefree_only"] = cubefree_only;
        j["sums"] = json::array();
        double worst_ratio = 0;
        for (const auto& sum : sums) {
          j["sums"].push_back(to_json(sum, bp));
          worst_ratio = std::max(worst_ratio, sum.ratio);
        }
        j["max_burgess_ratio"] = worst_ratio;
        emit(out, j);
      }
    } else if (*distinct) {
      const auto chi1 = character_from_label(CharacterLabel::parse(label1));
      const auto chi2 = character_from_label(CharacterLabel::parse(label2));
      const auto cache = common.open_cache();
      const auto settings = common.settings();
      const auto diff = compare_zero_multisets(chi1, chi2, lower, T, tolerance, settings, cache.get());
      flush_warnings(cache.get(), err);
      json j = to_json(diff);
      j["kind"] = "distinct";
      j["version"] = kCodeVersion;
      j["fingerprint"] = settings.fingerprint();
      j["certified"] = diff.verdict != Verdict::withheld;
      if (theta) j["theta"] = *theta;
      emit(out, j);
    } else if (*thm1) {
      const auto chi1 = character_from_label(CharacterLabel::parse(label1));
      const auto chi2 = character_from_label(CharacterLabel::parse(label2));
      dp.theta = theta.value_or(dp.cubefree ? 0.3 : 0.4);
      const auto cache = common.open_cache();
      const auto settings = common.settings();
      const auto rep = verify_thm1(chi1, chi2, T, dp, settings, cache.get());
      flush_warnings(cache.get(), err);
      emit(out, to_json(rep, settings));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const RejectedInput& e) {
    err << "rejected input: " << e.what() << '\n';
    return ExitCode::rejected_input;
  } catch (const PoleError& e) {
    err << "rejected input: " << e.what() << '\n';
    return ExitCode::rejected_input;
  } catch (const AccuracyFailure& e) {
    err << "accuracy failure: " << e.what() << '\n';
    return ExitCode::accuracy_failure;
  }
  return ExitCode::ok;
}

}  // namespace lzero
