#include "lzero/report.hpp"

#include "lzero/cache.hpp"
#include "lzero/version.hpp"

namespace lzero {
namespace {

json envelope(const char* kind, const std::string& fingerprint) {
  json j;
  j["kind"] = kind;
  j["version"] = kCodeVersion;
  j["fingerprint"] = fingerprint;
  return j;
}

std::string csv_complex(std::complex<double> z) {
  return exact_decimal(z.real() + 0.0) + "," + exact_decimal(z.imag() + 0.0);
}

}  // namespace

json complex_json(std::complex<double> z) { return {{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

json to_json(const DirichletCharacter& chi) {
  return {{"label", chi.label().str()},
          {"conductor", chi.conductor()},
          {"order", chi.order()},
          {"parity", chi.parity()}};
}

json to_json(const Zero& z) {
  return {{"beta", z.beta},
          {"gamma", exact_decimal(z.gamma)},
          {"mult", z.multiplicity},
          {"acc", z.accuracy},
          {"source", z.source == ZeroSource::on_line ? "located-on-line" : "located-off-line"}};
}

json to_json(const ZeroList& list, const ZeroSettings& settings) {
  json j = envelope("zeros", settings.fingerprint());
  j["label"] = list.label.str();
  j["t1"] = list.t1;
  j["t2"] = list.t2;
  j["certified"] = list.certified;
  j["count"] = list.count();
  j["zeros"] = json::array();
  for (const auto& z : list.zeros) j["zeros"].push_back(to_json(z));
  return j;
}

json to_json(const LandauReport& rep, const ZeroSettings& settings) {
  json j = envelope("landau", settings.fingerprint());
  j["label"] = rep.label.str();
  j["x"] = rep.x;
  j["t1"] = rep.t1;
  j["t2"] = rep.t2;
  j["zero_sum"] = complex_json(rep.zero_sum);
  j["main_term"] = complex_json(rep.main);
  j["error_budget"] = rep.error_budget;
  j["observed_error"] = rep.observed_error;
  j["ratio"] = rep.ratio;
  j["zeros_used"] = rep.zeros_used;
  j["certified"] = rep.certified;
  return j;
}

json to_json(const GonekSides& sides, const ExactX& x, double T) {
  json j = envelope("gonek", "");
  j["x"] = x.str();
  j["T"] = T;
  j["c"] = sides.abscissa;
  j["lhs"] = sides.lhs;
  j["rhs"] = sides.rhs;
  j["ratio"] = sides.ratio;
  j["tail_bound"] = sides.tail_bound;
  return j;
}

json to_json(const CharSumReport& rep, const BurgessParams& params) {
  return {{"label", rep.label.str()},
          {"N", rep.N},
          {"H", rep.H},
          {"sum", complex_json(rep.value)},
          {"abs", rep.magnitude},
          {"burgess_rhs", rep.burgess_rhs},
          {"ratio", rep.ratio},
          {"params", {{"r", params.r}, {"eps", params.eps}, {"cubefree", params.cubefree}}}};
}

json to_json(const Witness& w) {
  json j = {{"found", w.found}, {"threshold", w.threshold}, {"bound", w.bound}};
  if (w.found) {
    j["p0"] = w.p0;
    j["distance"] = w.distance;
  } else {
    j["p0"] = nullptr;
    j["distance"] = nullptr;
  }
  return j;
}

json to_json(const Lemma3Table& table) {
  json j = envelope("lemma3", "");
  j["params"] = {{"theta", table.theta}, {"c3", table.c3}, {"c4", table.c4}};
  j["rows"] = json::array();
  for (const auto& row : table.rows)
    j["rows"].push_back({{"label", row.label.str()},
                         {"order", row.order},
                         {"witness", to_json(row.witness)},
                         {"scaled", row.scaled}});
  j["missing"] = table.missing;
  j["worst_scaled"] = table.worst_scaled;
  j["largest_p0"] = table.largest_p0;
  return j;
}

json to_json(const MultisetDiff& diff) {
  json j;
  j["label1"] = diff.label1.str();
  j["label2"] = diff.label2.str();
  j["t1"] = diff.t1;
  j["t2"] = diff.t2;
  j["tolerance"] = diff.tolerance;
  j["verdict"] = to_string(diff.verdict);
  j["only_first"] = json::array();
  for (const auto& z : diff.only_first) j["only_first"].push_back(to_json(z));
  j["only_second"] = json::array();
  for (const auto& z : diff.only_second) j["only_second"].push_back(to_json(z));
  j["matched"] = json::array();
  for (const auto& m : diff.matched)
    j["matched"].push_back({{"gamma1", exact_decimal(m.first.gamma)},
                            {"gamma2", exact_decimal(m.second.gamma)},
                            {"distance", m.distance}});
  return j;
}

json to_json(const Region& r) {
  return {{"q", r.q}, {"T", r.T}, {"width", r.width}, {"t_lo", r.t_lo}, {"t_hi", r.t_hi},
          {"within_hypothesis", r.within_hypothesis}};
}

json to_json(const Thm1Report& rep, const ZeroSettings& settings) {
  json j = envelope("thm1", settings.fingerprint());
  j["label1"] = rep.label1.str();
  j["label2"] = rep.label2.str();
  j["T"] = rep.T;
  j["params"] = {{"theta", rep.params.theta}, {"theta_prime", rep.theta_prime}, {"c1", rep.params.c1},
                 {"c2", rep.params.c2},       {"c3", rep.params.c3},             {"c4", rep.params.c4},
                 {"cubefree", rep.params.cubefree}, {"tolerance", rep.params.tolerance}};
  j["region"] = to_json(rep.region);
  j["delta"] = {{"value", rep.delta.value}, {"below_T", rep.delta.below_T}};
  j["product_character"] = rep.product.str();
  j["witness"] = to_json(rep.witness);
  j["halted"] = rep.halted;
  j["diagnostic"] = rep.diagnostic;
  j["verdict"] = to_string(rep.verdict);
  if (rep.halted) return j;
  j["chi1_p0"] = complex_json(rep.chi1_p0);
  j["chi2_p0"] = complex_json(rep.chi2_p0);
  j["sum1"] = {{"value", complex_json(rep.sum1.value)}, {"zeros", rep.sum1.zeros_used}, {"certified", rep.sum1.certified}};
  j["sum2"] = {{"value", complex_json(rep.sum2.value)}, {"zeros", rep.sum2.zeros_used}, {"certified", rep.sum2.certified}};
  j["sum_difference"] = rep.sum_difference;
  j["separation"] = rep.separation;
  j["error_scale"] = rep.error_scale;
  j["window_diff"] = to_json(rep.window_diff);
  j["region_diff"] = to_json(rep.region_diff);
  return j;
}

std::string landau_csv_header() {
  return "label,x,t1,t2,sum_re,sum_im,main_re,main_im,error_budget,observed_error,ratio,zeros_used,certified,version";
}

std::string landau_csv_row(const LandauReport& r) {
  return r.label.str() + "," + r.x + "," + exact_decimal(r.t1) + "," + exact_decimal(r.t2) + "," +
         csv_complex(r.zero_sum) + "," + csv_complex(r.main) + "," + exact_decimal(r.error_budget) + "," +
         exact_decimal(r.observed_error) + "," + exact_decimal(r.ratio) + "," + std::to_string(r.zeros_used) + "," +
         (r.certified ? "true" : "false") + "," + kCodeVersion;
}

std::string burgess_csv_header() {
  return "label,order,p0,distance,scaled,H,sum_abs,burgess_rhs,ratio,version";
}

std::string burgess_csv_row(const Lemma3Row& row, const CharSumReport& sum) {
  const std::string p0 = row.witness.found ? std::to_string(row.witness.p0) : "";
  const std::string dist = row.witness.found ? exact_decimal(row.witness.distance) : "";
  return row.label.str() + "," + std::to_string(row.order) + "," + p0 + "," + dist + "," + exact_decimal(row.scaled) +
         "," + exact_decimal(sum.H) + "," + exact_decimal(sum.magnitude) + "," + exact_decimal(sum.burgess_rhs) + "," +
         exact_decimal(sum.ratio) + "," + kCodeVersion;
}

}  // namespace lzero
