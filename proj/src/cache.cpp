#include "lzero/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "lzero/errors.hpp"
#include "lzero/version.hpp"

namespace lzero {
namespace {

using nlohmann::json;

struct Window {
  double t1 = 0, t2 = 0;
  bool certified = true;
  long declared = -1;
  std::vector<Zero> zeros;
};

using WindowKey = std::pair<double, double>;

// Windows in the order they were stored. A marker record opens a window; the
// zero records that follow with the same key belong to it.
std::vector<Window> read_windows(const std::filesystem::path& path, const CharacterLabel& label,
                                 const std::string& fingerprint, std::vector<std::string>& warnings) {
  std::vector<Window> windows;
  std::map<WindowKey, std::size_t> open;
  std::ifstream in(path);
  if (!in) return windows;
  std::string line;
  long lineno = 0;
  bool stale_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json rec = json::parse(line);
      if (rec.at("ver").get<std::string>() != kCodeVersion) {
        if (!stale_seen) warnings.push_back("cache records from another code version ignored; recomputing");
        stale_seen = true;
        continue;
      }
      if (rec.at("q").get<i64>() != label.modulus || rec.at("conrey").get<i64>() != label.index) continue;
      if (rec.value("fp", std::string()) != fingerprint) continue;
      const WindowKey key{rec.at("t1").get<double>(), rec.at("t2").get<double>()};
      const int mult = rec.at("mult").get<int>();
      if (mult == 0) {
        Window w;
        w.t1 = key.first;
        w.t2 = key.second;
        w.certified = rec.at("certified").get<bool>();
        w.declared = rec.at("nzeros").get<long>();
        open[key] = windows.size();
        windows.push_back(std::move(w));
        continue;
      }
      const auto it = open.find(key);
      if (it == open.end()) throw std::invalid_argument("zero record without a window marker");
      Zero z;
      z.beta = rec.at("beta").get<double>();
      const std::string g = rec.at("gamma").get<std::string>();
      auto [ptr, ec] = std::from_chars(g.data(), g.data() + g.size(), z.gamma);
      if (ec != std::errc() || ptr != g.data() + g.size()) throw std::invalid_argument("bad gamma");
      z.multiplicity = mult;
      z.accuracy = rec.at("acc").get<double>();
      z.source = rec.value("src", std::string("line")) == "line" ? ZeroSource::on_line : ZeroSource::off_line;
      Window& w = windows[it->second];
      w.certified = w.certified && rec.at("certified").get<bool>();
      w.zeros.push_back(z);
    } catch (const std::exception& e) {
      warnings.push_back(path.string() + ":" + std::to_string(lineno) + ": corrupt cache line skipped");
    }
  }
  // drop partially written windows
  std::vector<Window> complete;
  for (auto& w : windows) {
    if (w.declared != static_cast<long>(w.zeros.size())) {
      warnings.push_back("incomplete cached window " + label.str() + " (" + exact_decimal(w.t1) + ", " +
                         exact_decimal(w.t2) + ") ignored");
      continue;
    }
    std::sort(w.zeros.begin(), w.zeros.end(), [](const Zero& a, const Zero& b) { return a.gamma < b.gamma; });
    complete.push_back(std::move(w));
  }
  return complete;
}

bool same_zero(const Zero& a, const Zero& b) {
  const double tol = std::max({a.accuracy, b.accuracy, 1e-9});
  return std::abs(a.gamma - b.gamma) <= tol && std::abs(a.beta - b.beta) <= tol && a.multiplicity == b.multiplicity;
}

std::vector<Zero> in_range(const std::vector<Zero>& zs, double a, double b) {
  std::vector<Zero> out;
  for (const auto& z : zs)
    if (z.gamma > a && z.gamma < b) out.push_back(z);
  return out;
}

}  // namespace

std::string exact_decimal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

ZeroCache::ZeroCache(std::filesystem::path path) : path_(std::move(path)) {}

void ZeroCache::store(const ZeroList& list, const std::string& fingerprint) const {
  auto base = [&] {
    json rec;
    rec["q"] = list.label.modulus;
    rec["conrey"] = list.label.index;
    rec["t1"] = list.t1;
    rec["t2"] = list.t2;
    rec["certified"] = list.certified;
    rec["ver"] = kCodeVersion;
    rec["fp"] = fingerprint;
    return rec;
  };
  std::string batch;
  json marker = base();
  marker["beta"] = nullptr;
  marker["gamma"] = nullptr;
  marker["mult"] = 0;
  marker["acc"] = nullptr;
  marker["nzeros"] = list.zeros.size();
  batch += marker.dump() + "\n";
  for (const auto& z : list.zeros) {
    json rec = base();
    rec["beta"] = z.beta;
    rec["gamma"] = exact_decimal(z.gamma);
    rec["mult"] = z.multiplicity;
    rec["acc"] = z.accuracy;
    rec["src"] = z.source == ZeroSource::on_line ? "line" : "off";
    batch += rec.dump() + "\n";
  }
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw RejectedInput("cannot open cache " + path_.string());
  const ssize_t written = ::write(fd, batch.data(), batch.size());
  ::close(fd);
  if (written != static_cast<ssize_t>(batch.size())) throw RejectedInput("short write to cache " + path_.string());
}

std::optional<ZeroList> ZeroCache::load(const CharacterLabel& label, double t1, double t2,
                                        const std::string& fingerprint) const {
  // The earliest stored window wins, so answers stay put as the cache grows.
  const auto windows = read_windows(path_, label, fingerprint, warnings_);
  for (const auto& w : windows)
    if (w.t1 == t1 && w.t2 == t2) return ZeroList{label, t1, t2, w.zeros, w.certified};

  std::vector<const Window*> cover;
  double reach = t1;
  while (reach < t2) {
    const Window* next = nullptr;
    for (const auto& w : windows)
      if (w.t1 <= reach && w.t2 > reach) {
        next = &w;
        break;
      }
    if (!next) return std::nullopt;
    cover.push_back(next);
    reach = next->t2;
  }
  if (cover.empty()) return std::nullopt;

  ZeroList out{label, t1, t2, {}, true};
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const Window& w = *cover[i];
    out.certified = out.certified && w.certified;
    if (i > 0) {
      // overlap with the previous piece must agree
      const Window& prev = *cover[i - 1];
      const auto a = in_range(prev.zeros, w.t1, prev.t2);
      const auto b = in_range(w.zeros, w.t1, prev.t2);
      const bool agree = a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), same_zero);
      if (!agree) out.certified = false;
    }
    for (const auto& z : in_range(w.zeros, t1, t2))
      if (out.zeros.empty() || !same_zero(out.zeros.back(), z)) {
        if (!out.zeros.empty() && z.gamma < out.zeros.back().gamma) continue;
        out.zeros.push_back(z);
      }
  }
  return out;
}

void store_zeros(const ZeroList& list, const ZeroCache& cache, const ZeroSettings& settings) {
  cache.store(list, settings.fingerprint());
}

std::optional<ZeroList> load_zeros(const CharacterLabel& label, double t1, double t2, const ZeroCache& cache,
                                   const ZeroSettings& settings) {
  return cache.load(label, t1, t2, settings.fingerprint());
}

ZeroList cached_find_zeros(const DirichletCharacter& chi, double t1, double t2, const ZeroSettings& settings,
                           const ZeroCache* cache) {
  if (cache) {
    if (auto hit = load_zeros(chi.label(), t1, t2, *cache, settings)) return *hit;
  }
  ZeroList list = find_zeros(chi, t1, t2, settings);
  if (cache) store_zeros(list, *cache, settings);
  return list;
}

}  // namespace lzero
