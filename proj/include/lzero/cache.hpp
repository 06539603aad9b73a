#pragma once

// Zero cache: JSON Lines, one record per zero.
//
//   {"q":4,"conrey":3,"t1":0.1,"t2":100,"beta":0.5,"gamma":"6.0209489046975966",
//    "mult":1,"acc":4.1e-14,"certified":true,"ver":"0.3.0","fp":"..."}
//
// Every stored window also gets one marker record with "mult":0,
// "gamma":null and "nzeros":<count>, so empty windows are representable
// and a partially written window is detected (its zero records do not add
// up to nzeros) and ignored.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lzero/zeros.hpp"

namespace lzero {

class ZeroCache {
 public:
  explicit ZeroCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  /// Appends the list in a single write; readers never see half a window.
  void store(const ZeroList& list, const std::string& fingerprint) const;

  /// Exact window hit, or the merge of cached windows covering [t1, t2]
  /// for the same label, fingerprint and code version. A merged list is
  /// certified only if every piece is and the pieces agree on their overlaps.
  std::optional<ZeroList> load(const CharacterLabel& label, double t1, double t2,
                               const std::string& fingerprint) const;

  /// Warnings collected while reading (corrupt lines, stale versions).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::filesystem::path path_;
  mutable std::vector<std::string> warnings_;
};

void store_zeros(const ZeroList& list, const ZeroCache& cache, const ZeroSettings& settings);
std::optional<ZeroList> load_zeros(const CharacterLabel& label, double t1, double t2, const ZeroCache& cache,
                                   const ZeroSettings& settings);

/// find_zeros behind the cache: loads when possible, otherwise computes and
/// stores. `cache` may be null.
ZeroList cached_find_zeros(const DirichletCharacter& chi, double t1, double t2, const ZeroSettings& settings,
                           const ZeroCache* cache);

/// Shortest decimal string that round-trips the double.
std::string exact_decimal(double v);

}  // namespace lzero
