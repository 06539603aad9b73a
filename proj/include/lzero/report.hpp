#pragma once

// JSON (canonical) and CSV serialisation of every report. Keys are emitted
// in sorted order and doubles in shortest round-trip form, so identical
// inputs give byte-identical output.

#include <string>

#include <json.hpp>

#include "lzero/charsums.hpp"
#include "lzero/distinct.hpp"
#include "lzero/landau.hpp"
#include "lzero/lfunc.hpp"
#include "lzero/zeros.hpp"

namespace lzero {

using nlohmann::json;

json complex_json(std::complex<double> z);

json to_json(const DirichletCharacter& chi);
json to_json(const Zero& z);
json to_json(const ZeroList& list, const ZeroSettings& settings);
json to_json(const LandauReport& rep, const ZeroSettings& settings);
json to_json(const GonekSides& sides, const ExactX& x, double T);
json to_json(const CharSumReport& rep, const BurgessParams& params);
json to_json(const Witness& w);
json to_json(const Lemma3Table& table);
json to_json(const MultisetDiff& diff);
json to_json(const Region& region);
json to_json(const Thm1Report& rep, const ZeroSettings& settings);

/// Fixed CSV columns; see README.
std::string landau_csv_header();
std::string landau_csv_row(const LandauReport& rep);
std::string burgess_csv_header();
std::string burgess_csv_row(const Lemma3Row& row, const CharSumReport& sum);

}  // namespace lzero
