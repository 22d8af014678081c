#pragma once

#include "sl2pairs/chartab.hpp"
#include "sl2pairs/classify.hpp"
#include "sl2pairs/gelfand.hpp"
#include "sl2pairs/subgroups.hpp"

#include <string>
#include <vector>

namespace sl2pairs::json_io {

/// {"conductor": n, "coeffs": ["num/den", ...]}  (phi(n) coefficients)
std::string cyc_to_json(const cyclo::CycNum& x);
cyclo::CycNum cyc_from_json(const std::string& s);

std::string table_to_json(const chartab::Table& t, int indent = 2);

/// Parses the character values back out of a serialized table; used to
/// check that serialization is lossless.
struct ParsedTable {
    std::string group;
    long p = 0, order = 0;
    std::vector<std::string> names;
    std::vector<long> degrees;
    std::vector<std::vector<cyclo::CycNum>> values;
};
ParsedTable table_from_json(const std::string& s);

std::string verdict_to_json(const gelfand::PairVerdict& v, int indent = 2);
std::string lattice_to_json(const std::vector<subgrp::SubgroupRecord>& recs, int indent = 2);
std::string classify_to_json(const classify::ClassifyReport& rep, int indent = 2);
std::string gauss_to_json(long p, int indent = 2);

} // namespace sl2pairs::json_io
