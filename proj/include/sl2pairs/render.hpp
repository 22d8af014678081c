#pragma once

#include "sl2pairs/chartab.hpp"
#include "sl2pairs/classify.hpp"
#include "sl2pairs/gelfand.hpp"

#include <string>

namespace sl2pairs::render {

/// Plain-text character table grid with the presentation column headers.
std::string table_text(const chartab::Table& t);

std::string verdict_text(const gelfand::PairVerdict& v);
std::string classify_text(const classify::ClassifyReport& rep);
std::string gauss_text(long p);
std::string multiplicity_text(const gelfand::MultiplicityMatrix& mm);

} // namespace sl2pairs::render
