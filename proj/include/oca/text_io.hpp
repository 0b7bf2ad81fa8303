#ifndef OCA_TEXT_IO_HPP
#define OCA_TEXT_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "oca/analyze.hpp"
#include "oca/cycle_sum.hpp"
#include "oca/enumerate.hpp"
#include "oca/latin.hpp"
#include "oca/matrix.hpp"
#include "oca/search.hpp"

namespace oca {

/// Rows of space-separated digits (debug dump).
std::string matrix_to_text(const FqMatrix& m);

std::string latin_to_text(const LatinSquare& s);
std::string latin_to_csv(const LatinSquare& s);

nlohmann::json cycle_sum_to_json(const CycleSum& s);

std::string search_report_to_text(const SearchReport& r);
nlohmann::json search_report_to_json(const SearchReport& r);

std::string enum_report_to_text(const EnumReport& r, bool list_pairs);
nlohmann::json enum_report_to_json(const EnumReport& r, bool list_pairs);

std::string analyze_report_to_text(const AnalyzeReport& r);
nlohmann::json analyze_report_to_json(const AnalyzeReport& r);

} // namespace oca

#endif
