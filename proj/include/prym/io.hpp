#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "prym/datum.hpp"
#include "prym/search.hpp"

namespace prym {

// Datum JSON: {"group": {"abelian": {"N": .., "matrix": [[..]]}} or
// {"group": {"cayley_file": path}}, "tuple": [...], "sigma": ...}.
// Abelian elements are coordinate vectors and the tuple defaults to the
// matrix columns; Cayley elements are indices. Relative paths resolve
// against base_dir.
PrymDatum parse_datum_json(const std::string& text, const std::filesystem::path& base_dir = {});
PrymDatum read_datum_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

// Fixed column order of report files.
const std::vector<std::string>& report_columns();

std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> rows_from_csv(const std::string& text);
std::string rows_to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> rows_from_json(const std::string& text);

// RFC 4180 splitting of one CSV record.
std::vector<std::string> split_csv_record(const std::string& line);
std::string csv_field(const std::string& s);

// $PRYM_CACHE_DIR, else $XDG_CACHE_HOME/prymtool, else ~/.cache/prymtool.
std::filesystem::path cache_directory();

}  // namespace prym
