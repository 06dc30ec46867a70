#pragma once

#include "ddsim/event_log.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace ddsim {

/// Names of the input columns. An empty `resource` means the file has no
/// resource column.
struct ColumnMapping {
    std::string case_id = "case_id";
    std::string activity = "activity";
    std::string resource = "resource";
    std::string start = "start_timestamp";
    std::string end = "end_timestamp";
};

/// Reads a CSV event log (header required, RFC-4180 quoting). Rows are grouped
/// by case in order of first appearance.
///
/// Throws SchemaError for a missing column, ParseError (with the 1-based line
/// number) for malformed rows or timestamps and ValidationError listing every
/// row whose end precedes its start.
EventLog read_csv(const std::filesystem::path& path, const ColumnMapping& mapping = {});
EventLog parse_csv(std::istream& in, const ColumnMapping& mapping = {},
                   const std::string& source = "<stream>");

/// Writes the canonical schema `case_id,activity,resource,start_timestamp,end_timestamp`.
void write_csv(const EventLog& log, const std::filesystem::path& path);
void write_csv(const EventLog& log, std::ostream& out);

}  // namespace ddsim
