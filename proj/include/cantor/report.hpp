#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cantor {

// Shortest round-trip decimal form, locale-independent (identical runs give
// byte-identical output).
std::string format_double(double v);

std::string csv_field(const std::string& raw);

// Tabular experiment output: CSV (header row, LF endings) or a JSON array of
// row objects over the same columns.
class ReportWriter {
public:
    ReportWriter(std::ostream& os, std::vector<std::string> columns, bool as_json);
    ~ReportWriter();

    ReportWriter(const ReportWriter&) = delete;
    ReportWriter& operator=(const ReportWriter&) = delete;

    void row(const std::vector<std::string>& values);

private:
    std::ostream* os_;
    std::vector<std::string> columns_;
    bool json_;
    bool first_row_ = true;
};

}  // namespace cantor
