#include "cantor/report.hpp"

#include <charconv>
#include <stdexcept>

namespace cantor {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string json_string(const std::string& raw) {
    std::string out = "\"";
    for (char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace

ReportWriter::ReportWriter(std::ostream& os, std::vector<std::string> columns, bool as_json)
    : os_(&os), columns_(std::move(columns)), json_(as_json) {
    if (json_) {
        *os_ << "[";
    } else {
        for (size_t i = 0; i < columns_.size(); ++i)
            *os_ << (i ? "," : "") << csv_field(columns_[i]);
        *os_ << "\n";
    }
}

ReportWriter::~ReportWriter() {
    if (json_) *os_ << "\n]\n";
}

void ReportWriter::row(const std::vector<std::string>& values) {
    if (values.size() != columns_.size()) throw std::invalid_argument("row width mismatch");
    if (json_) {
        *os_ << (first_row_ ? "\n" : ",\n") << "  {";
        for (size_t i = 0; i < values.size(); ++i)
            *os_ << (i ? ", " : "") << json_string(columns_[i]) << ": " << json_string(values[i]);
        *os_ << "}";
    } else {
        for (size_t i = 0; i < values.size(); ++i)
            *os_ << (i ? "," : "") << csv_field(values[i]);
        *os_ << "\n";
    }
    first_row_ = false;
}

}  // namespace cantor
