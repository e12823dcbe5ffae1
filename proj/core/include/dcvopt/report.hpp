#pragma once

#include "dcvopt/rational.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dcvopt {

struct ReportField {
    std::string name;
    std::variant<std::string, Rational, RationalVector> value;

    friend bool operator==(const ReportField&, const ReportField&) = default;
};

struct ReportEntry {
    std::string check;
    std::string status;
    std::vector<ReportField> fields;
    /// Reasoning trace and warnings, in order.
    std::vector<std::string> notes;
    /// Discrepancies between a claimed property and what the grid shows.
    std::vector<std::string> flags;

    ReportEntry& text(std::string name, std::string value);
    ReportEntry& number(std::string name, Rational value);
    ReportEntry& vector(std::string name, RationalVector value);
    const ReportField* field(std::string_view name) const;

    friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
    std::string command;
    std::vector<ReportEntry> results;

    const ReportEntry* find(std::string_view check) const;

    friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { Text, Machine };

/// Line-oriented human rendering.
std::string render_text(const Report& report);

/// JSON document:
///   {"format": "dcvopt-report", "version": 1, "command": ...,
///    "results": [{"check", "status", "fields": [{"name", "text"|"rational"|"vector"}],
///                 "notes": [...], "flags": [...]}]}
/// with every rational written as a "p/q" (or integer) string.
std::string render_machine(const Report& report);

std::string emit_report(const Report& report, ReportFormat format);

/// Inverse of render_machine.
Report parse_machine_report(std::string_view text);

} // namespace dcvopt
