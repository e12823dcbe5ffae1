#include "dcvopt/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace dcvopt {

using json = nlohmann::ordered_json;

ReportEntry& ReportEntry::text(std::string name, std::string value)
{
    fields.push_back(ReportField{std::move(name), std::move(value)});
    return *this;
}

ReportEntry& ReportEntry::number(std::string name, Rational value)
{
    fields.push_back(ReportField{std::move(name), std::move(value)});
    return *this;
}

ReportEntry& ReportEntry::vector(std::string name, RationalVector value)
{
    fields.push_back(ReportField{std::move(name), std::move(value)});
    return *this;
}

const ReportField* ReportEntry::field(std::string_view name) const
{
    for (const auto& f : fields)
        if (f.name == name)
            return &f;
    return nullptr;
}

const ReportEntry* Report::find(std::string_view check) const
{
    for (const auto& e : results)
        if (e.check == check)
            return &e;
    return nullptr;
}

namespace {

std::string value_text(const ReportField& f)
{
    if (const auto* s = std::get_if<std::string>(&f.value))
        return *s;
    if (const auto* r = std::get_if<Rational>(&f.value))
        return to_string(*r);
    return std::get<RationalVector>(f.value).str();
}

} // namespace

std::string render_text(const Report& report)
{
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    for (const auto& e : report.results) {
        out << "[" << e.check << "] " << e.status << "\n";
        for (const auto& f : e.fields)
            out << "  " << f.name << " = " << value_text(f) << "\n";
        for (const auto& n : e.notes)
            out << "  note: " << n << "\n";
        for (const auto& fl : e.flags)
            out << "  DISCREPANCY: " << fl << "\n";
    }
    return out.str();
}

std::string render_machine(const Report& report)
{
    json doc;
    doc["format"] = "dcvopt-report";
    doc["version"] = 1;
    doc["command"] = report.command;
    doc["results"] = json::array();
    for (const auto& e : report.results) {
        json entry;
        entry["check"] = e.check;
        entry["status"] = e.status;
        entry["fields"] = json::array();
        for (const auto& f : e.fields) {
            json jf;
            jf["name"] = f.name;
            if (const auto* s = std::get_if<std::string>(&f.value)) {
                jf["text"] = *s;
            } else if (const auto* r = std::get_if<Rational>(&f.value)) {
                jf["rational"] = to_string(*r);
            } else {
                json arr = json::array();
                for (const auto& c : std::get<RationalVector>(f.value))
                    arr.push_back(to_string(c));
                jf["vector"] = std::move(arr);
            }
            entry["fields"].push_back(std::move(jf));
        }
        entry["notes"] = e.notes;
        entry["flags"] = e.flags;
        doc["results"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string emit_report(const Report& report, ReportFormat format)
{
    return format == ReportFormat::Text ? render_text(report) : render_machine(report);
}

Report parse_machine_report(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed machine report: ") + e.what());
    }
    try {
        if (doc.at("format") != "dcvopt-report" || doc.at("version") != 1)
            throw Error("unsupported machine report format");
        Report r;
        r.command = doc.at("command").get<std::string>();
        for (const auto& je : doc.at("results")) {
            ReportEntry e;
            e.check = je.at("check").get<std::string>();
            e.status = je.at("status").get<std::string>();
            for (const auto& jf : je.at("fields")) {
                std::string name = jf.at("name").get<std::string>();
                if (jf.contains("text")) {
                    e.text(std::move(name), jf["text"].get<std::string>());
                } else if (jf.contains("rational")) {
                    e.number(std::move(name), parse_rational(jf["rational"].get<std::string>()));
                } else {
                    std::vector<Rational> coords;
                    for (const auto& c : jf.at("vector"))
                        coords.push_back(parse_rational(c.get<std::string>()));
                    e.vector(std::move(name), RationalVector(std::move(coords)));
                }
            }
            e.notes = je.at("notes").get<std::vector<std::string>>();
            e.flags = je.at("flags").get<std::vector<std::string>>();
            r.results.push_back(std::move(e));
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed machine report: ") + e.what());
    }
}

} // namespace dcvopt
