#include "aenergy/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>

namespace aenergy {

using nlohmann::json;

std::string format_number(double value) {
    if (std::abs(value) < 1e-12) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

std::string format_values(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += format_number(values[i]);
    }
    return out;
}

namespace {

// Full precision for CSV cells.
std::string exact(double value) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << value;
    return out.str();
}

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const Check& c) {
    json j{{"bound_id", to_string(c.id)}, {"applicable", c.applicable}};
    if (c.applicable) {
        j["branch"] = c.branch;
        j["value"] = c.value;
        j["target"] = c.target;
        j["slack"] = c.slack;
        j["violated"] = c.violated();
    } else {
        j["reason"] = c.reason;
    }
    return j;
}

json to_json(const VerificationReport& report) {
    json bounds = json::object();
    for (const auto& [id, s] : report.bounds) {
        json violations = json::array();
        for (const auto& v : s.violations) violations.push_back({{"graph6", v.graph6}, {"alpha", v.alpha}, {"slack", v.slack}});
        json near = json::array();
        for (const auto& v : s.near_equality) near.push_back({{"graph6", v.graph6}, {"alpha", v.alpha}, {"slack", v.slack}});
        json reasons = json::object();
        for (const auto& [reason, count] : s.inapplicable_reasons) reasons[reason] = count;
        bounds[std::string(to_string(id))] = {
            {"count", s.count},
            {"applicable", s.applicable},
            {"min_slack", nullable(s.min_slack)},
            {"argmin_graph6", s.min_slack ? json(s.argmin_graph6) : json(nullptr)},
            {"argmin_alpha", s.min_slack ? json(s.argmin_alpha) : json(nullptr)},
            {"violations", violations},
            {"near_equality_count", s.near_equality_count},
            {"near_equality", near},
            {"inapplicable_reasons", reasons},
        };
    }
    json equality = json::array();
    for (const auto& e : report.equality_cases) {
        equality.push_back({{"graph", e.graph}, {"graph6", e.graph6}, {"alpha", e.alpha}, {"bound_id", to_string(e.id)},
                            {"gap", e.gap}, {"tolerance", e.tolerance}, {"ok", e.ok()}});
    }
    return {
        {"graphs", report.graphs},
        {"instances", report.instances},
        {"alphas", report.alphas},
        {"violation_count", report.violation_count()},
        {"bounds", bounds},
        {"equality_cases", equality},
        {"ok", report.ok()},
    };
}

json to_json(const ReproductionTable& table) {
    json rows = json::array();
    for (const auto& r : table.rows) {
        json cells = json::object();
        for (const auto& c : r.cells) {
            cells[c.column] = {{"computed", c.computed}, {"shown", c.shown}, {"published", c.expected}, {"match", c.match()}};
        }
        rows.push_back({{"graph", r.label}, {"alpha", r.alpha}, {"cells", cells}, {"ordering_ok", r.ordering_ok}});
    }
    return {{"table", table.name}, {"rows", rows}, {"ok", table.ok()}};
}

std::string render_checks(const std::vector<Check>& checks, double energy, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json rows = json::array();
        for (const auto& c : checks) rows.push_back(to_json(c));
        return json{{"energy", energy}, {"bounds", rows}}.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "bound_id,applicable,branch,value,target,slack,reason\n";
        for (const auto& c : checks) {
            out << to_string(c.id) << ',' << (c.applicable ? "true" : "false") << ',' << c.branch << ',';
            if (c.applicable) out << exact(c.value) << ',' << exact(c.target) << ',' << exact(c.slack);
            else out << ",,";
            out << ',' << c.reason << '\n';
        }
        return out.str();
    }
    out << "energy " << format_number(energy) << '\n';
    out << std::left << std::setw(11) << "bound" << std::setw(18) << "value" << std::setw(18) << "target"
        << std::setw(18) << "slack" << "branch/reason\n";
    for (const auto& c : checks) {
        out << std::setw(11) << to_string(c.id);
        if (c.applicable) {
            out << std::setw(18) << format_number(c.value) << std::setw(18) << format_number(c.target) << std::setw(18)
                << format_number(c.slack) << c.branch;
            if (c.violated()) out << " VIOLATED";
        } else {
            out << std::setw(54) << "-" << "inapplicable: " << c.reason;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_report(const VerificationReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(report).dump(2) + "\n";
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "bound_id,count,applicable,min_slack,argmin_graph6,argmin_alpha,violations,near_equality\n";
        for (const auto& [id, s] : report.bounds) {
            out << to_string(id) << ',' << s.count << ',' << s.applicable << ',';
            if (s.min_slack) out << exact(*s.min_slack) << ',' << s.argmin_graph6 << ',' << exact(s.argmin_alpha);
            else out << ",,";
            out << ',' << s.violations.size() << ',' << s.near_equality_count << '\n';
        }
        return out.str();
    }
    out << "graphs " << report.graphs << ", instances " << report.instances << '\n';
    out << std::left << std::setw(11) << "bound" << std::setw(10) << "count" << std::setw(12) << "applicable"
        << std::setw(16) << "min_slack" << std::setw(12) << "violations" << "argmin\n";
    for (const auto& [id, s] : report.bounds) {
        out << std::setw(11) << to_string(id) << std::setw(10) << s.count << std::setw(12) << s.applicable
            << std::setw(16) << (s.min_slack ? format_number(*s.min_slack) : "-") << std::setw(12) << s.violations.size();
        if (s.min_slack) out << s.argmin_graph6 << " @ alpha=" << format_number(s.argmin_alpha);
        out << '\n';
    }
    std::size_t failed = 0;
    for (const auto& e : report.equality_cases) failed += e.ok() ? 0 : 1;
    out << "equality cases: " << report.equality_cases.size() - failed << "/" << report.equality_cases.size() << " within tolerance\n";
    for (const auto& e : report.equality_cases) {
        if (!e.ok()) out << "  FAIL " << to_string(e.id) << ' ' << e.graph << " alpha=" << e.alpha << " gap=" << e.gap << '\n';
    }
    out << "violations: " << report.violation_count() << '\n';
    return out.str();
}

std::string render_reproduction(const ReproductionTable& table, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(table).dump(2) + "\n";
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "graph,alpha," << table.columns[0] << ',' << table.columns[1] << ",match\n";
        for (const auto& r : table.rows) {
            bool match = r.cells[0].match() && r.cells[1].match() && r.ordering_ok;
            out << r.label << ',' << round2(r.alpha) << ',' << r.cells[0].shown << ',' << r.cells[1].shown << ','
                << (match ? "true" : "false") << '\n';
        }
        return out.str();
    }
    out << std::left << std::setw(12) << "graph" << std::setw(8) << "alpha" << std::setw(10) << table.columns[0]
        << std::setw(10) << table.columns[1] << "status\n";
    for (const auto& r : table.rows) {
        bool match = r.cells[0].match() && r.cells[1].match() && r.ordering_ok;
        out << std::setw(12) << r.label << std::setw(8) << round2(r.alpha) << std::setw(10) << r.cells[0].shown
            << std::setw(10) << r.cells[1].shown << (match ? "ok" : "MISMATCH") << '\n';
    }
    for (const auto& m : table.mismatches()) out << m << '\n';
    return out.str();
}

}  // namespace aenergy
