#include "superhowe/report_io.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace superhowe {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "table") return OutputFormat::Table;
    throw std::invalid_argument("unknown format '" + s + "' (expected json|csv|table)");
}

namespace {

ordered_json weight_json(const Weight& w) {
    ordered_json arr = ordered_json::array();
    for (const Rational& c : w.coords) arr.push_back(c.str());
    return arr;
}

ordered_json entry_json(const IsotypicEntry& e) {
    ordered_json j;
    j["spo_weight"] = weight_json(e.spo_weight);
    j["partner_weight"] = weight_json(e.partner_weight);
    j["degree"] = e.degree;
    j["parity"] = e.parity == 0 ? "even" : "odd";
    j["hwv"] = to_string(e.hwv);
    j["spo_dim"] = e.spo_dim;
    j["partner_dim"] = e.partner_dim;
    return j;
}

ordered_json report_json(const DecompositionReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["degree"] = r.degree;
    j["entries"] = ordered_json::array();
    for (const IsotypicEntry& e : r.entries) j["entries"].push_back(entry_json(e));
    j["dim_audit"] = {{"dim_sd", r.dim_audit.dim_sd},
                      {"dim_harmonic", r.dim_audit.dim_harmonic},
                      {"dim_lowered", r.dim_audit.dim_lowered},
                      {"sum_products", r.dim_audit.sum_products}};
    return j;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string weight_flat(const Weight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (i) out += ' ';
        out += w.coords[i].str();
    }
    return out;
}

}  // namespace

std::string reports_to_json(const std::vector<DecompositionReport>& reports, int n, int dmax) {
    ordered_json j;
    j["schema"] = 1;
    j["n"] = n;
    j["dmax"] = dmax;
    j["reports"] = ordered_json::array();
    for (const DecompositionReport& r : reports) j["reports"].push_back(report_json(r));
    return j.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<DecompositionReport>& reports) {
    std::ostringstream os;
    os << "degree,parity,spo_weight,partner_weight,spo_dim,partner_dim,hwv\n";
    for (const DecompositionReport& r : reports)
        for (const IsotypicEntry& e : r.entries)
            os << e.degree << ',' << (e.parity == 0 ? "even" : "odd") << ','
               << csv_quote(weight_flat(e.spo_weight)) << ','
               << csv_quote(weight_flat(e.partner_weight)) << ',' << e.spo_dim << ','
               << e.partner_dim << ',' << csv_quote(to_string(e.hwv)) << '\n';
    return os.str();
}

std::string reports_to_table(const std::vector<DecompositionReport>& reports) {
    // Aligned text table, one block per degree with its dimension audit.
    std::ostringstream os;
    for (const DecompositionReport& r : reports) {
        os << "S^" << r.degree << "(E)  n=" << r.n << "  dim=" << r.dim_audit.dim_sd
           << "  harmonic=" << r.dim_audit.dim_harmonic << "  lowered=" << r.dim_audit.dim_lowered
           << "\n";
        std::vector<std::array<std::string, 5>> rows;
        rows.push_back({"spo weight", "partner weight", "spo dim", "partner dim", "hwv"});
        for (const IsotypicEntry& e : r.entries)
            rows.push_back({e.spo_weight.str(), e.partner_weight.str(),
                            std::to_string(e.spo_dim), std::to_string(e.partner_dim),
                            to_string(e.hwv)});
        std::array<std::size_t, 5> width{};
        for (const auto& row : rows)
            for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
        for (const auto& row : rows) {
            os << "  ";
            for (std::size_t c = 0; c < 5; ++c) {
                if (c == 4) {
                    os << row[c];
                } else {
                    os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
                }
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string render_reports(const std::vector<DecompositionReport>& reports, int n, int dmax,
                           OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return reports_to_json(reports, n, dmax);
        case OutputFormat::Csv: return reports_to_csv(reports);
        case OutputFormat::Table: return reports_to_table(reports);
    }
    throw std::logic_error("render_reports: bad format");
}

std::string json_roundtrip(const std::string& text) {
    return ordered_json::parse(text).dump(2) + "\n";
}

}  // namespace superhowe
