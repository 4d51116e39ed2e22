#include "apsum/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace apsum {

namespace {

using nlohmann::ordered_json;

ordered_json range_to_json(const ScanRange& r) { return ordered_json::array({r.min, r.max}); }

ScanRange range_from_json(const ordered_json& j) {
    return {j.at(0).get<std::uint64_t>(), j.at(1).get<std::uint64_t>()};
}

ordered_json records_to_json(const ScanReport& report) {
    ordered_json records = ordered_json::array();
    switch (report.kind) {
        case ScanKind::Theorem:
            for (const auto& r : report.theorem_records) {
                ordered_json o;
                o["k"] = r.k;
                o["n"] = r.n;
                o["predicted"] = r.predicted_integer;
                o["actual"] = r.actual_integer;
                o["condition"] = to_string(r.condition);
                o["ratio_num"] = r.ratio.num.get_str();
                o["ratio_den"] = r.ratio.den.get_str();
                o["cofactor"] = r.cofactor ? ordered_json(r.cofactor->get_str()) : ordered_json(nullptr);
                records.push_back(std::move(o));
            }
            break;
        case ScanKind::Lemma1:
        case ScanKind::Lemma2:
            for (const auto& r : report.lemma_records) {
                ordered_json o;
                o["k"] = r.k;
                o["n"] = r.n;
                o["modulus"] = r.verdict.modulus.get_str();
                o["lhs"] = r.verdict.lhs.get_str();
                o["rhs"] = r.verdict.rhs.get_str();
                o["holds"] = r.verdict.holds;
                records.push_back(std::move(o));
            }
            break;
        case ScanKind::Kellner:
            for (const auto& r : report.kellner_records) {
                records.push_back(ordered_json::array({r.k, r.n, r.ratio.get_str()}));
            }
            break;
        case ScanKind::Identities:
            for (const auto& r : report.identity_records) {
                ordered_json o;
                o["k"] = r.k;
                o["n"] = r.n;
                o["eq1"] = r.eq1 ? ordered_json(*r.eq1) : ordered_json(nullptr);
                o["reflection"] = r.reflection ? ordered_json(*r.reflection) : ordered_json(nullptr);
                records.push_back(std::move(o));
            }
            break;
    }
    return records;
}

void records_from_json(const ordered_json& records, ScanReport& report) {
    switch (report.kind) {
        case ScanKind::Theorem:
            for (const auto& o : records) {
                ClassificationRecord r;
                r.k = o.at("k").get<std::uint64_t>();
                r.n = o.at("n").get<std::uint64_t>();
                r.predicted_integer = o.at("predicted").get<bool>();
                r.actual_integer = o.at("actual").get<bool>();
                auto cond = condition_from_string(o.at("condition").get<std::string>());
                if (!cond) throw std::invalid_argument("report: bad condition value");
                r.condition = *cond;
                r.ratio = ReducedFraction(BigInt(o.at("ratio_num").get<std::string>()),
                                          BigInt(o.at("ratio_den").get<std::string>()));
                if (!o.at("cofactor").is_null()) {
                    r.cofactor = BigInt(o.at("cofactor").get<std::string>());
                }
                report.theorem_records.push_back(std::move(r));
            }
            break;
        case ScanKind::Lemma1:
        case ScanKind::Lemma2:
            for (const auto& o : records) {
                LemmaRecord r;
                r.k = o.at("k").get<std::uint64_t>();
                r.n = o.at("n").get<std::uint64_t>();
                r.verdict.modulus = BigInt(o.at("modulus").get<std::string>());
                r.verdict.lhs = BigInt(o.at("lhs").get<std::string>());
                r.verdict.rhs = BigInt(o.at("rhs").get<std::string>());
                r.verdict.holds = o.at("holds").get<bool>();
                report.lemma_records.push_back(std::move(r));
            }
            break;
        case ScanKind::Kellner:
            for (const auto& o : records) {
                KellnerHit r;
                r.k = o.at(0).get<std::uint64_t>();
                r.n = o.at(1).get<std::uint64_t>();
                r.ratio = BigInt(o.at(2).get<std::string>());
                report.kellner_records.push_back(std::move(r));
            }
            break;
        case ScanKind::Identities:
            for (const auto& o : records) {
                IdentityRecord r;
                r.k = o.at("k").get<std::uint64_t>();
                r.n = o.at("n").get<std::uint64_t>();
                if (!o.at("eq1").is_null()) r.eq1 = o.at("eq1").get<bool>();
                if (!o.at("reflection").is_null()) r.reflection = o.at("reflection").get<bool>();
                report.identity_records.push_back(std::move(r));
            }
            break;
    }
}

const char* csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::optional<ReportFormat> format_from_string(std::string_view s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    return std::nullopt;
}

nlohmann::ordered_json report_to_json(const ScanReport& report) {
    ordered_json j;
    j["scan_kind"] = to_string(report.kind);
    j["k_range"] = range_to_json(report.k_range);
    j["n_range"] = range_to_json(report.n_range);
    j["records"] = records_to_json(report);
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
        violations.push_back(ordered_json::array({v.k, v.n, v.detail}));
    }
    j["violations"] = std::move(violations);
    j["elapsed_seconds"] = std::round(report.elapsed_seconds * 1000.0) / 1000.0;
    j["worker_count"] = report.worker_count;
    return j;
}

ScanReport report_from_json(const nlohmann::ordered_json& j) {
    ScanReport report;
    auto kind = scan_kind_from_string(j.at("scan_kind").get<std::string>());
    if (!kind) throw std::invalid_argument("report: unknown scan_kind");
    report.kind = *kind;
    report.k_range = range_from_json(j.at("k_range"));
    report.n_range = range_from_json(j.at("n_range"));
    records_from_json(j.at("records"), report);
    for (const auto& v : j.at("violations")) {
        report.violations.push_back(
            {v.at(0).get<std::uint64_t>(), v.at(1).get<std::uint64_t>(), v.at(2).get<std::string>()});
    }
    report.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    report.worker_count = j.at("worker_count").get<unsigned>();
    return report;
}

std::string report_to_csv(const ScanReport& report) {
    std::ostringstream os;
    switch (report.kind) {
        case ScanKind::Theorem:
            os << "k,n,predicted,actual,condition,ratio_num,ratio_den\n";
            for (const auto& r : report.theorem_records) {
                os << r.k << ',' << r.n << ',' << csv_bool(r.predicted_integer) << ','
                   << csv_bool(r.actual_integer) << ',' << to_string(r.condition) << ','
                   << r.ratio.num.get_str() << ',' << r.ratio.den.get_str() << '\n';
            }
            break;
        case ScanKind::Lemma1:
        case ScanKind::Lemma2:
            os << "k,n,modulus,lhs,rhs,holds\n";
            for (const auto& r : report.lemma_records) {
                os << r.k << ',' << r.n << ',' << r.verdict.modulus.get_str() << ','
                   << r.verdict.lhs.get_str() << ',' << r.verdict.rhs.get_str() << ','
                   << csv_bool(r.verdict.holds) << '\n';
            }
            break;
        case ScanKind::Kellner:
            os << "k,n,ratio\n";
            for (const auto& r : report.kellner_records) {
                os << r.k << ',' << r.n << ',' << r.ratio.get_str() << '\n';
            }
            break;
        case ScanKind::Identities:
            os << "k,n,eq1,reflection\n";
            for (const auto& r : report.identity_records) {
                os << r.k << ',' << r.n << ',' << (r.eq1 ? csv_bool(*r.eq1) : "") << ','
                   << (r.reflection ? csv_bool(*r.reflection) : "") << '\n';
            }
            break;
    }
    return os.str();
}

void emit_report(const ScanReport& report, ReportFormat format, std::ostream& os) {
    if (format == ReportFormat::Json) {
        os << report_to_json(report).dump(2) << '\n';
    } else {
        os << report_to_csv(report);
    }
}

void emit_report(const ScanReport& report, ReportFormat format, const std::string& path) {
    if (path.empty() || path == "-") {
        emit_report(report, format, std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit_report(report, format, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace apsum
