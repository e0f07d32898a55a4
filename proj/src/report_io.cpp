#include "rdirac/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>

namespace rdirac {

std::string format_g17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const StudyReport& report, bool timestamp_comment) {
    if (timestamp_comment) os << "# " << report.kind << " generated " << timestamp_utc() << "\n";
    for (std::size_t j = 0; j < report.columns.size(); ++j)
        os << report.columns[j] << (j + 1 < report.columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : report.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << row[j] << (j + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

json report_json(const StudyReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r = json::object();
        for (std::size_t j = 0; j < row.size() && j < report.columns.size(); ++j)
            r[report.columns[j]] = row[j];
        rows.push_back(std::move(r));
    }
    return json{{"schema", 1},
                {"study", report.kind},
                {"timestamp", timestamp_utc()},
                {"config", report.config_echo},
                {"columns", report.columns},
                {"rows", rows},
                {"extra", report.extra},
                {"notes", report.notes},
                {"complete", report.complete},
                {"failed_checks", report.failed_checks}};
}

json potential_json(const Potential& pot) {
    json j{{"name", potential_name(pot)}};
    std::visit(
        [&j](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Coulomb>) {
                j["Z"] = p.Z;
            } else if constexpr (std::is_same_v<T, GaussianNucleus>) {
                j["Z"] = p.Z;
                j["R"] = p.R;
            } else if constexpr (std::is_same_v<T, Yukawa>) {
                j["V0"] = p.V0;
                j["lambda"] = p.lambda;
            } else if constexpr (std::is_same_v<T, Morse>) {
                j["De"] = p.De;
                j["re"] = p.re;
                j["alpha"] = p.alpha;
            } else if constexpr (std::is_same_v<T, Hellmann>) {
                j["Z"] = p.Z;
                j["V0"] = p.V0;
                j["lambda"] = p.lambda;
            } else if constexpr (std::is_same_v<T, Harmonic>) {
                j["k"] = p.k;
            }
        },
        pot);
    return j;
}

json constants_json(const PhysicsConstants& consts) {
    return json{{"c", consts.c}, {"mass", consts.mass}};
}

json basis_json(const GlobalBasisSpec& spec) {
    const char* mode = spec.mode == BasisMode::allsm ? "allsm"
                       : spec.mode == BasisMode::laguerre_only ? "laguerre-only"
                                                               : "legendre-truncated";
    return json{{"mode", mode}, {"L", spec.L},       {"N1", spec.N1},
                {"N2", spec.N2}, {"beta", spec.beta}, {"size", spec.size()}};
}

json trace_json(const AdaptiveTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps)
        steps.push_back(json{{"beta", s.beta}, {"indicator", s.indicator}, {"q", s.q}});
    return json{{"steps", steps},
                {"final_beta", trace.final_beta},
                {"stop_reason", stop_reason_name(trace.stop_reason)},
                {"threshold", trace.threshold}};
}

json solution_json(const AssembledSystem& sys, const EigenSolution& sol,
                   bool include_coefficients) {
    json entries = json::array();
    for (const auto& e : sol.entries) {
        json je{{"binding_energy", e.binding_energy},
                {"raw_eigenvalue", e.raw_eigenvalue},
                {"residual", e.residual},
                {"classification", state_class_name(e.classification)},
                {"branch_ambiguous", e.branch_ambiguous}};
        if (include_coefficients)
            je["coefficients"] = std::vector<double>(e.coefficients.data(),
                                                     e.coefficients.data() + e.coefficients.size());
        entries.push_back(std::move(je));
    }
    return json{{"schema", 1},
                {"timestamp", timestamp_utc()},
                {"potential", potential_json(sys.potential)},
                {"constants", constants_json(sys.consts)},
                {"kappa", sys.kappa},
                {"operator_mode", operator_mode_name(sys.mode)},
                {"basis_upper", basis_json(sys.layout.upper_spec)},
                {"basis_lower", basis_json(sys.layout.lower_spec)},
                {"quadrature", json{{"inner", sys.nodes_inner}, {"outer", sys.nodes_outer}}},
                {"entries", entries}};
}

std::string timestamp_utc() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

std::string default_report_basename(const std::string& study, const std::string& potential) {
    return study + "-" + potential + "-" + timestamp_utc();
}

} // namespace rdirac
