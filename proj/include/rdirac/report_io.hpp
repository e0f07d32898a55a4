#ifndef RDIRAC_REPORT_IO_HPP
#define RDIRAC_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdirac/adaptive.hpp"
#include "rdirac/eigensolve.hpp"

namespace rdirac {

using json = nlohmann::json;

/// Tabular study output plus a config echo; CSV bytes are a pure function of
/// the config (the timestamp lives in a comment line / JSON meta field only).
struct StudyReport {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json config_echo = json::object();
    json extra = json::object();
    std::vector<std::string> notes;
    bool complete = true;
    std::vector<std::string> failed_checks;
};

std::string format_g17(double v);

void write_csv(std::ostream& os, const StudyReport& report, bool timestamp_comment = true);
json report_json(const StudyReport& report);

json potential_json(const Potential& pot);
json constants_json(const PhysicsConstants& consts);
json basis_json(const GlobalBasisSpec& spec);
json trace_json(const AdaptiveTrace& trace);

/// Versioned record of one solve ("schema": 1).
json solution_json(const AssembledSystem& sys, const EigenSolution& sol,
                   bool include_coefficients = false);

std::string timestamp_utc();
std::string default_report_basename(const std::string& study, const std::string& potential);

} // namespace rdirac

#endif
