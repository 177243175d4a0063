#pragma once

#include "thetainv/json_io.hpp"

#include <string>
#include <vector>

namespace thetainv {

/*
 * One reproduction case: a published value or identity recomputed from
 * scratch.  `expected` holds the frozen reference rendering, `computed` the
 * freshly evaluated one with identical labels, so match is plain string
 * equality.  Runtime is informational; it never enters serialized output.
 */
struct ReproReport {
    std::string case_name;
    std::string source;  // the kind of published statement being reproduced
    std::string expected;
    std::string computed;
    bool match = false;
    double runtime_seconds = 0.0;

    friend bool operator==(const ReproReport& a, const ReproReport& b) {
        return a.case_name == b.case_name && a.source == b.source && a.expected == b.expected &&
               a.computed == b.computed && a.match == b.match;
    }
    friend bool operator!=(const ReproReport& a, const ReproReport& b) { return !(a == b); }
};

const std::vector<std::string>& repro_case_names();

/* throws std::invalid_argument for a name outside the published list */
ReproReport run_repro(const std::string& case_name);
std::vector<ReproReport> run_all_repro();

io::json report_to_json(const ReproReport& r);
ReproReport report_from_json(const io::json& j, const std::string& where = "");

}  // namespace thetainv
