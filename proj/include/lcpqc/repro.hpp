#pragma once

#include <string>
#include <vector>

#include "lcpqc/distance.hpp"
#include "lcpqc/report.hpp"

namespace lcpqc {

/// A published example: generator texts exactly as printed and the stated
/// parameters (n, k, d_LCP, d_BKLC).
struct ReproCase {
    std::string id;
    std::uint64_t q;
    std::string modulus;  // empty for prime fields
    int m;
    std::string lambda;
    std::string c;  // "g11;g12;g22"
    std::string d;  // "f11;f12;f22"
    int n;
    int k;
    int dlcp;
    int dbklc;
};

const std::vector<ReproCase>& repro_cases();
/// nullptr when the id is unknown.
const ReproCase* find_repro_case(const std::string& id);

struct ReproOutcome {
    std::string id;
    bool pass = false;
    bool verdict = false;          // LCP according to every engine
    bool engines_agree = false;
    int n = 0;
    int k = 0;
    int dlcp = 0;
    int dbklc = 0;
    std::vector<std::string> mismatches;  // quantities that diverged
    std::vector<std::string> notes;       // input adjustments such as g12 mod g22
    double seconds = 0;
};

/// A StandardForm spec whose printed g12 has deg g12 >= deg g22 is replaced
/// by g12 mod g22, which generates the same code; a note is appended. Other
/// specs are returned unchanged.
QtCodeSpec prepare_standard_form(const QtCodeSpec& spec, const std::string& which, std::vector<std::string>& notes);

ReproOutcome run_repro_case(const ReproCase& rc, const DistanceOptions& opts = {});

Json repro_json(const ReproOutcome& o);

}  // namespace lcpqc
