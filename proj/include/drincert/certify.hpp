#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "drincert/drinfeld.hpp"
#include "drincert/gl3.hpp"
#include "drincert/irred.hpp"
#include "drincert/valuation.hpp"

namespace drincert {

using json = nlohmann::ordered_json;

enum class CheckStatus { Verified, Cited, Failed, NotApplicable };

std::string check_status_name(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Failed;
    std::string paper_anchor;
    json data = json::object();
};

struct Certificate {
    PrimeIdeal ideal;
    std::vector<Check> checks;
    std::string verdict;
    bool surjective = false;
};

struct PairCertificate {
    PrimeIdeal l1, l2;
    std::vector<Check> checks;
    std::string verdict;
    bool surjective = false;
};

struct CertifyOptions {
    int max_deg = 3;       // mod-l certificates up to this degree
    int pair_max_deg = 2;  // pair certificates up to this degree
    bool pairs = false;
    bool allow_small_q = false;
    int scan_cap = 3;  // zeta-scan degree cap
};

// Aggregation rule shared by all certificates: surjective iff no check
// failed. (The mutation test in the suite exercises exactly this function.)
std::string verdict_from_checks(const std::vector<Check>& checks);

Certificate certify_mod_l(const DrinfeldModule& phi, const PrimeIdeal& l, const CertifyOptions& opt);
// Appends the lifting checks; requires a surjective mod-l certificate.
void certify_l_adic(const DrinfeldModule& phi, const PrimeIdeal& l, const CertifyOptions& opt,
                    Certificate& cert);
PairCertificate certify_pair(const DrinfeldModule& phi, const PrimeIdeal& l1, const PrimeIdeal& l2,
                             const Certificate& c1, const Certificate& c2);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CertifyConfig {
    uint64_t q = 0;
    std::string ext_modulus;  // optional, variable "u", over F_p
    std::string g1_text = "0";
    std::string g2_text = "1";
    CertifyOptions opt;
    std::string format = "text";  // "text" | "json"
};

struct Report {
    json doc;
    std::string text;
    bool all_surjective = false;
};

// Parses the config, runs every requested certificate, renders both formats.
// Deterministic: identical config gives byte-identical JSON.
Report run_report(const CertifyConfig& cfg);

}  // namespace drincert
