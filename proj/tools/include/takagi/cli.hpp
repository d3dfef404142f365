#pragma once

#include "takagi/binexp.hpp"
#include "takagi/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace takagi::cli {

using Json = nlohmann::ordered_json;

/// Machine-readable command result. Rationals are rendered as "p/q" strings,
/// expansions as "0.pre(per)" strings, tables as arrays of objects; the JSON
/// form round-trips through from_json/to_json and the core parsers.
struct OutputRecord {
    std::string command;
    std::map<std::string, std::string> inputs;
    Json results = Json::object();

    Json to_json() const;
    static OutputRecord from_json(const Json& j);
    std::string render_json() const;
};

/// "p/q" or an expansion literal "0.pre(per)". Rationals other than 1 map to
/// their terminating/unique expansion; 1 maps to 0.(1).
BinExp parse_point(const std::string& s);

struct EvalOptions {
    std::optional<unsigned> partial;
    std::optional<unsigned> series;
    std::optional<unsigned> decimal_digits;
};
OutputRecord cmd_eval(const std::string& x, const EvalOptions& opt = {});

OutputRecord cmd_localset(const std::string& point, unsigned depth);

OutputRecord cmd_omega_check(const std::string& point);
OutputRecord cmd_omega_project(const std::string& point);

OutputRecord cmd_breakpoints(unsigned m);

OutputRecord cmd_gaps(unsigned max_2m);
std::string render_gaps_csv(const OutputRecord& rec);

OutputRecord cmd_level_half(const std::string& k);  // number or "inf"

OutputRecord cmd_family(const std::string& breakpoint, unsigned k);

struct SampleOptions {
    std::string function = "all";   // all | tauL | tauS | partial:N
    unsigned depth = 8;
    std::optional<unsigned> decimal_digits;
};
OutputRecord cmd_sample(const SampleOptions& opt);
std::string render_sample_csv(const OutputRecord& rec);

struct CoareaOptions {
    unsigned depth = 12;
    unsigned samples = 256;
    std::uint64_t seed = 1;
    bool dump_levels = false;
};
OutputRecord cmd_coarea(const CoareaOptions& opt);
std::string render_levels_csv(const OutputRecord& rec);

} // namespace takagi::cli
