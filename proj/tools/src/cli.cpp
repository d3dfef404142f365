#include "takagi/cli.hpp"

#include "takagi/local_levels.hpp"
#include "takagi/omega.hpp"
#include "takagi/singular_bv.hpp"
#include "takagi/takagi_eval.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace takagi::cli {

namespace {

std::string rat_str(const Rat& r, const std::optional<unsigned>& decimal_digits) {
    return decimal_digits ? r.decimal(*decimal_digits) : r.str();
}

Rat parse_rat_arg(const std::string& s, const char* what) {
    auto r = Rat::try_parse(s);
    if (!r) throw std::invalid_argument(std::string(what) + ": cannot parse rational \"" + s + "\"");
    return *r;
}

std::string csv_join(std::initializer_list<std::string> cells) {
    std::string line;
    for (const auto& c : cells) {
        if (!line.empty()) line += ',';
        line += c;
    }
    return line + "\n";
}

} // namespace

Json OutputRecord::to_json() const {
    Json j = Json::object();
    j["command"] = command;
    j["inputs"] = Json::object();
    for (const auto& [k, v] : inputs) j["inputs"][k] = v;
    j["results"] = results;
    return j;
}

OutputRecord OutputRecord::from_json(const Json& j) {
    OutputRecord rec;
    rec.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items())
        rec.inputs[k] = v.get<std::string>();
    rec.results = j.at("results");
    return rec;
}

std::string OutputRecord::render_json() const {
    return to_json().dump(2) + "\n";
}

BinExp parse_point(const std::string& s) {
    if (auto r = Rat::try_parse(s)) {
        require_unit_interval(*r, "parse_point");
        TailVariant v = *r == Rat(1) ? TailVariant::HighTail : TailVariant::LowTail;
        return BinExp::of_rational(*r, v);
    }
    return BinExp::parse(s);
}

OutputRecord cmd_eval(const std::string& x_str, const EvalOptions& opt) {
    Rat x = parse_rat_arg(x_str, "eval");
    require_unit_interval(x, "eval");
    OutputRecord rec;
    rec.command = "eval";
    rec.inputs["x"] = x_str;
    rec.results["x"] = x.str();
    Rat tau = takagi_exact(x);
    rec.results["tau"] = tau.str();
    if (opt.decimal_digits) rec.results["tau_decimal"] = tau.decimal(*opt.decimal_digits);
    if (opt.partial) {
        rec.inputs["partial"] = std::to_string(*opt.partial);
        rec.results["tau_partial"] = takagi_partial(x, *opt.partial).str();
    }
    if (opt.series) {
        rec.inputs["series"] = std::to_string(*opt.series);
        TailVariant v = x == Rat(1) ? TailVariant::HighTail : TailVariant::LowTail;
        rec.results["series_partial"] =
            takagi_series(BinExp::of_rational(x, v), *opt.series).str();
    }
    return rec;
}

OutputRecord cmd_localset(const std::string& point, unsigned depth) {
    BinExp b = parse_point(point);
    LocalLevelSetDesc desc = local_level_set(b);
    OutputRecord rec;
    rec.command = "localset";
    rec.inputs["point"] = point;
    rec.inputs["depth"] = std::to_string(depth);
    rec.results["expansion"] = b.str();
    rec.results["value"] = b.value().str();
    rec.results["level"] = desc.level.str();
    rec.results["left_endpoint"] = desc.left_endpoint.str();
    if (desc.cardinality == Cardinality::Finite) {
        rec.results["cardinality"] = "finite";
        rec.results["size"] = mpz_class(pow2(desc.log2_size)).get_str();
        rec.results["log2_size"] = std::to_string(desc.log2_size);
    } else {
        rec.results["cardinality"] = "uncountable";
    }
    if (desc.hausdorff_dim) rec.results["hausdorff_dim"] = desc.hausdorff_dim->str();
    Json members = Json::array();
    for (const BinExp& m : enumerate_members(desc, depth)) members.push_back(m.str());
    rec.results["members"] = std::move(members);
    return rec;
}

OutputRecord cmd_omega_check(const std::string& point) {
    OutputRecord rec;
    rec.command = "omega check";
    rec.inputs["point"] = point;
    if (auto r = Rat::try_parse(point)) {
        OmegaMembership m = in_omega_L(*r);
        rec.results["value"] = r->str();
        rec.results["member"] = m.member;
        if (m.variant)
            rec.results["variant"] =
                *m.variant == TailVariant::LowTail ? "low-tail" : "high-tail";
        return rec;
    }
    BinExp b = BinExp::parse(point);
    rec.results["expansion"] = b.str();
    rec.results["value"] = b.value().str();
    rec.results["member"] = in_omega_L(b);
    return rec;
}

OutputRecord cmd_omega_project(const std::string& point) {
    BinExp b = parse_point(point);
    BinExp proj = project_omega_L(b);
    OutputRecord rec;
    rec.command = "omega project";
    rec.inputs["point"] = point;
    rec.results["expansion"] = b.str();
    rec.results["projection"] = proj.str();
    rec.results["projection_value"] = proj.value().str();
    rec.results["tau_at_projection"] = takagi_exact(proj).str();
    return rec;
}

OutputRecord cmd_breakpoints(unsigned m) {
    auto bps = enumerate_breakpoints(m);
    OutputRecord rec;
    rec.command = "breakpoints";
    rec.inputs["m"] = std::to_string(m);
    rec.results["count"] = std::to_string(bps.size());
    rec.results["catalan"] = catalan(m).get_str();
    rec.results["cover_measure_bound"] = m >= 1 ? cover_measure_bound(m).str() : "1";
    Json rows = Json::array();
    for (const Breakpoint& bp : bps) {
        Json row = Json::object();
        row["B"] = bp.value.str();
        std::string bits = "0.";
        for (auto bit : bp.bits) bits += static_cast<char>('0' + bit);
        row["bits"] = bits;
        row["small"] = bp.is_small();
        rows.push_back(std::move(row));
    }
    rec.results["rows"] = std::move(rows);
    return rec;
}

OutputRecord cmd_gaps(unsigned max_2m) {
    auto gaps = enumerate_gap_intervals(max_2m);
    OutputRecord rec;
    rec.command = "gaps";
    rec.inputs["max_2m"] = std::to_string(max_2m);
    rec.results["count"] = std::to_string(gaps.size());
    Json rows = Json::array();
    for (const GapInterval& g : gaps) {
        Json row = Json::object();
        row["two_m"] = std::to_string(g.two_m());
        row["B"] = g.B.value.str();
        row["x_minus"] = g.x_minus.str();
        row["x_plus"] = g.x_plus.str();
        row["tau_x_minus"] = takagi_exact(g.x_minus).str();
        row["tau_x_plus"] = takagi_exact(g.x_plus).str();
        rows.push_back(std::move(row));
    }
    rec.results["rows"] = std::move(rows);
    return rec;
}

std::string render_gaps_csv(const OutputRecord& rec) {
    std::string out = "two_m,B,x_minus,x_plus,tau_x_minus,tau_x_plus\n";
    for (const auto& row : rec.results.at("rows"))
        out += csv_join({row.at("two_m").get<std::string>(), row.at("B").get<std::string>(),
                         row.at("x_minus").get<std::string>(), row.at("x_plus").get<std::string>(),
                         row.at("tau_x_minus").get<std::string>(),
                         row.at("tau_x_plus").get<std::string>()});
    return out;
}

OutputRecord cmd_level_half(const std::string& k_str) {
    std::optional<unsigned> k;
    if (k_str != "inf") {
        unsigned long v = std::stoul(k_str);
        k = static_cast<unsigned>(v);
    }
    Rat x = level_half_family(k);
    OutputRecord rec;
    rec.command = "level-half";
    rec.inputs["k"] = k_str;
    rec.results["x"] = x.str();
    rec.results["mirror"] = (Rat(1) - x).str();
    rec.results["tau"] = takagi_exact(x).str();
    return rec;
}

OutputRecord cmd_family(const std::string& breakpoint, unsigned k) {
    Rat bp = parse_rat_arg(breakpoint, "family");
    FamilyMember fm = infinite_level_family(bp, k);
    OutputRecord rec;
    rec.command = "family";
    rec.inputs["breakpoint"] = breakpoint;
    rec.inputs["k"] = std::to_string(k);
    rec.results["x"] = fm.x.str();
    rec.results["level"] = fm.level.str();
    rec.results["tau_check"] = takagi_exact(fm.x).str();
    return rec;
}

OutputRecord cmd_sample(const SampleOptions& opt) {
    OutputRecord rec;
    rec.command = "sample";
    rec.inputs["function"] = opt.function;
    rec.inputs["depth"] = std::to_string(opt.depth);
    Json rows = Json::array();
    std::size_t n = (std::size_t{1} << opt.depth) + 1;
    mpz_class den = pow2(opt.depth);
    if (opt.function == "all") {
        for (std::size_t i = 0; i < n; ++i) {
            Rat x(mpz_class(static_cast<unsigned long>(i)), den);
            Rat tl = flattened_takagi(x);
            Json row = Json::object();
            row["x"] = rat_str(x, opt.decimal_digits);
            row["tau"] = rat_str(takagi_exact(x), opt.decimal_digits);
            row["tauL"] = rat_str(tl, opt.decimal_digits);
            row["tauS"] = rat_str(tl + x, opt.decimal_digits);
            rows.push_back(std::move(row));
        }
        rec.results["columns"] = "x,tau,tauL,tauS";
    } else {
        FunctionTag tag;
        if (opt.function == "tauL") tag = FunctionTag::tauL();
        else if (opt.function == "tauS") tag = FunctionTag::tauS();
        else if (opt.function.rfind("partial:", 0) == 0)
            tag = FunctionTag::partial(static_cast<unsigned>(std::stoul(opt.function.substr(8))));
        else
            throw std::invalid_argument("sample: unknown function \"" + opt.function + "\"");
        PLFunction f = sample_pl(tag, opt.depth);
        for (std::size_t i = 0; i < f.size(); ++i) {
            Json row = Json::object();
            row["x"] = rat_str(f.grid()[i], opt.decimal_digits);
            row["value"] = rat_str(f.values()[i], opt.decimal_digits);
            rows.push_back(std::move(row));
        }
        rec.results["columns"] = "x,value";
    }
    rec.results["rows"] = std::move(rows);
    return rec;
}

std::string render_sample_csv(const OutputRecord& rec) {
    std::string cols = rec.results.at("columns").get<std::string>();
    std::string out = cols + "\n";
    std::istringstream split(cols);
    std::vector<std::string> keys;
    for (std::string col; std::getline(split, col, ',');) keys.push_back(col);
    for (const auto& row : rec.results.at("rows")) {
        std::string line;
        for (const auto& key : keys) {
            if (!line.empty()) line += ',';
            line += row.at(key).get<std::string>();
        }
        out += line + "\n";
    }
    return out;
}

OutputRecord cmd_coarea(const CoareaOptions& opt) {
    PLFunction sample = sample_pl(FunctionTag::tauL(), opt.depth);
    Rat tv = total_variation(sample);
    Rat ci = coarea_integral(sample);

    std::mt19937_64 rng(opt.seed);
    mpz_class scale = 3 * pow2(61);
    std::uint64_t total = 0;
    Json rows = Json::array();
    for (unsigned i = 0; i < opt.samples; ++i) {
        std::uint64_t u = rng() >> 2;                 // 62 random bits
        Rat t(mpz_class(u), scale);                   // uniform in (0, 2/3)
        std::uint64_t count;
        try {
            count = local_level_count_estimate(sample, t);
        } catch (const degenerate_level_error&) {
            t += Rat(1, pow2(opt.depth + 5));
            count = local_level_count_estimate(sample, t);
        }
        total += count;
        if (opt.dump_levels) {
            Json row = Json::object();
            row["t"] = t.str();
            row["N_estimate"] = std::to_string(count);
            rows.push_back(std::move(row));
        }
    }
    Rat mean(mpz_class(total), mpz_class(opt.samples));

    OutputRecord rec;
    rec.command = "coarea";
    rec.inputs["depth"] = std::to_string(opt.depth);
    rec.inputs["samples"] = std::to_string(opt.samples);
    rec.inputs["seed"] = std::to_string(opt.seed);
    rec.results["total_variation"] = tv.str();
    rec.results["coarea_integral"] = ci.str();
    rec.results["exact_equal"] = tv == ci;
    rec.results["mean_local_level_sets"] = mean.str();
    rec.results["mean_decimal"] = mean.decimal(6);
    if (opt.dump_levels) rec.results["levels"] = std::move(rows);
    return rec;
}

std::string render_levels_csv(const OutputRecord& rec) {
    std::string out = "t,N_estimate\n";
    if (!rec.results.contains("levels")) return out;
    for (const auto& row : rec.results.at("levels"))
        out += csv_join({row.at("t").get<std::string>(),
                         row.at("N_estimate").get<std::string>()});
    return out;
}

} // namespace takagi::cli
