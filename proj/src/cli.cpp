#include "segre/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "segre/json_io.hpp"

namespace segre::cli {

using nlohmann::json;

namespace {

enum class Format { Text, Json, Csv };

Format format_from_name(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw domain_error("format must be text, json or csv");
}

// ---------------------------------------------------------------- helpers

std::int64_t get_int(const json& p, const char* name) {
    if (!p.contains(name) || !p.at(name).is_number_integer())
        throw domain_error(std::string("missing or non-integer parameter '") + name + "'");
    return p.at(name).get<std::int64_t>();
}

std::int64_t get_int_or(const json& p, const char* name, std::int64_t fallback) {
    if (!p.contains(name)) return fallback;
    if (!p.at(name).is_number_integer())
        throw domain_error(std::string("non-integer parameter '") + name + "'");
    return p.at(name).get<std::int64_t>();
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_join(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

std::string join_ints(const json& arr, char sep) {
    std::string out;
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) out += sep;
        out += arr[i].dump();
    }
    return out;
}

std::string rat_str(const json& q) {
    const Rat r(q.at("num").get<std::int64_t>(), q.at("den").get<std::int64_t>());
    return r.str();
}

// Result of one executed query: the canonical JSON payload plus the exit
// code the command contract assigns to it.
struct Outcome {
    std::string command;
    json payload;
    int exit_code{kExitOk};
};

// ------------------------------------------------------------- commands

Outcome exec_bound(const json& p) {
    const auto g = get_int(p, "g");
    const auto r = get_int(p, "r");
    const auto k = get_int(p, "k");
    json payload{{"g", g},
                 {"r", r},
                 {"k", k},
                 {"hirschowitz", core::hirschowitz_bound(g, r, k)},
                 {"mukai_sakai", core::mukai_sakai_bound(g, r, k)}};
    if (r == 2) payload["segre"] = g;  // classical rank-2 cap
    return {"bound", payload, kExitOk};
}

Outcome exec_smax(const json& p) {
    const auto g = get_int(p, "g");
    const auto r = get_int(p, "r");
    const auto d = get_int(p, "d");
    const auto k = get_int(p, "k");
    json payload{{"g", g},
                 {"r", r},
                 {"d", d},
                 {"k", k},
                 {"eps", core::epsilon_k(g, r, d, k)},
                 {"s_max", core::s_max(g, r, d, k)},
                 {"valid_s", core::valid_s(g, r, d, k)}};
    return {"smax", payload, kExitOk};
}

Outcome exec_strata(const json& p) {
    const auto g = get_int(p, "g");
    const auto r = get_int(p, "r");
    const auto d = get_int(p, "d");
    json rows = json::array();
    for (const auto& row : core::strata_table(g, r, d)) rows.push_back(io::to_json(row));
    json payload{{"g", g}, {"r", r}, {"d", d}, {"rows", rows}};
    return {"strata", payload, rows.empty() ? kExitNegative : kExitOk};
}

Outcome exec_construct(const json& p) {
    const auto cert = construct::sharp_feasibility(get_int(p, "g"), get_int(p, "r"),
                                                   get_int(p, "d"), get_int(p, "k"),
                                                   get_int(p, "s"));
    const int code = cert.verdict == construct::Verdict::Unknown ? kExitNegative : kExitOk;
    return {"construct", io::to_json(cert), code};
}

transform::TransformStep step_from_names(std::int64_t r, const json& names) {
    transform::TransformStep t{{}};
    for (const auto& n : names) t.types.push_back(io::step_type_from_name(n.get<std::string>()));
    transform::validate_step(r, t);
    return t;
}

Outcome exec_transform(const json& p) {
    const auto g = get_int(p, "g");
    const auto r = get_int(p, "r");
    const auto d = get_int(p, "d");
    const bool filter = p.contains("filter") && p.at("filter").get<bool>();

    transform::SegreProfile prof =
        p.contains("profile")
            ? transform::make_profile(g, r, d, p.at("profile").get<std::vector<std::int64_t>>())
            : transform::general_profile(g, r, d);

    std::vector<transform::TransformStep> steps;
    if (p.contains("steps"))
        for (const auto& names : p.at("steps")) steps.push_back(step_from_names(r, names));

    json stages = json::array();
    stages.push_back(io::to_json(prof));
    json violation = nullptr;
    bool feasible = true;
    for (size_t n = 0; n < steps.size() && feasible; ++n) {
        if (filter) {
            for (std::int64_t i = 1; i <= r - 1 && feasible; ++i) {
                if (!transform::type_feasible(prof, i, steps[n].at(i))) {
                    feasible = false;
                    violation = json{{"stage", n + 1}, {"rank", i}};
                }
            }
            if (!feasible) break;
        }
        prof = transform::apply_step(prof, steps[n]);
        stages.push_back(io::to_json(prof));
    }

    json steps_json = json::array();
    for (const auto& st : steps) steps_json.push_back(io::to_json(st));
    json payload{{"g", g},          {"r", r},
                 {"d", d},          {"steps", steps_json},
                 {"stages", stages}, {"final", stages.back()},
                 {"feasible", feasible}, {"violation", violation}};
    return {"transform", payload, feasible ? kExitOk : kExitNegative};
}

Outcome exec_verify(const json& p) {
    const auto seed = static_cast<std::uint64_t>(get_int_or(p, "seed", 0));
    const auto trials = get_int_or(p, "trials", 1000);

    const auto fuzz = oracle::fuzz_congruence(seed, trials);

    json checks = json::array();
    auto add_check = [&checks](const char* name, std::int64_t runs, std::int64_t failures) {
        checks.push_back(json{{"name", name}, {"checks", runs}, {"failures", failures}});
    };

    std::int64_t runs = 0, fails = 0;
    for (std::int64_t g = 2; g <= 6; ++g)
        for (std::int64_t r = 2; r <= 5; ++r)
            for (std::int64_t d = -r; d <= r; ++d)
                for (std::int64_t k = 1; k <= r - 1; ++k) {
                    ++runs;
                    if (oracle::brute_valid_s(g, r, d, k) != core::valid_s(g, r, d, k)) ++fails;
                }
    add_check("valid_s_equivalence", runs, fails);

    runs = fails = 0;
    for (std::int64_t r = 2; r <= 4; ++r)
        for (std::int64_t g = 2; g <= 3; ++g)
            for (std::int64_t d = 0; d <= 1; ++d)
                for (std::int64_t k = 1; k <= r - 1; ++k)
                    for (std::int64_t n = 0; n <= 3; ++n) {
                        const auto start = transform::general_profile(g, r, d);
                        const auto mins = oracle::min_adversarial(
                            {r, g, d, start.s, n, k, false});
                        ++runs;
                        for (std::int64_t i = 1; i <= r - 1; ++i)
                            if (mins[static_cast<size_t>(i - 1)] != start.at(i) - n * i) ++fails;
                    }
    add_check("min_adversarial_closed_form", runs, fails);

    runs = fails = 0;
    for (std::int64_t r = 2; r <= 6; ++r)
        for (std::int64_t g = 2; g <= 3; ++g)
            for (std::int64_t d = -4; d <= 4; ++d)
                for (std::int64_t k = 1; k <= r - 1; ++k)
                    for (std::int64_t s : core::valid_s(g, r, d, k))
                        for (std::int64_t nu = 1; nu <= r - 2; ++nu) {
                            if (nu > k - 1 && nu > r - k - 1) continue;
                            const auto nb = core::nested_bounds(r, k, s, nu);
                            const auto brute = oracle::brute_nested(r, d, k, s, nu);
                            ++runs;
                            if (brute.sub_min && Rat(*brute.sub_min) < *nb.sub_bound) ++fails;
                            if (brute.quot_min && Rat(*brute.quot_min) < *nb.quot_bound) ++fails;
                        }
    add_check("nested_bounds_soundness", runs, fails);

    bool passed = fuzz.passed();
    for (const auto& c : checks) passed = passed && c.at("failures").get<std::int64_t>() == 0;

    json payload{{"fuzz", io::to_json(fuzz)}, {"grid_checks", checks}, {"passed", passed}};
    return {"verify", payload, passed ? kExitOk : kExitNegative};
}

Outcome execute(const std::string& command, const json& params) {
    if (command == "bound") return exec_bound(params);
    if (command == "smax") return exec_smax(params);
    if (command == "strata") return exec_strata(params);
    if (command == "construct") return exec_construct(params);
    if (command == "transform") return exec_transform(params);
    if (command == "verify") return exec_verify(params);
    throw domain_error("unknown command '" + command + "'");
}

// ------------------------------------------------------------ rendering

void render_csv(const Outcome& o, std::ostream& out) {
    const json& p = o.payload;
    if (o.command == "bound") {
        out << csv_join({"g", "r", "k", "hirschowitz", "mukai_sakai", "segre"});
        out << csv_join({cell(p["g"]), cell(p["r"]), cell(p["k"]), cell(p["hirschowitz"]),
                         cell(p["mukai_sakai"]), p.contains("segre") ? cell(p["segre"]) : ""});
    } else if (o.command == "smax") {
        out << csv_join({"g", "r", "d", "k", "eps", "s_max", "valid_s"});
        out << csv_join({cell(p["g"]), cell(p["r"]), cell(p["d"]), cell(p["k"]), cell(p["eps"]),
                         cell(p["s_max"]), join_ints(p["valid_s"], ' ')});
    } else if (o.command == "strata") {
        out << csv_join(
            {"g", "r", "d", "k", "s", "eps", "d1", "dim", "codim", "locus_dim", "is_generic"});
        for (const auto& row : p["rows"])
            out << csv_join({cell(row["g"]), cell(row["r"]), cell(row["d"]), cell(row["k"]),
                             cell(row["s"]), cell(row["eps"]), cell(row["d1"]), cell(row["dim"]),
                             cell(row["codim"]), cell(row["locus_dim"]),
                             cell(row["is_generic"])});
    } else if (o.command == "construct") {
        out << csv_join({"g", "r", "d", "k", "s", "n_k", "d_tilde", "window_lo", "window_hi",
                         "verdict", "i", "reduction", "s_i_max", "worst_case_lb", "chain1",
                         "chain2", "chain_ok", "sharp_ok"});
        auto base = [&p]() {
            return std::vector<std::string>{cell(p["g"]), cell(p["r"]), cell(p["d"]),
                                            cell(p["k"]), cell(p["s"]), cell(p["n_k"]),
                                            cell(p["d_tilde"]), cell(p["window"][0]),
                                            cell(p["window"][1]), cell(p["verdict"])};
        };
        if (p["per_i"].empty()) {
            auto row = base();
            row.insert(row.end(), {"", "", "", "", "", "", "", ""});
            out << csv_join(row);
        }
        for (const auto& line : p["per_i"]) {
            auto row = base();
            row.push_back(cell(line["i"]));
            row.push_back(cell(line["reduction"]));
            row.push_back(cell(line["s_i_max"]));
            row.push_back(cell(line["worst_case_lb"]));
            row.push_back(rat_str(line["chain"][0]));
            row.push_back(rat_str(line["chain"][1]));
            row.push_back(cell(line["chain_ok"]));
            row.push_back(cell(line["sharp_ok"]));
            out << csv_join(row);
        }
    } else if (o.command == "transform") {
        out << csv_join({"stage", "d", "s"});
        std::int64_t n = 0;
        for (const auto& st : p["stages"])
            out << csv_join({std::to_string(n++), cell(st["d"]), join_ints(st["s"], ' ')});
    } else if (o.command == "verify") {
        out << csv_join({"check", "checks", "failures"});
        const auto& f = p["fuzz"];
        out << csv_join({"fuzz_congruence",
                         std::to_string(f["congruence_checks"].get<std::int64_t>() +
                                        f["duality_checks"].get<std::int64_t>() +
                                        f["cap_checks"].get<std::int64_t>()),
                         cell(f["failures"])});
        for (const auto& c : p["grid_checks"])
            out << csv_join({cell(c["name"]), cell(c["checks"]), cell(c["failures"])});
    } else {
        throw domain_error("no csv rendering for command '" + o.command + "'");
    }
}

void render_text(const Outcome& o, std::ostream& out) {
    const json& p = o.payload;
    if (o.command == "bound") {
        out << "hirschowitz " << p["hirschowitz"] << "\n";
        out << "mukai_sakai " << p["mukai_sakai"] << "\n";
        if (p.contains("segre")) out << "segre " << p["segre"] << "\n";
    } else if (o.command == "smax") {
        out << "eps " << p["eps"] << "\n";
        out << "s_max " << p["s_max"] << "\n";
        out << "valid_s " << join_ints(p["valid_s"], ' ') << "\n";
    } else if (o.command == "strata") {
        out << "g=" << p["g"] << " r=" << p["r"] << " d=" << p["d"] << "\n";
        for (const auto& row : p["rows"]) {
            out << "k=" << row["k"] << " s=" << row["s"] << " eps=" << row["eps"]
                << " d1=" << row["d1"] << " dim=" << row["dim"] << " codim=" << row["codim"]
                << " locus_dim=" << row["locus_dim"]
                << " generic=" << (row["is_generic"].get<bool>() ? "yes" : "no") << "\n";
        }
    } else if (o.command == "construct") {
        out << "inputs g=" << p["g"] << " r=" << p["r"] << " d=" << p["d"] << " k=" << p["k"]
            << " s=" << p["s"] << "\n";
        out << "n_k " << p["n_k"] << "\n";
        out << "d_tilde " << p["d_tilde"] << "\n";
        out << "window [" << p["window"][0] << "," << p["window"][1] << "]\n";
        for (const auto& line : p["per_i"]) {
            out << "i=" << line["i"] << " side=" << line["reduction"].get<std::string>()
                << " s_i_max=" << line["s_i_max"] << " lb=" << line["worst_case_lb"]
                << " chain=" << rat_str(line["chain"][0]) << "," << rat_str(line["chain"][1])
                << " chain_ok=" << (line["chain_ok"].get<bool>() ? "yes" : "no") << "\n";
        }
        out << "verdict " << p["verdict"].get<std::string>() << "\n";
    } else if (o.command == "transform") {
        std::int64_t n = 0;
        for (const auto& st : p["stages"])
            out << "stage " << n++ << ": d=" << st["d"] << " s=" << join_ints(st["s"], ',')
                << "\n";
        if (!p["feasible"].get<bool>())
            out << "infeasible at stage " << p["violation"]["stage"] << " rank "
                << p["violation"]["rank"] << "\n";
    } else if (o.command == "verify") {
        const auto& f = p["fuzz"];
        out << "fuzz_congruence seed=" << f["seed"] << " trials=" << f["trials"]
            << " failures=" << f["failures"] << "\n";
        for (const auto& c : p["grid_checks"])
            out << c["name"].get<std::string>() << " checks=" << c["checks"]
                << " failures=" << c["failures"] << "\n";
        out << "overall " << (p["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
    } else {
        throw domain_error("no text rendering for command '" + o.command + "'");
    }
}

std::string render(const Outcome& o, Format format) {
    std::ostringstream buf;
    switch (format) {
        case Format::Json: buf << o.payload.dump(2) << "\n"; break;
        case Format::Csv: render_csv(o, buf); break;
        case Format::Text: render_text(o, buf); break;
    }
    return buf.str();
}

void write_output(const std::string& content, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << content;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(out_file);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw domain_error("cannot open output file " + tmp.string());
        f << content;
    }
    fs::rename(tmp, target);
}

// --------------------------------------------------------------- batch

int run_batch(std::istream& in, std::ostream& out) {
    bool any_error = false;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json record{{"line", lineno}};
        try {
            const json q = json::parse(line);
            const std::string command = q.at("command").get<std::string>();
            const Outcome o = execute(command, q);
            Format fmt = Format::Json;
            if (q.contains("format")) fmt = format_from_name(q.at("format").get<std::string>());
            record["ok"] = o.exit_code == kExitOk;
            record["exit_code"] = o.exit_code;
            if (fmt == Format::Json)
                record["result"] = o.payload;
            else
                record["output"] = render(o, fmt);
            if (o.exit_code != kExitOk) any_error = true;
        } catch (const std::exception& e) {
            record["ok"] = false;
            record["exit_code"] = exit_code_for(e);
            record["error"] = e.what();
            any_error = true;
        }
        out << record.dump() << "\n";
    }
    return any_error ? kExitNegative : kExitOk;
}

// Parses "4,2" (profile) and "I,I;II,I" (steps) into canonical params.
json parse_profile_arg(const std::string& text) {
    json arr = json::array();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw domain_error("empty entry in --profile");
        size_t pos = 0;
        const std::int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw domain_error("bad integer in --profile: '" + tok + "'");
        arr.push_back(v);
    }
    return arr;
}

json parse_steps_arg(const std::string& text) {
    json steps = json::array();
    if (text.empty()) return steps;
    std::stringstream ss(text);
    std::string group;
    while (std::getline(ss, group, ';')) {
        json one = json::array();
        std::stringstream gs(group);
        std::string tok;
        while (std::getline(gs, tok, ',')) one.push_back(tok);
        steps.push_back(one);
    }
    return steps;
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const segre::overflow_error*>(&e)) return kExitOverflow;
    return kExitInvalid;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Segre invariants, moduli stratification tables and "
                 "elementary-transformation certificates for vector bundles on curves"};
    app.require_subcommand(1);

    struct {
        std::int64_t g = 0, r = 0, d = 0, k = 0, s = 0, seed = 0, trials = 1000;
        std::string profile, steps, format = "text", out_file, in_file;
        bool filter = false;
    } opt;

    auto add_format = [&opt](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", opt.out_file, "Write output atomically to FILE");
    };

    auto* bound = app.add_subcommand("bound", "Upper bounds for s_k");
    bound->add_option("--g", opt.g, "Genus")->required();
    bound->add_option("--r", opt.r, "Rank")->required();
    bound->add_option("--k", opt.k, "Sub-rank")->required();
    add_format(bound);

    auto* smax = app.add_subcommand("smax", "Generic value of s_k and admissible strata");
    smax->add_option("--g", opt.g, "Genus")->required();
    smax->add_option("--r", opt.r, "Rank")->required();
    smax->add_option("--d", opt.d, "Degree")->required();
    smax->add_option("--k", opt.k, "Sub-rank")->required();
    add_format(smax);

    auto* strata = app.add_subcommand("strata", "Stratification table of M(r,d)");
    strata->add_option("--g", opt.g, "Genus")->required();
    strata->add_option("--r", opt.r, "Rank")->required();
    strata->add_option("--d", opt.d, "Degree")->required();
    add_format(strata);

    auto* cons = app.add_subcommand("construct", "Existence certificate for a stratum");
    cons->add_option("--g", opt.g, "Genus")->required();
    cons->add_option("--r", opt.r, "Rank")->required();
    cons->add_option("--d", opt.d, "Degree")->required();
    cons->add_option("--k", opt.k, "Sub-rank")->required();
    cons->add_option("--s", opt.s, "Stratum value")->required();
    add_format(cons);

    auto* trans = app.add_subcommand(
        "transform", "Apply elementary-transformation steps to a Segre profile "
                     "(formal state; feasibility filter checks necessary conditions only)");
    trans->add_option("--g", opt.g, "Genus")->required();
    trans->add_option("--r", opt.r, "Rank")->required();
    trans->add_option("--d", opt.d, "Degree")->required();
    trans->add_option("--profile", opt.profile,
                      "Initial s_1..s_{r-1}, comma separated (default: general profile)");
    trans->add_option("--steps", opt.steps,
                      "Steps as per-rank types, e.g. 'I,II;I,I' (';' separates steps)");
    trans->add_flag("--filter", opt.filter, "Reject steps failing the feasibility filter");
    add_format(trans);

    auto* verify = app.add_subcommand("verify", "Run the brute-force oracle suite");
    verify->add_option("--seed", opt.seed, "Fuzz seed");
    verify->add_option("--trials", opt.trials, "Fuzz trials");
    add_format(verify);

    auto* batch = app.add_subcommand("batch", "Run line-delimited JSON queries");
    batch->add_option("--in", opt.in_file, "Read queries from FILE instead of stdin");

    try {
        std::vector<std::string> rargs(args.rbegin(), args.rend());
        app.parse(rargs);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalid;
    }

    try {
        if (batch->parsed()) {
            if (!opt.in_file.empty()) {
                std::ifstream f(opt.in_file);
                if (!f) throw domain_error("cannot open batch input " + opt.in_file);
                return run_batch(f, out);
            }
            return run_batch(in, out);
        }

        json params{{"g", opt.g}, {"r", opt.r}, {"d", opt.d}, {"k", opt.k}, {"s", opt.s}};
        std::string command;
        if (bound->parsed()) command = "bound";
        if (smax->parsed()) command = "smax";
        if (strata->parsed()) command = "strata";
        if (cons->parsed()) command = "construct";
        if (trans->parsed()) {
            command = "transform";
            if (!opt.profile.empty()) params["profile"] = parse_profile_arg(opt.profile);
            params["steps"] = parse_steps_arg(opt.steps);
            params["filter"] = opt.filter;
        }
        if (verify->parsed()) {
            command = "verify";
            params["seed"] = opt.seed;
            params["trials"] = opt.trials;
        }

        const Outcome o = execute(command, params);
        write_output(render(o, format_from_name(opt.format)), opt.out_file, out);
        return o.exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, in, out, err);
}

}  // namespace segre::cli
