// lrs_cli: build code specs, encode, decode, simulate, selftest.
//
// Tool errors print "ERR:<code>: message" on stderr and exit 2. A decode that
// finds no codeword is a normal outcome (status "failure", exit 0).
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lrs/lrs.hpp"

namespace {

using lrs::json;

// Tool-level failure that has no library error code (files, usage).
struct ToolError {
    std::string code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ToolError{"IoError", "cannot read " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ToolError{"IoError", "cannot write " + path};
    out << text;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        lrs::fail(lrs::ErrorCode::ParseError, what + ": " + e.what());
    }
}

// An argument that is either a path to a JSON file or inline JSON.
json json_argument(const std::string& arg, const std::string& what) {
    if (std::filesystem::is_regular_file(arg)) return parse_json(read_file(arg), what);
    return parse_json(arg, what);
}

lrs::CodeSpec load_code(const std::string& path) { return lrs::code_spec_from_json(parse_json(read_file(path), path)); }

struct Options {
    bool json_output = false;

    // gen
    lrs::Int p = 0;
    int r = 0;
    std::string g = "y";
    std::string h;
    std::vector<std::size_t> partition;
    std::size_t k = 0;
    std::string points = "primitive";

    // shared
    std::string code;
    std::string out;

    std::string msg;
    std::string rx;

    // simulate
    std::size_t t = 0;
    std::size_t rho = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::string csv;
    std::string log;
    bool stress = false;
    std::vector<std::size_t> out_dims;
    unsigned threads = 1;

    std::string level = "quick";
};

int cmd_gen(const Options& o) {
    const lrs::ChainRing base(o.p, o.r, lrs::parse_base_modulus(o.g));
    lrs::Extension ext(base, lrs::parse_extension_modulus(base, o.h));
    const lrs::LengthPartition part(o.partition);
    lrs::PointSystem pts = o.points == "coprime" ? lrs::gen_points_coprime(ext, part) : lrs::gen_points_primitive(ext, part);
    const lrs::CodeSpec spec{std::move(ext), std::move(pts), o.k};
    const lrs::LrsCode code = spec.build();  // validates k and the points
    write_output(o.out, lrs::code_spec_to_json(spec).dump(2) + "\n");
    if (o.json_output) {
        std::cout << json{{"status", "ok"}, {"n", code.n()}, {"k", code.k()}, {"d", code.designed_distance()},
                          {"out", o.out.empty() ? "-" : o.out}}
                         .dump()
                  << "\n";
    } else if (!o.out.empty() && o.out != "-") {
        std::cout << "wrote " << o.out << ": n=" << code.n() << " k=" << code.k() << " d=" << code.designed_distance()
                  << "\n";
    }
    return 0;
}

int cmd_encode(const Options& o) {
    const lrs::CodeSpec spec = load_code(o.code);
    const lrs::LrsCode code = spec.build();
    const lrs::Vector msg = lrs::vector_from_json(spec.ext, json_argument(o.msg, "message"));
    const lrs::Vector c = lrs::encode(code, msg);
    write_output(o.out, lrs::vector_to_json(spec.ext, c).dump() + "\n");
    if (o.json_output && !o.out.empty() && o.out != "-")
        std::cout << json{{"status", "ok"}, {"n", c.size()}, {"out", o.out}}.dump() << "\n";
    return 0;
}

int cmd_decode(const Options& o) {
    const lrs::CodeSpec spec = load_code(o.code);
    const lrs::LrsCode code = spec.build();
    const lrs::Vector y = lrs::vector_from_json(spec.ext, json_argument(o.rx, "received word"));
    const lrs::DecodeResult res = lrs::wb_decode(code, y);
    const json doc = lrs::decode_result_to_json(spec.ext, res);
    write_output(o.out, doc.dump() + "\n");
    if (!o.out.empty() && o.out != "-") {
        if (o.json_output)
            std::cout << json{{"status", doc["status"]}, {"error_weight", doc["error_weight"]}, {"out", o.out}}.dump() << "\n";
        else
            std::cout << "decode " << doc["status"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_simulate(const Options& o) {
    const lrs::CodeSpec spec = load_code(o.code);
    const lrs::LrsCode code = spec.build();
    lrs::ChannelConfig cfg;
    cfg.out_dims = o.out_dims;
    cfg.t = o.t;
    cfg.rho = o.rho;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.stress = o.stress;
    cfg.keep_log = !o.log.empty();
    cfg.threads = o.threads;
    const lrs::TrialStats stats = lrs::run_trials(code, cfg);

    const std::string row = lrs::csv_row(code, cfg, stats);
    if (!o.csv.empty()) {
        const bool fresh = !std::filesystem::exists(o.csv) || std::filesystem::file_size(o.csv) == 0;
        std::ofstream out(o.csv, std::ios::app);
        if (!out) throw ToolError{"IoError", "cannot write " + o.csv};
        if (fresh) out << lrs::csv_header() << "\n";
        out << row << "\n";
    }
    if (!o.log.empty()) {
        std::ofstream out(o.log);
        if (!out) throw ToolError{"IoError", "cannot write " + o.log};
        for (const auto& line : stats.log) out << line << "\n";
    }
    if (o.json_output) {
        std::cout << lrs::trial_stats_to_json(stats).dump() << "\n";
    } else if (o.csv.empty()) {
        std::cout << lrs::csv_header() << "\n" << row << "\n";
    } else {
        std::cout << stats.successes << "/" << stats.trials << " successes, " << stats.failures << " failures, "
                  << stats.miscorrections << " miscorrections\n";
    }
    return 0;
}

int cmd_selftest(const Options& o) {
    using namespace lrs::selftest;
    std::vector<Check> checks = quick_checks();
    if (o.level == "full")
        for (auto& c : acceptance_checks()) checks.push_back(std::move(c));
    std::vector<std::string> failed;
    json results = json::array();
    for (const auto& check : checks) {
        const Report rep = run_check(check);
        if (rep.status == Status::Fail) failed.push_back(rep.name);
        if (o.json_output) {
            results.push_back(json{{"name", rep.name}, {"status", status_name(rep.status)}, {"detail", rep.detail}});
        } else {
            std::printf("%-9s %-22s %s\n", status_name(rep.status), rep.name.c_str(), rep.detail.c_str());
            std::fflush(stdout);
        }
    }
    if (o.json_output) {
        std::cout << json{{"level", o.level}, {"failed", failed}, {"checks", results}}.dump() << "\n";
    } else if (failed.empty()) {
        std::printf("selftest %s: all %zu checks passed\n", o.level.c_str(), checks.size());
    } else {
        std::string names;
        for (const auto& n : failed) names += (names.empty() ? "" : ", ") + n;
        std::printf("selftest %s: failed properties: %s\n", o.level.c_str(), names.c_str());
    }
    return failed.empty() ? 0 : 1;
}

int report(const std::string& code, const std::string& message) {
    std::string line = message;
    for (auto& ch : line)
        if (ch == '\n') ch = ' ';
    std::cerr << "ERR:" << code << ": " << line << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linearized Reed-Solomon codes over finite chain rings"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json_output, "machine-readable output on stdout");

    auto* gen = app.add_subcommand("gen", "build and validate a code, write its spec");
    gen->set_help_flag("--help", "Print this help message and exit");  // --h is the modulus
    gen->add_option("--p", o.p, "residue characteristic")->required();
    gen->add_option("--r", o.r, "nilpotency index")->required();
    gen->add_option("--g", o.g, "base modulus in y, e.g. y^2+y+1 (y for Z_{p^r})");
    gen->add_option("--h", o.h, "extension modulus in z, e.g. z^2+1")->required();
    gen->add_option("--partition", o.partition, "block lengths, e.g. 2,2")->required()->delimiter(',');
    gen->add_option("--k", o.k, "code dimension")->required();
    gen->add_option("--points", o.points, "point generator")->check(CLI::IsMember({"primitive", "coprime"}));
    gen->add_option("--out", o.out, "output file (default stdout)");

    auto* enc = app.add_subcommand("encode", "encode a message");
    enc->add_option("--code", o.code, "code spec file")->required();
    enc->add_option("--msg", o.msg, "message: JSON file or inline JSON")->required();
    enc->add_option("--out", o.out, "output file (default stdout)");

    auto* dec = app.add_subcommand("decode", "Welch-Berlekamp decode a received word");
    dec->add_option("--code", o.code, "code spec file")->required();
    dec->add_option("--rx", o.rx, "received word: JSON file or inline JSON")->required();
    dec->add_option("--out", o.out, "output file (default stdout)");

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo error-and-erasure channel");
    sim->add_option("--code", o.code, "code spec file")->required();
    sim->add_option("--t", o.t, "error sum-rank weight");
    sim->add_option("--rho", o.rho, "rank deficiency of the transfer matrix");
    sim->add_option("--trials", o.trials, "number of trials");
    sim->add_option("--seed", o.seed, "RNG seed");
    sim->add_option("--csv", o.csv, "append a stats row to this CSV file");
    sim->add_option("--log", o.log, "write per-trial JSON lines here");
    sim->add_option("--N", o.out_dims, "output dimensions per block, e.g. 3,2")->delimiter(',');
    sim->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sim->add_flag("--stress", o.stress, "allow configurations beyond the guarantee");

    auto* self = app.add_subcommand("selftest", "run the oracle and property suites");
    self->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report("Usage", e.what());
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*enc) return cmd_encode(o);
        if (*dec) return cmd_decode(o);
        if (*sim) return cmd_simulate(o);
        if (*self) return cmd_selftest(o);
    } catch (const lrs::Error& e) {
        const std::string what = e.what();
        const std::string prefix = std::string(lrs::code_name(e.code())) + ": ";
        return report(std::string(lrs::code_name(e.code())), what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what);
    } catch (const ToolError& e) {
        return report(e.code, e.message);
    } catch (const std::exception& e) {
        return report("Internal", e.what());
    }
    return 2;
}
