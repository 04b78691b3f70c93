// Copyright 2026 The QPS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qps/cli.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qps/builder.h"
#include "qps/poisson.h"
#include "qps/resources.h"
#include "qps/sine_identities.h"
#include "qps/solver.h"
#include "qps/verify.h"

namespace qps {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

constexpr double kDemoTolerance = 1e-6;
constexpr int kHumanDigits = 6;

// Bounds on n per command. Simulation limits keep the state vector small.
constexpr int kSerialSimMax = 6;
constexpr int kParallelSimMin = 3;
constexpr int kParallelSimMax = 5;
constexpr int kReportMax = 15;
constexpr int kIdentitiesMax = 14;

// Depth and gate figures quoted for the eigenvalue-inversion stage at n = 15
// and for the whole n = 2 circuit.
constexpr double kAnchorSerialDepth15 = 8000;
constexpr double kAnchorParallelDepth15 = 1800;
constexpr double kAnchorGates2 = 90;

struct Options {
    int n = 0;
    std::string mode = "serial";
    std::string ry = "bitwise";
    std::string preset;
    std::string file;
    std::string b_list;
    std::string output = "human";
    std::uint64_t seed = 1;
    int n_max = 0;
    unsigned threads = 1;
    bool inject_fault = false;
};

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, const std::string &what) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw std::invalid_argument("bad number '" + std::string(text) + "' in " + what);
    }
    return v;
}

std::vector<double> parse_list(const std::string &list) {
    std::vector<double> out;
    std::string_view rest = list;
    while (true) {
        auto comma = rest.find(',');
        out.push_back(parse_double(rest.substr(0, comma), "--b"));
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<double> read_rhs_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open b file " + path);
    }
    std::vector<double> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        out.push_back(parse_double(line, path + " line " + std::to_string(lineno)));
    }
    if (in.bad()) {
        throw IoError("error reading b file " + path);
    }
    return out;
}

void check_range(int n, int lo, int hi, const std::string &what) {
    if (n < lo || n > hi) {
        throw std::invalid_argument(
            what + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " + std::to_string(n));
    }
}

CostModel load_cost_model() {
    try {
        return CostModel::from_environment();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad QPS_COST_MODEL: ") + e.what());
    } catch (const std::invalid_argument &) {
        throw;
    } catch (const std::runtime_error &e) {
        throw IoError(e.what());
    }
}

QpsConfig make_config(const Options &opt, int n) {
    QpsConfig c;
    c.n = n;
    c.mode = parse_mode(opt.mode);
    c.ry = parse_ry(opt.ry);
    c.cost = load_cost_model();
    c.inject_fault = opt.inject_fault;
    c.validate();
    return c;
}

void check_sim_range(const QpsConfig &c) {
    if (c.mode == Mode::kParallel) {
        check_range(c.n, kParallelSimMin, kParallelSimMax, "n for parallel simulation");
    } else {
        check_range(c.n, 2, kSerialSimMax, "n for serial simulation");
    }
}

void print_vector(std::ostream &out, std::span<const double> v) {
    out << "[";
    for (std::size_t i = 0; i < v.size(); i++) {
        out << (i ? ", " : "") << v[i];
    }
    out << "]";
}

void print_resources(std::ostream &out, const ResourceReport &r) {
    out << "qubits " << r.qubits << ", elementary gates " << r.elementary_gates << ", depth " << r.depth_serial
        << " (IR gates " << r.ir_gates << ", IR depth " << r.depth_native << ")\n";
}

void print_csv(std::ostream &out, std::span<const double> v) {
    for (double x : v) {
        out << shortest(x) << "\n";
    }
}

// ---- demo

int cmd_demo(const Options &opt, std::ostream &out) {
    QpsConfig config = make_config(opt, 2);
    auto b = demo_rhs();
    auto ref = demo_reference();
    auto sol = solve(config, b, opt.threads);
    double diff = 0;
    for (std::size_t i = 0; i < ref.size(); i++) {
        diff = std::max(diff, std::abs(sol.solution[i] - ref[i]));
    }
    bool ok = diff <= kDemoTolerance;

    if (opt.output == "json") {
        json j = {
            {"n", config.n},
            {"mode", mode_name(config.mode)},
            {"ry", ry_name(config.ry)},
            {"b", b},
            {"solution", sol.solution},
            {"reference", ref},
            {"max_abs_diff", diff},
            {"tolerance", kDemoTolerance},
            {"passed", ok},
            {"fidelity", sol.fidelity},
            {"success_probability", sol.success_probability},
            {"resources", sol.resources.to_json()},
        };
        out << j.dump(2) << "\n";
    } else if (opt.output == "csv") {
        print_csv(out, sol.solution);
    } else {
        out << std::setprecision(kHumanDigits);
        out << "n = 2, b = 1/sqrt(2)|01> + 1/2|10> + 1/2|11>\n";
        out << "solution   ";
        print_vector(out, sol.solution);
        out << "\nreference  ";
        print_vector(out, ref);
        out << "\nmax |diff| " << diff << (ok ? " (ok)" : " (FAILED)") << "\n";
        out << "fidelity vs classical " << sol.fidelity << "\n";
        out << "success probability " << sol.success_probability << "\n";
        print_resources(out, sol.resources);
    }
    return ok ? kExitOk : kExitVerify;
}

// ---- solve

struct Rhs {
    std::vector<double> b;
    std::string source;
};

Rhs resolve_rhs(const Options &opt, int n) {
    int given = !opt.preset.empty() + !opt.file.empty() + !opt.b_list.empty();
    if (given != 1) {
        throw std::invalid_argument("give exactly one of --preset, --file, --b");
    }
    Rhs r;
    if (!opt.file.empty()) {
        r.b = read_rhs_file(opt.file);
        r.source = "file:" + opt.file;
    } else if (!opt.b_list.empty()) {
        r.b = parse_list(opt.b_list);
        r.source = "inline";
    } else if (opt.preset == "random") {
        std::mt19937_64 rng(opt.seed);
        r.b = random_rhs(n, rng);
        r.source = "random:" + std::to_string(opt.seed);
    } else {
        r.b = sample_preset(parse_preset(opt.preset), n);
        r.source = "preset:" + opt.preset;
    }
    if (r.b.size() != interior_size(n)) {
        throw std::invalid_argument("right-hand side has " + std::to_string(r.b.size()) + " entries, expected " +
                                    std::to_string(interior_size(n)) + " for n = " + std::to_string(n));
    }
    return r;
}

int cmd_solve(const Options &opt, std::ostream &out) {
    QpsConfig config = make_config(opt, opt.n);
    check_sim_range(config);
    Rhs rhs = resolve_rhs(opt, config.n);
    auto sol = solve(config, rhs.b, opt.threads);

    if (opt.output == "json") {
        std::string list;
        for (std::size_t i = 0; i < rhs.b.size(); i++) {
            list += (i ? "," : "") + shortest(rhs.b[i]);
        }
        json j = sol.to_json();
        j["config"] = {
            {"command", "solve"},
            {"n", config.n},
            {"mode", mode_name(config.mode)},
            {"ry", ry_name(config.ry)},
            {"b_source", rhs.source},
            {"b", rhs.b},
            {"cost_model", config.cost.to_json()},
        };
        j["rerun"] = std::vector<std::string>{
            "solve", "--n", std::to_string(config.n), "--mode", mode_name(config.mode), "--ry", ry_name(config.ry),
            "--b", list, "--output", "json"};
        out << j.dump(2) << "\n";
    } else if (opt.output == "csv") {
        print_csv(out, sol.solution);
    } else {
        out << std::setprecision(kHumanDigits);
        out << "n = " << config.n << " (" << sol.solution.size() << " unknowns), mode " << mode_name(config.mode)
            << ", ry " << ry_name(config.ry) << ", b from " << rhs.source << "\n";
        out << std::setw(6) << "i" << std::setw(12) << "x" << std::setw(14) << "quantum" << std::setw(14)
            << "classical" << "\n";
        double grid = std::ldexp(1.0, config.n);
        for (std::size_t i = 0; i < sol.solution.size(); i++) {
            out << std::setw(6) << i + 1 << std::setw(12) << (i + 1) / grid << std::setw(14) << sol.solution[i]
                << std::setw(14) << sol.classical_reference[i] << "\n";
        }
        out << "fidelity vs classical " << sol.fidelity << "\n";
        out << "success probability " << sol.success_probability << "\n";
        print_resources(out, sol.resources);
    }
    return kExitOk;
}

// ---- verify

int cmd_verify(const Options &opt, std::ostream &out) {
    VerifyOptions v;
    v.n_max = opt.n_max == 0 ? 4 : opt.n_max;
    check_range(v.n_max, 2, kSerialSimMax, "--n-max");
    v.seed = opt.seed;
    v.inject_fault = opt.inject_fault;
    v.threads = opt.threads;
    auto results = run_verification(v);
    int failed = 0;
    for (const auto &r : results) {
        failed += !r.passed;
    }

    if (opt.output == "json") {
        json rows = json::array();
        for (const auto &r : results) {
            rows.push_back(r.to_json());
        }
        out << json{{"checks", rows}, {"failed", failed}, {"passed", failed == 0}}.dump(2) << "\n";
    } else if (opt.output == "csv") {
        out << "suite,n,passed,value,tolerance,detail\n";
        for (const auto &r : results) {
            out << r.suite << "," << r.n << "," << (r.passed ? "true" : "false") << "," << shortest(r.value) << ","
                << shortest(r.tolerance) << "," << r.detail << "\n";
        }
    } else {
        out << std::setprecision(3);
        out << std::left << std::setw(22) << "suite" << std::setw(4) << "n" << std::setw(6) << "ok" << std::setw(12)
            << "value" << std::setw(10) << "tol" << "detail\n";
        for (const auto &r : results) {
            out << std::setw(22) << r.suite << std::setw(4) << r.n << std::setw(6) << (r.passed ? "pass" : "FAIL")
                << std::setw(12) << r.value << std::setw(10) << r.tolerance << r.detail << "\n";
        }
        out << std::right;
        if (failed == 0) {
            out << "all " << results.size() << " checks passed\n";
        } else {
            out << failed << " of " << results.size() << " checks failed\n";
        }
    }
    return failed == 0 ? kExitOk : kExitVerify;
}

// ---- identities

int cmd_identities(const Options &opt, std::ostream &out) {
    int n_max = opt.n_max == 0 ? 12 : opt.n_max;
    check_range(n_max, 1, kIdentitiesMax, "--n-max");
    struct Row {
        int n;
        double product;
        double odd;
        std::optional<double> inversion;
    };
    std::vector<Row> rows;
    for (int n = 1; n <= n_max; n++) {
        // The inversion sequence needs at least one sine pair, so n = 1 has none.
        std::optional<double> inv;
        if (n >= 2) {
            inv = inversion_identity_error(n);
        }
        rows.push_back({n, sine_formula_residual(n), odd_layer_residual(n), inv});
    }

    if (opt.output == "json") {
        json arr = json::array();
        for (const auto &r : rows) {
            arr.push_back({{"n", r.n},
                           {"sine_product_residual", r.product},
                           {"odd_layer_residual", r.odd},
                           {"inversion_max_rel_error", r.inversion ? json(*r.inversion) : json(nullptr)}});
        }
        out << arr.dump(2) << "\n";
    } else if (opt.output == "csv") {
        out << "n,sine_product_residual,odd_layer_residual,inversion_max_rel_error\n";
        for (const auto &r : rows) {
            out << r.n << "," << shortest(r.product) << "," << shortest(r.odd) << ","
                << (r.inversion ? shortest(*r.inversion) : "") << "\n";
        }
    } else {
        out << std::setprecision(kHumanDigits);
        out << std::setw(4) << "n" << std::setw(16) << "product" << std::setw(16) << "odd layer" << std::setw(16)
            << "8/lambda_j" << "\n";
        for (const auto &r : rows) {
            out << std::setw(4) << r.n << std::setw(16) << r.product << std::setw(16) << r.odd << std::setw(16);
            if (r.inversion) {
                out << *r.inversion;
            } else {
                out << "-";
            }
            out << "\n";
        }
    }
    return kExitOk;
}

// ---- report

json anchor(const std::string &quantity, double quoted, double measured) {
    double ratio = measured / quoted;
    return {
        {"quantity", quantity},
        {"quoted", quoted},
        {"measured", measured},
        {"ratio", ratio},
        {"within_factor_2", ratio >= 0.5 && ratio <= 2.0},
    };
}

int cmd_report(const Options &opt, std::ostream &out) {
    QpsConfig config = make_config(opt, opt.n);
    check_range(config.n, 2, kReportMax, "n for report");
    config.materialize_blocks = false;
    auto layout = QpsLayout::make(config.n, config.mode);
    auto full = count_resources(build_qps(config), config.cost);
    auto inv = count_resources(build_inversion(config, layout), config.cost);
    double n = config.n;

    json anchors = json::array();
    if (config.n == 2) {
        anchors.push_back(anchor("elementary gates, full circuit, n=2", kAnchorGates2, full.elementary_gates));
    }
    if (config.n == 15) {
        double quoted = config.mode == Mode::kSerial ? kAnchorSerialDepth15 : kAnchorParallelDepth15;
        anchors.push_back(anchor("depth, eigenvalue inversion, n=15", quoted, inv.depth_serial));
    }
    json j = {
        {"n", config.n},
        {"mode", mode_name(config.mode)},
        {"ry", ry_name(config.ry)},
        {"cost_model", config.cost.to_json()},
        {"qubits", full.qubits},
        {"full", full.to_json()},
        {"inversion", inv.to_json()},
        {"formulas",
         {
             {"qubits_3n", 3 * config.n},
             {"qubits_3n_plus_1", 3 * config.n + 1},
             {"gates_5_3_n3", 5.0 / 3.0 * n * n * n},
             {"depth_10_n2", 10 * n * n},
         }},
        {"anchors", anchors},
    };

    if (opt.output == "json") {
        out << j.dump(2) << "\n";
    } else if (opt.output == "csv") {
        out << "stage,qubits,ir_gates,elementary_gates,depth_serial,depth_native\n";
        for (auto [name, r] : {std::pair{"full", full}, std::pair{"inversion", inv}}) {
            out << name << "," << r.qubits << "," << r.ir_gates << "," << r.elementary_gates << "," << r.depth_serial
                << "," << r.depth_native << "\n";
        }
    } else {
        out << std::setprecision(kHumanDigits);
        out << "n = " << config.n << ", mode " << mode_name(config.mode) << "\n";
        out << "full circuit:  ";
        print_resources(out, full);
        out << "inversion:     ";
        print_resources(out, inv);
        out << "formulas: 3n = " << 3 * config.n << ", 3n+1 = " << 3 * config.n + 1
            << ", 5/3 n^3 = " << 5.0 / 3.0 * n * n * n << ", 10 n^2 = " << 10 * n * n << "\n";
        for (const auto &a : anchors) {
            out << a["quantity"].get<std::string>() << ": measured " << a["measured"].get<double>() << " vs quoted "
                << a["quoted"].get<double>() << " (ratio " << a["ratio"].get<double>() << ", "
                << (a["within_factor_2"].get<bool>() ? "within" : "outside") << " factor 2)\n";
        }
    }
    return kExitOk;
}

}  // namespace

std::vector<double> demo_rhs() {
    return {1 / std::sqrt(2.0), 0.5, 0.5};
}

std::vector<double> demo_reference() {
    return {0.552987, 0.674065, 0.489736};
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Amplitude-based quantum Poisson solver (statevector simulation)", "qps"};
    app.require_subcommand(1);
    Options opt;

    auto add_output = [&](CLI::App *sub, const std::string &def) {
        opt.output = def;
        sub->add_option("--output", opt.output, "Output format")
            ->check(CLI::IsMember({"json", "csv", "human"}))
            ->capture_default_str();
    };
    auto add_mode = [&](CLI::App *sub) {
        sub->add_option("--mode", opt.mode, "serial or parallel inversion stage")
            ->check(CLI::IsMember({"serial", "parallel"}))
            ->capture_default_str();
        sub->add_option("--ry", opt.ry, "Rotation construction: semantic or bitwise")
            ->check(CLI::IsMember({"semantic", "bitwise"}))
            ->capture_default_str();
    };
    auto add_threads = [&](CLI::App *sub) {
        sub->add_option("--threads", opt.threads, "Simulator threads")->check(CLI::Range(1u, 256u));
    };

    auto *demo = app.add_subcommand("demo", "Run the n=2 demonstration and compare with the quoted solution");
    add_mode(demo);
    add_threads(demo);

    auto *solve_cmd = app.add_subcommand("solve", "Solve -u'' = f on (0,1) with zero boundary values");
    solve_cmd->add_option("--n", opt.n, "Qubits in the problem register (N = 2^n)")->required();
    add_mode(solve_cmd);
    auto *rhs = solve_cmd->add_option_group("rhs", "Right-hand side source");
    rhs->add_option("--preset", opt.preset, "sin, const, ramp, zero or random");
    rhs->add_option("--file", opt.file, "File with one value per line, 2^n - 1 lines");
    rhs->add_option("--b", opt.b_list, "Comma separated values, 2^n - 1 of them");
    rhs->require_option(1);
    solve_cmd->add_option("--seed", opt.seed, "Seed for --preset random")->capture_default_str();
    add_threads(solve_cmd);

    auto *verify = app.add_subcommand("verify", "Run the self-check suites for n = 2..n-max");
    verify->add_option("--n-max", opt.n_max, "Largest n (default 4)");
    verify->add_option("--seed", opt.seed, "Seed for random right-hand sides")->capture_default_str();
    verify->add_flag("--inject-fault", opt.inject_fault)->group("");
    add_threads(verify);

    auto *identities = app.add_subcommand("identities", "Tabulate the sine-product identities");
    identities->add_option("--n-max", opt.n_max, "Largest n (default 12)");

    auto *report = app.add_subcommand("report", "Count qubits, gates and depth without simulating");
    report->add_option("--n", opt.n, "Qubits in the problem register")->required();
    add_mode(report);

    for (auto *sub : {demo, solve_cmd, verify, identities}) {
        add_output(sub, "human");
    }
    // Reports are JSON unless asked otherwise.
    report->add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }
    if (report->parsed() && report->count("--output") == 0) {
        opt.output = "json";
    }

    try {
        if (demo->parsed()) {
            return cmd_demo(opt, out);
        }
        if (solve_cmd->parsed()) {
            return cmd_solve(opt, out);
        }
        if (verify->parsed()) {
            return cmd_verify(opt, out);
        }
        if (identities->parsed()) {
            return cmd_identities(opt, out);
        }
        return cmd_report(opt, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const PostselectionError &e) {
        err << "error: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace qps
