#include "cake/collusion.hpp"
#include "cake/experiments.hpp"
#include "cake/fairness.hpp"
#include "cake/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cake;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitProtocolError = 3;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Procedure> parse_procedures(const std::string& s) {
    std::vector<Procedure> out;
    for (const auto& name : split_list(s)) out.push_back(procedure_from_name(name));
    if (out.empty()) throw domain_error("no procedures given");
    return out;
}

// "2:64:x2" -> 2,4,8,16,32,64; "2:10:2" -> 2,4,6,8,10; "8:8" -> 8.
std::vector<int> parse_n_range(const std::string& s) {
    auto parts = split_list([&] {
        std::string t = s;
        for (auto& c : t)
            if (c == ':') c = ',';
        return t;
    }());
    if (parts.size() < 2 || parts.size() > 3)
        throw domain_error("n-range must be START:END or START:END:STEP, got '" + s + "'");
    int start = std::stoi(parts[0]);
    int end = std::stoi(parts[1]);
    if (start < 2 || end < start)
        throw domain_error("n-range needs 2 <= START <= END, got '" + s + "'");
    bool multiplicative = false;
    int step = 1;
    if (parts.size() == 3) {
        std::string st = parts[2];
        if (!st.empty() && (st[0] == 'x' || st[0] == 'X')) {
            multiplicative = true;
            st = st.substr(1);
        }
        step = std::stoi(st);
        if ((multiplicative && step < 2) || (!multiplicative && step < 1))
            throw domain_error("n-range step must be positive, got '" + s + "'");
    }
    std::vector<int> ns;
    for (long n = start; n <= end; n = multiplicative ? n * step : n + step)
        ns.push_back(static_cast<int>(n));
    return ns;
}

json verdicts_json(const std::vector<AgentVerdict>& vs) {
    json arr = json::array();
    for (const auto& v : vs)
        arr.push_back({{"agent", v.agent + 1},
                       {"passed", v.passed},
                       {"own_value", v.own_value.str()},
                       {"threshold", v.threshold.str()}});
    return arr;
}

struct CheckOutcome {
    json report;
    bool all_passed;
};

CheckOutcome run_property(const std::string& prop, const Instance& inst, const Division& div,
                          const Trace& tr) {
    json rep{{"property", prop}};
    bool ok = true;
    if (prop == "proportional") {
        auto vs = check_proportional(inst, div);
        for (const auto& v : vs) ok = ok && v.passed;
        rep["verdicts"] = verdicts_json(vs);
    } else if (prop == "envy_free") {
        auto vs = check_envy_free(inst, div);
        json arr = json::array();
        for (const auto& v : vs) {
            ok = ok && v.passed;
            arr.push_back({{"agent", v.agent + 1},
                           {"other", v.other + 1},
                           {"passed", v.passed},
                           {"own_value", v.own_value.str()},
                           {"other_value", v.other_value.str()}});
        }
        rep["verdicts"] = arr;
    } else if (prop == "equitable") {
        auto v = check_equitable(inst, div);
        ok = v.passed;
        json vals = json::array();
        for (const auto& x : v.own_values) vals.push_back(x.str());
        rep["passed"] = v.passed;
        rep["own_values"] = vals;
    } else if (prop == "weak_proportional") {
        auto vs = check_weak_proportional(tr, inst, div);
        for (const auto& v : vs) ok = ok && v.passed;
        rep["verdicts"] = verdicts_json(vs);
    } else if (prop == "immediate_envy_free") {
        auto vs = check_immediate_envy_free(tr, inst, div);
        for (const auto& v : vs) ok = ok && v.passed;
        rep["verdicts"] = verdicts_json(vs);
    } else if (prop == "weak_envy_free") {
        auto vs = check_weak_envy_free(tr, inst, div);
        for (const auto& v : vs) ok = ok && v.passed;
        rep["verdicts"] = verdicts_json(vs);
    } else if (prop == "pareto_permutation") {
        auto dom = pareto_dominated_by_permutation(inst, div);
        ok = !dom.has_value();
        rep["passed"] = ok;
        if (dom) {
            json perm = json::array();
            for (int x : dom->perm) perm.push_back(x + 1);
            rep["dominating_permutation"] = perm;
            rep["strict"] = dom->strict;
        }
    } else {
        throw domain_error("unknown property '" + prop + "'");
    }
    rep["holds"] = ok;
    return {rep, ok};
}

int cmd_run(const std::string& instance_path, const std::string& procedure, int room,
            const std::string& strategy_path) {
    Instance inst = load_instance(instance_path);
    Strategy strat;
    if (!strategy_path.empty()) strat = load_strategy(strategy_path);
    Procedure p = procedure_from_name(procedure);
    RunResult res = replay_with_strategy(inst, p, strat, room);
    json out{{"procedure", procedure_name(p)},
             {"division", to_json(res.division)},
             {"trace", to_json(res.trace)}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_check(const std::string& properties, const std::string& instance_path,
              const std::string& procedure, int room, const std::string& strategy_path,
              const std::string& division_path, const std::string& trace_path) {
    auto props = split_list(properties);
    if (props.empty()) throw domain_error("properties list is empty");
    Instance inst = load_instance(instance_path);

    Division div;
    Trace tr;
    if (!procedure.empty()) {
        Strategy strat;
        if (!strategy_path.empty()) strat = load_strategy(strategy_path);
        RunResult res = replay_with_strategy(inst, procedure_from_name(procedure), strat, room);
        div = std::move(res.division);
        tr = std::move(res.trace);
    } else if (!division_path.empty() && !trace_path.empty()) {
        div = load_division(division_path);
        tr = load_trace(trace_path);
    } else {
        throw domain_error("check needs --procedure or both --division and --trace");
    }
    if (static_cast<int>(div.shares.size()) != inst.n())
        throw domain_error("division has " + std::to_string(div.shares.size()) +
                           " shares for " + std::to_string(inst.n()) + " agents");

    bool all_ok = true;
    json reports = json::array();
    for (const auto& prop : props) {
        CheckOutcome out = run_property(prop, inst, div, tr);
        all_ok = all_ok && out.all_passed;
        reports.push_back(std::move(out.report));
    }
    json out{{"all_hold", all_ok}, {"reports", reports}};
    std::cout << out.dump(2) << '\n';
    return all_ok ? kExitOk : kExitPropertyFailed;
}

int cmd_batch(const std::string& n_range, long trials, std::uint64_t seed, int segments,
              const std::string& procedures, int room, long grid, const std::string& out_dir) {
    BatchConfig cfg;
    cfg.ns = parse_n_range(n_range);
    cfg.trials = trials;
    cfg.base_seed = seed;
    cfg.segments = segments;
    cfg.value_grid = grid;
    cfg.procedures = parse_procedures(procedures);
    cfg.room = room;
    BatchResult res = run_batch(cfg);

    std::ostringstream echo;
    echo << "n-range=" << n_range << " trials=" << trials << " seed=" << seed
         << " segments=" << segments << " grid=" << grid << " procedures=" << procedures
         << " room=" << room;

    std::filesystem::create_directories(out_dir);
    auto open_out = [&](const char* name) {
        std::ofstream f(std::filesystem::path(out_dir) / name);
        if (!f) throw domain_error(std::string("cannot write ") + name + " in " + out_dir);
        return f;
    };
    {
        auto f = open_out("instances.csv");
        write_instance_csv(f, res, echo.str());
    }
    {
        auto f = open_out("summary.csv");
        write_summary_csv(f, res, echo.str());
    }
    std::cout << "wrote " << res.rows.size() << " instance rows and " << res.summary.size()
              << " summary rows to " << out_dir << '\n';
    return kExitOk;
}

int cmd_collude(const std::string& instance_path, int p, int room) {
    Instance inst = load_instance(instance_path);
    if (inst.n() < 4) throw domain_error("collusion needs at least 4 agents");
    CollusionPact pact(p);
    CollusionGain gain = collusion_gain(inst, room, pact);

    json colluders = json::array();
    bool guarantee_holds = true;
    for (int i = 0; i < 2; ++i) {
        bool meets = !gain.pact_fired || gain.colluding_values[i] >= pact.guarantee();
        guarantee_holds = guarantee_holds && meets;
        colluders.push_back({{"agent", i + 1},
                             {"honest_value", gain.honest_values[i].str()},
                             {"colluding_value", gain.colluding_values[i].str()},
                             {"meets_guarantee", meets}});
    }
    json out{{"p", p},
             {"threshold_fraction", pact.threshold_fraction().str()},
             {"guarantee", pact.guarantee().str()},
             {"pact_fired", gain.pact_fired},
             {"guarantee_holds", guarantee_holds},
             {"colluders", colluders}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic online cake cutting"};
    app.require_subcommand(1);

    std::string instance_path, strategy_path, procedure, properties;
    std::string division_path, trace_path, n_range = "2:64:x2", procedures = "occ,omk", out_dir;
    int room = 2, p = 4, segments = 8;
    long trials = 100, grid = 1000000;
    std::uint64_t seed = 0;

    auto* run = app.add_subcommand("run", "Run a procedure on an instance");
    run->add_option("--procedure", procedure, "occ|omk|omc|cc|mk")->required();
    run->add_option("--instance", instance_path, "instance JSON file")->required();
    run->add_option("--room", room, "stage capacity for the moving knife");
    run->add_option("--strategy", strategy_path, "strategy overrides JSON file");

    auto* check = app.add_subcommand("check", "Check fairness properties");
    check->add_option("--properties", properties, "comma-separated property list")->required();
    check->add_option("--instance", instance_path, "instance JSON file")->required();
    check->add_option("--procedure", procedure, "run this procedure to get division+trace");
    check->add_option("--room", room, "stage capacity for the moving knife");
    check->add_option("--strategy", strategy_path, "strategy overrides JSON file");
    check->add_option("--division", division_path, "division JSON file");
    check->add_option("--trace", trace_path, "trace JSON file");

    auto* batch = app.add_subcommand("batch", "Competitive-ratio experiments");
    batch->add_option("--n-range", n_range, "START:END[:STEP], xK for multiplicative");
    batch->add_option("--trials", trials, "instances per n")->required();
    batch->add_option("--seed", seed, "base seed");
    batch->add_option("--segments", segments, "density segments per valuation");
    batch->add_option("--grid", grid, "integer value grid");
    batch->add_option("--procedures", procedures, "online procedures, comma-separated");
    batch->add_option("--room", room, "stage capacity for the moving knife");
    batch->add_option("--out", out_dir, "output directory")->required();

    auto* collude = app.add_subcommand("collude", "Moving-knife collusion simulation");
    collude->add_option("--instance", instance_path, "instance JSON file")->required();
    collude->add_option("--p", p, "threshold parameter, fraction (p-1)/p");
    collude->add_option("--room", room, "stage capacity for the moving knife");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        if (run->parsed())
            return cmd_run(instance_path, procedure, room, strategy_path);
        if (check->parsed())
            return cmd_check(properties, instance_path, procedure, room, strategy_path,
                             division_path, trace_path);
        if (batch->parsed())
            return cmd_batch(n_range, trials, seed, segments, procedures, room, grid, out_dir);
        if (collude->parsed())
            return cmd_collude(instance_path, p, room);
    } catch (const cake::protocol_error& e) {
        std::cerr << "protocol error: " << e.what() << '\n';
        return kExitProtocolError;
    } catch (const cake::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
