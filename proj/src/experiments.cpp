#include "cake/experiments.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace cake {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t instance_seed(std::uint64_t base_seed, int n, std::uint64_t index) {
    std::uint64_t s = splitmix64(base_seed ^ 0xcafef00dd15ea5e5ULL);
    s = splitmix64(s ^ static_cast<std::uint64_t>(n));
    return splitmix64(s ^ index);
}

Instance generate_instance(const GeneratorConfig& cfg, std::uint64_t index) {
    if (cfg.segments < 1) throw domain_error("generator: segments must be >= 1");
    if (cfg.value_grid < 2) throw domain_error("generator: value grid too small");
    std::mt19937_64 rng(instance_seed(cfg.base_seed, cfg.n, index));
    std::uniform_int_distribution<long> bp_draw(1, cfg.value_grid - 1);
    std::uniform_int_distribution<long> mass_draw(1, cfg.value_grid);

    Instance inst;
    for (int a = 0; a < cfg.n; ++a) {
        std::set<long> bps;
        while (static_cast<int>(bps.size()) < cfg.segments - 1)
            bps.insert(bp_draw(rng)); // re-draw resolves collisions
        std::vector<Rat> breakpoints;
        for (long b : bps) breakpoints.emplace_back(b, cfg.value_grid);

        std::vector<long> weights(cfg.segments);
        long sum = 0;
        for (auto& w : weights) { w = mass_draw(rng); sum += w; }
        std::vector<Rat> masses;
        for (long w : weights) masses.emplace_back(w, sum);
        inst.valuations.emplace_back(std::move(breakpoints), std::move(masses));
    }
    return inst;
}

Perf egalitarian_perf(const Instance& inst, const Division& div) {
    Rat worst = inst.v(0).value(div.shares[0]);
    for (int i = 1; i < inst.n(); ++i) worst = min(worst, inst.v(i).value(div.shares[i]));
    if (worst.is_zero()) return Perf::unbounded_marker();
    return Perf::of(Rat(1) / worst);
}

Perf utilitarian_perf(const Instance& inst, const Division& div) {
    Rat sum;
    for (int i = 0; i < inst.n(); ++i) sum += inst.v(i).value(div.shares[i]);
    if (sum.is_zero()) return Perf::unbounded_marker();
    return Perf::of(Rat(1) / sum);
}

Perf competitive_ratio(const Perf& online, const Perf& offline) {
    if (online.unbounded || offline.unbounded) return Perf::unbounded_marker();
    return Perf::of(online.value / offline.value);
}

namespace {

std::vector<Rat> own_values(const Instance& inst, const Division& div) {
    std::vector<Rat> out;
    for (int i = 0; i < inst.n(); ++i) out.push_back(inst.v(i).value(div.shares[i]));
    return out;
}

RatioStats stats_of(std::vector<Perf> ratios) {
    RatioStats s;
    std::vector<Rat> finite;
    for (auto& r : ratios) {
        if (r.unbounded) ++s.unbounded_count;
        else finite.push_back(r.value);
    }
    s.finite_count = static_cast<long>(finite.size());
    if (finite.empty()) return s;
    std::sort(finite.begin(), finite.end());
    s.min = finite.front();
    s.max = finite.back();
    Rat sum;
    for (auto& v : finite) sum += v;
    s.mean = sum / Rat(static_cast<long>(finite.size()));
    std::size_t m = finite.size() / 2;
    s.median = (finite.size() % 2 == 1) ? finite[m] : (finite[m - 1] + finite[m]) / Rat(2);
    return s;
}

} // namespace

BatchResult run_batch(const BatchConfig& cfg) {
    if (cfg.trials < 1) throw domain_error("batch: trials must be >= 1");
    if (cfg.procedures.empty()) throw domain_error("batch: no procedures selected");
    for (Procedure p : cfg.procedures)
        if (!is_online(p)) throw domain_error("batch evaluates online procedures only");

    BatchResult res;
    for (int n : cfg.ns) {
        if (n < 2) throw domain_error("batch: n must be >= 2");
        std::map<Procedure, std::vector<Perf>> egal_ratios, util_ratios;
        for (long t = 0; t < cfg.trials; ++t) {
            GeneratorConfig gen{n, cfg.segments, cfg.base_seed, cfg.value_grid};
            Instance inst = generate_instance(gen, static_cast<std::uint64_t>(t));
            std::map<Procedure, RunResult> offline_cache;
            for (Procedure p : cfg.procedures) {
                Procedure off = offline_counterpart(p);
                if (!offline_cache.count(off))
                    offline_cache.emplace(off, replay_with_strategy(inst, off, {}, cfg.room));
                RunResult online = replay_with_strategy(inst, p, {}, cfg.room);
                const RunResult& offline = offline_cache.at(off);

                InstanceReport row;
                row.n = n;
                row.procedure = p;
                row.seed = instance_seed(cfg.base_seed, n, static_cast<std::uint64_t>(t));
                row.egal_online = egalitarian_perf(inst, online.division);
                row.egal_offline = egalitarian_perf(inst, offline.division);
                row.egal_ratio = competitive_ratio(row.egal_online, row.egal_offline);
                row.util_online = utilitarian_perf(inst, online.division);
                row.util_offline = utilitarian_perf(inst, offline.division);
                row.util_ratio = competitive_ratio(row.util_online, row.util_offline);
                row.online_values = own_values(inst, online.division);
                row.offline_values = own_values(inst, offline.division);
                egal_ratios[p].push_back(row.egal_ratio);
                util_ratios[p].push_back(row.util_ratio);
                res.rows.push_back(std::move(row));
            }
        }
        for (Procedure p : cfg.procedures) {
            SummaryRow s;
            s.n = n;
            s.procedure = p;
            s.trials = cfg.trials;
            s.egal = stats_of(egal_ratios[p]);
            s.util = stats_of(util_ratios[p]);
            res.summary.push_back(std::move(s));
        }
    }
    return res;
}

namespace {

void put(std::ostream& os, const Perf& p) {
    if (p.unbounded) os << "unbounded,unbounded";
    else os << p.value.str() << ',' << p.value.decimal();
}

void put_stat(std::ostream& os, const RatioStats& s) {
    if (s.finite_count == 0) {
        os << ",,,,,,,," << s.unbounded_count;
        return;
    }
    os << s.mean.str() << ',' << s.mean.decimal() << ',' << s.median.str() << ','
       << s.median.decimal() << ',' << s.min.str() << ',' << s.min.decimal() << ','
       << s.max.str() << ',' << s.max.decimal() << ',' << s.unbounded_count;
}

} // namespace

void write_instance_csv(std::ostream& os, const BatchResult& res, const std::string& flags_echo) {
    if (!flags_echo.empty()) os << "# " << flags_echo << '\n';
    os << "n,procedure,seed,egal_online,egal_online_dec,egal_offline,egal_offline_dec,"
          "egal_ratio,egal_ratio_dec,util_online,util_online_dec,util_offline,"
          "util_offline_dec,util_ratio,util_ratio_dec,unbounded_flag\n";
    for (const auto& r : res.rows) {
        os << r.n << ',' << procedure_name(r.procedure) << ',' << r.seed << ',';
        put(os, r.egal_online); os << ',';
        put(os, r.egal_offline); os << ',';
        put(os, r.egal_ratio); os << ',';
        put(os, r.util_online); os << ',';
        put(os, r.util_offline); os << ',';
        put(os, r.util_ratio); os << ',';
        os << (r.egal_ratio.unbounded || r.util_ratio.unbounded ? 1 : 0) << '\n';
    }
}

void write_summary_csv(std::ostream& os, const BatchResult& res, const std::string& flags_echo) {
    if (!flags_echo.empty()) os << "# " << flags_echo << '\n';
    os << "n,procedure,trials,"
          "egal_mean,egal_mean_dec,egal_median,egal_median_dec,egal_min,egal_min_dec,"
          "egal_max,egal_max_dec,egal_unbounded,"
          "util_mean,util_mean_dec,util_median,util_median_dec,util_min,util_min_dec,"
          "util_max,util_max_dec,util_unbounded\n";
    for (const auto& s : res.summary) {
        os << s.n << ',' << procedure_name(s.procedure) << ',' << s.trials << ',';
        put_stat(os, s.egal);
        os << ',';
        put_stat(os, s.util);
        os << '\n';
    }
}

} // namespace cake
