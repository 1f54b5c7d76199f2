#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "hf/casefile.hpp"
#include "hf/report.hpp"
#include "hf/verifier.hpp"
#include "hf/version.hpp"

namespace fs = std::filesystem;
using namespace hf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
    std::string cache_dir;
    bool no_cache = false;
    std::optional<std::uint64_t> seed;
    std::vector<std::uint32_t> primes;
};

EngineConfig config_for(const CaseFile& cf, const CommonOpts& opts) {
    EngineConfig cfg;
    if (cf.prime0) cfg.primes[0] = *cf.prime0;
    if (cf.prime1) cfg.primes[1] = *cf.prime1;
    if (cf.seed) cfg.seed = *cf.seed;
    if (opts.primes.size() == 2) {
        cfg.primes[0] = opts.primes[0];
        cfg.primes[1] = opts.primes[1];
    }
    if (opts.seed) cfg.seed = *opts.seed;
    return cfg;
}

/// expectation key -> value found in the record; returns mismatches
std::vector<std::string> check_expectations(const CaseFile& cf,
                                            const json& record) {
    std::vector<std::string> bad;
    const json& rep = record["report"];
    for (const auto& [key, want] : cf.expect) {
        json got;
        if (key == "dim") got = rep["d"];
        else if (key == "depth") got = rep["depth"];
        else if (key == "reg") got = rep["reg"];
        else if (key == "reg1") got = rep["reg1"];
        else if (key == "h0") got = rep["h0"];
        else if (key == "B") got = rep["B"];
        else if (key == "r") got = rep["r"];
        else if (key == "postulation") got = rep["postulation"];
        else if (key[0] == 'e') {
            std::size_t idx = std::stoul(key.substr(1));
            const json& e = rep["e"];
            got = idx < e.size() ? e[idx] : json(nullptr);
        }
        if (got.is_null() || got.get<long long>() != want)
            bad.push_back("expected " + key + "=" + std::to_string(want) +
                          ", got " + got.dump());
    }
    return bad;
}

struct CaseRun {
    std::string path;
    std::string label;
    std::string id;
    json record;
    bool cached = false;
    bool ok = false;        // parsed + analyzed
    bool checks_pass = false;
    std::vector<std::string> expect_mismatches;
    std::string error;      // parse / resource message
    int error_code = 0;     // suggested exit code on error
    double ms = 0;
};

CaseRun run_one_case(const std::string& path, const CommonOpts& opts) {
    CaseRun out;
    out.path = path;
    auto t0 = std::chrono::steady_clock::now();
    try {
        CaseFile cf = parse_case_file(path);
        out.label = cf.label.empty() ? fs::path(path).stem().string() : cf.label;
        EngineConfig cfg = config_for(cf, opts);
        out.id = case_id_for(cf.spec, cfg);

        std::optional<ReportCache> cache;
        if (!opts.no_cache)
            cache.emplace(resolve_cache_dir(opts.cache_dir));
        if (cache) {
            if (std::optional<json> hit = cache->lookup(out.id, cfg)) {
                out.record = std::move(*hit);
                out.cached = true;
            }
        }
        if (!out.cached) {
            CaseVerdict cv = run_case(cf.spec, cfg);
            out.record = build_report_json(cv, out.label);
            if (cache) cache->store(out.id, out.record);
        }
        out.ok = true;
        out.checks_pass = out.record["summary"]["fail"].get<int>() == 0;
        out.expect_mismatches = check_expectations(cf, out.record);
    } catch (const parse_error& e) {
        out.error = e.what();
        out.error_code = kExitInputError;
    } catch (const malformed_input& e) {
        out.error = std::string(e.what());
        out.error_code = kExitInputError;
    } catch (const resource_limit& e) {
        out.error = e.what();
        out.error_code = kExitResource;
    } catch (const error& e) {
        out.error = e.what();
        out.error_code = kExitCheckFailure;
    } catch (const std::exception& e) {
        out.error = std::string("invalid input: ") + e.what();
        out.error_code = kExitInputError;
    }
    out.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    return out;
}

void print_case_human(const CaseRun& run) {
    const json& rep = run.record["report"];
    std::cout << "case " << run.id.substr(0, 12) << "  " << run.label
              << "  [regime " << rep["regime"].get<std::string>() << "]"
              << (run.cached ? "  (cached)" : "") << "\n";
    auto opt = [&](const char* k) {
        return rep[k].is_null() ? std::string("-") : rep[k].dump();
    };
    std::cout << "  d=" << rep["d"] << " depth=" << rep["depth"]
              << " reg=" << opt("reg") << " reg1=" << opt("reg1")
              << " h0=" << rep["h0"] << " B=" << opt("B") << " r=" << rep["r"]
              << " postulation=" << rep["postulation"] << "\n";
    std::cout << "  e = " << rep["e"].dump() << "   xi = " << rep["xi"].dump()
              << "\n";
    if (!rep["flags"].empty())
        std::cout << "  flags: " << rep["flags"].dump() << "\n";

    std::cout << "  ledger:\n";
    for (const auto& [name, entry] : run.record["ledger"].items()) {
        if (entry["applicable"].get<bool>()) {
            BigInt v = BigInt::from_decimal(entry["value"].get<std::string>());
            std::cout << "    " << name << " = " << format_bound(v) << "\n";
        } else {
            std::cout << "    " << name << ": inapplicable ("
                      << entry["reason"].get<std::string>() << ")\n";
        }
    }
    const json& sum = run.record["summary"];
    std::cout << "  checks: " << sum["pass"] << " pass, " << sum["fail"]
              << " fail, " << sum["inapplicable"] << " inapplicable, "
              << sum["uncertified"] << " uncertified\n";
    for (const json& c : run.record["checks"]) {
        std::string st = c["status"].get<std::string>();
        if (st == "fail")
            std::cout << "  FAIL " << c["name"].get<std::string>() << ": lhs "
                      << c["lhs"].get<std::string>() << " vs rhs "
                      << c["rhs"].get<std::string>() << "\n";
    }
    for (const std::string& m : run.expect_mismatches)
        std::cout << "  EXPECT MISMATCH: " << m << "\n";
    std::cout << "  time: " << run.ms << " ms\n";
}

int cmd_analyze(const std::string& path, const std::string& json_out,
                const CommonOpts& opts) {
    CaseRun run = run_one_case(path, opts);
    if (!run.error.empty()) {
        std::cerr << "error: " << run.error << "\n";
        return run.error_code;
    }
    if (json_out == "-") {
        // bare record on stdout, human summary suppressed
        std::cout << run.record.dump(2) << "\n";
    } else {
        print_case_human(run);
        std::string target = json_out.empty() ? path + ".report.json" : json_out;
        std::ofstream out(target, std::ios::binary);
        out << run.record.dump(2) << "\n";
        std::cout << "  record: " << target << "\n";
    }
    if (!run.checks_pass || !run.expect_mismatches.empty())
        return kExitCheckFailure;
    return kExitOk;
}

std::vector<std::string> collect_case_files(const std::vector<std::string>& args) {
    std::vector<std::string> files;
    for (const std::string& a : args) {
        if (fs::is_directory(a)) {
            for (const auto& ent : fs::directory_iterator(a))
                if (ent.path().extension() == ".case")
                    files.push_back(ent.path().string());
        } else {
            files.push_back(a);
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

int cmd_verify(const std::vector<std::string>& paths, int jobs,
               const std::string& out_path, const CommonOpts& opts) {
    std::vector<std::string> files = collect_case_files(paths);
    if (files.empty()) {
        std::cerr << "error: no case files found\n";
        return kExitInputError;
    }
    std::vector<CaseRun> runs(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size()) break;
            runs[i] = run_one_case(files[i], opts);
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::sort(runs.begin(), runs.end(), [](const CaseRun& a, const CaseRun& b) {
        return a.id != b.id ? a.id < b.id : a.path < b.path;
    });

    int fails = 0, input_errors = 0, resources = 0;
    for (const CaseRun& run : runs) {
        if (!run.error.empty()) {
            if (run.error_code == kExitResource) {
                ++resources;
                std::cout << "RESOURCE " << run.path << ": " << run.error << "\n";
            } else {
                ++input_errors;
                std::cout << "ERROR " << run.path << ": " << run.error << "\n";
            }
            continue;
        }
        bool ok = run.checks_pass && run.expect_mismatches.empty();
        if (!ok) ++fails;
        std::cout << (ok ? "PASS " : "FAIL ") << run.label << " ("
                  << run.id.substr(0, 12) << ")";
        if (!run.checks_pass)
            std::cout << " failing checks: " << run.record["summary"]["fail"];
        for (const std::string& m : run.expect_mismatches) std::cout << " " << m;
        std::cout << "\n";
    }
    std::cout << runs.size() << " cases: " << (runs.size() - fails - input_errors - resources)
              << " pass, " << fails << " fail, " << input_errors << " input errors, "
              << resources << " resource-capped\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        for (const CaseRun& run : runs)
            if (run.ok) out << run.record.dump() << "\n";
    }
    if (fails) return kExitCheckFailure;
    if (input_errors) return kExitInputError;
    if (resources) return kExitResource;
    return kExitOk;
}

std::vector<long long> parse_range(const std::string& s) {
    std::size_t dots = s.find("..");
    if (dots == std::string::npos) return {std::stoll(s)};
    long long a = std::stoll(s.substr(0, dots));
    long long b = std::stoll(s.substr(dots + 2));
    std::vector<long long> out;
    for (long long v = a; v <= b; ++v) out.push_back(v);
    return out;
}

int cmd_bounds(const std::string& ds, const std::string& ts,
               const std::string& rs, const std::string& xis,
               const std::vector<long long>& e, long long delta_prime,
               bool table) {
    std::vector<long long> dv = parse_range(ds), tv = parse_range(ts),
                           rv = parse_range(rs), xv = parse_range(xis);
    struct Row {
        long long d, t, r, xi;
        BoundLedger led;
    };
    std::vector<Row> rows;
    for (long long d : dv)
        for (long long t : tv)
            for (long long r : rv)
                for (long long xi : xv) {
                    if (t > d || d < 1 || t < 0 || r < 0 || xi < 1) continue;
                    BoundInputs in;
                    in.d = static_cast<int>(d);
                    in.t = static_cast<int>(t);
                    in.r = r;
                    in.delta_prime = delta_prime;
                    if (!e.empty()) {
                        in.e = e;
                        in.xi = xi_values(e);
                        in.xi.resize(static_cast<std::size_t>(d) + 1,
                                     in.xi.empty() ? xi : in.xi.back());
                    } else {
                        in.xi.assign(static_cast<std::size_t>(d) + 1, xi);
                    }
                    rows.push_back({d, t, r, xi, build_ledger(in)});
                }
    if (!table) {
        for (const Row& row : rows) {
            std::cout << "d=" << row.d << " t=" << row.t << " r=" << row.r
                      << " xi=" << row.xi << "\n";
            for (const LedgerEntry& le : row.led.entries) {
                if (le.applicable)
                    std::cout << "  " << le.name << " = " << format_bound(le.value)
                              << "\n";
                else
                    std::cout << "  " << le.name << ": inapplicable ("
                              << le.reason << ")\n";
            }
        }
        return kExitOk;
    }
    // union of entry names across the grid, first-seen order
    std::vector<std::string> names;
    for (const Row& row : rows)
        for (const LedgerEntry& le : row.led.entries)
            if (std::find(names.begin(), names.end(), le.name) == names.end())
                names.push_back(le.name);
    std::cout << "d,t,r,xi";
    for (const std::string& n : names) std::cout << "," << n;
    std::cout << "\n";
    for (const Row& row : rows) {
        std::cout << row.d << "," << row.t << "," << row.r << "," << row.xi;
        for (const std::string& n : names) {
            const LedgerEntry* le = row.led.find(n);
            std::cout << ","
                      << (le && le->applicable ? le->value.to_decimal()
                                               : std::string("NA"));
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_fuzz(const FuzzParams& params, const std::string& repro_dir,
             const CommonOpts& opts) {
    EngineConfig cfg;
    if (opts.primes.size() == 2) {
        cfg.primes[0] = opts.primes[0];
        cfg.primes[1] = opts.primes[1];
    }
    FuzzResult res = fuzz(params, cfg);
    std::cout << "fuzz: " << res.analyzed << " analyzed, " << res.skipped
              << " skipped, " << res.resource_capped << " resource-capped, "
              << res.failures.size() << " failures\n";
    for (const FuzzGroupSummary& g : res.finiteness)
        std::cout << "  d=" << g.d << " t=" << g.t << ": "
                  << g.distinct_functions
                  << " distinct Hilbert-Samuel functions, log2(bound) = "
                  << g.log2_enumeration_bound
                  << (g.within_bound ? " (within bound)" : " (EXCEEDS bound)")
                  << "\n";
    if (!res.failures.empty() && !repro_dir.empty()) {
        fs::create_directories(repro_dir);
        int idx = 0;
        for (const FuzzFailure& f : res.failures) {
            CaseFile cf;
            cf.spec = f.spec;
            cf.label = "fuzz_repro_" + std::to_string(idx);
            std::string path =
                (fs::path(repro_dir) / (cf.label + ".case")).string();
            std::ofstream out(path, std::ios::binary);
            out << emit_case_text(cf);
            std::cout << "  reproducer: " << path;
            for (const CheckRecord& c : f.failing)
                std::cout << "  [" << c.name << "]";
            std::cout << "\n";
            ++idx;
        }
    }
    bool within = true;
    for (const FuzzGroupSummary& g : res.finiteness) within &= g.within_bound;
    return res.failures.empty() && within ? kExitOk : kExitCheckFailure;
}

struct BuiltinCase {
    std::string label;
    FiltrationSpec spec;
    std::map<std::string, long long> expect;
};

std::vector<BuiltinCase> builtin_examples() {
    std::vector<BuiltinCase> out;
    // family A: K[x,y]/(x^2, x y^s), the stable-ideal family with reg = s
    for (int s = 1; s <= 10; ++s) {
        BuiltinCase c;
        c.label = "exA_s" + std::to_string(s);
        c.spec.ring.n = 2;
        c.spec.Q = minimalize(2, {Monomial({2, 0}), Monomial({1, s})});
        c.spec.J = MonomialIdeal::maximal(2);
        c.spec.initial = {MonomialIdeal::unit(2)};
        c.expect = {{"reg", s},  {"e0", 1},   {"e1", -s},       {"h0", s},
                    {"B", 2},    {"depth", 0}, {"dim", 1},      {"r", 0},
                    {"postulation", s}};
        out.push_back(std::move(c));
    }
    // family B: K[x_1..x_{d+1}] / x_1 (x_1, x_2, ..., x_d, x_{d+1}^s)
    for (int d = 1; d <= 3; ++d) {
        for (int s = 1; s <= 4; ++s) {
            BuiltinCase c;
            c.label = "exB_d" + std::to_string(d) + "_s" + std::to_string(s);
            int n = d + 1;
            std::vector<Monomial> gens;
            {
                std::vector<int> e(n, 0);
                e[0] = 2;
                gens.emplace_back(e);
            }
            for (int i = 1; i < d; ++i) {
                std::vector<int> e(n, 0);
                e[0] = 1;
                e[static_cast<std::size_t>(i)] = 1;
                gens.emplace_back(e);
            }
            {
                std::vector<int> e(n, 0);
                e[0] = 1;
                e[static_cast<std::size_t>(d)] = s;
                gens.emplace_back(e);
            }
            c.spec.ring.n = n;
            c.spec.Q = minimalize(n, std::move(gens));
            c.spec.J = MonomialIdeal::maximal(n);
            c.spec.initial = {MonomialIdeal::unit(n)};
            c.expect = {{"dim", d}, {"depth", 0}, {"e0", 1}, {"h0", s}};
            for (int i = 1; i < d; ++i) c.expect["e" + std::to_string(i)] = 0;
            c.expect["e" + std::to_string(d)] = (d % 2) ? -s : s;
            out.push_back(std::move(c));
        }
    }
    return out;
}

int cmd_paper_examples(const CommonOpts& opts) {
    int failures = 0;
    for (const BuiltinCase& bc : builtin_examples()) {
        auto t0 = std::chrono::steady_clock::now();
        EngineConfig cfg;
        if (opts.seed) cfg.seed = *opts.seed;
        CaseVerdict cv = run_case(bc.spec, cfg);
        json record = build_report_json(cv, bc.label);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        CaseFile cf;
        cf.spec = bc.spec;
        cf.expect = bc.expect;
        std::vector<std::string> bad = check_expectations(cf, record);
        bool ok = bad.empty() && cv.verdict.all_passing();
        if (!ok) ++failures;
        const json& rep = record["report"];
        std::cout << (ok ? "PASS " : "FAIL ") << bc.label << ": reg="
                  << (rep["reg"].is_null() ? std::string("-") : rep["reg"].dump())
                  << " depth=" << rep["depth"] << " e=" << rep["e"].dump()
                  << " h0=" << rep["h0"] << " B=" << rep["B"].dump() << " ("
                  << static_cast<int>(ms) << " ms)\n";
        for (const std::string& m : bad) std::cout << "    " << m << "\n";
    }
    return failures ? kExitCheckFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and bound verification for monomial-presented modules"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_option("--cache-dir", opts.cache_dir,
                   "cache directory (default: $HILBERTFORGE_CACHE or .hilbertforge-cache)");
    app.add_flag("--no-cache", opts.no_cache, "disable the report cache");
    std::uint64_t seed_val = 0;
    CLI::Option* seed_opt =
        app.add_option("--seed", seed_val, "seed for generic linear forms");
    app.add_option("--primes", opts.primes, "two primes for the linear algebra")
        ->expected(2);

    std::string analyze_path, analyze_json;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one case file");
    analyze->add_option("case", analyze_path, "case file")->required();
    analyze->add_option("--json", analyze_json, "write the JSON record here ('-' = stdout)");

    std::vector<std::string> verify_paths;
    int verify_jobs = 1;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run a corpus of case files");
    verify->add_option("paths", verify_paths, "case files or directories")->required();
    verify->add_option("--jobs", verify_jobs, "worker threads");
    verify->add_option("--out", verify_out, "write JSON-lines records here");

    std::string b_d, b_t = "0", b_r = "0", b_xi = "1";
    std::vector<long long> b_e;
    long long b_delta = 0;
    bool b_table = false;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the bound ledger");
    bounds->add_option("--d", b_d, "dimension (value or a..b)")->required();
    bounds->add_option("--t", b_t, "depth (value or a..b)");
    bounds->add_option("--r", b_r, "reduction number (value or a..b)");
    bounds->add_option("--xi", b_xi, "xi (value or a..b)");
    bounds->add_option("--e", b_e, "explicit coefficients e_0..e_d");
    bounds->add_option("--delta-prime", b_delta, "max generating degree, clamped at 0");
    bounds->add_flag("--table", b_table, "CSV over the parameter grid");

    FuzzParams fuzz_params;
    std::string fuzz_repro = "fuzz-failures";
    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "randomized verification with shrinking");
    fuzz_cmd->add_option("--count", fuzz_params.count, "cases to analyze");
    fuzz_cmd->add_option("--seed", fuzz_params.seed, "generator seed");
    fuzz_cmd->add_option("--n-max", fuzz_params.n_max, "max variables");
    fuzz_cmd->add_option("--deg-max", fuzz_params.deg_max, "max generator degree");
    fuzz_cmd->add_option("--gen-max", fuzz_params.gen_max, "max generators");
    fuzz_cmd->add_option("--reproducer-dir", fuzz_repro, "where to write reproducers");

    CLI::App* paper = app.add_subcommand("paper-examples",
                                         "run the built-in worked-example suites");
    CLI::App* examples = app.add_subcommand("examples", "alias for paper-examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }
    if (seed_opt->count()) opts.seed = seed_val;

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_path, analyze_json, opts);
        if (verify->parsed()) return cmd_verify(verify_paths, verify_jobs, verify_out, opts);
        if (bounds->parsed())
            return cmd_bounds(b_d, b_t, b_r, b_xi, b_e, std::max(0ll, b_delta), b_table);
        if (fuzz_cmd->parsed()) return cmd_fuzz(fuzz_params, fuzz_repro, opts);
        if (paper->parsed() || examples->parsed()) return cmd_paper_examples(opts);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const malformed_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const resource_limit& e) {
        std::cerr << "resource ceiling: " << e.what() << "\n";
        return kExitResource;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
