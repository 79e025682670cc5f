#include "fimod/corpus.hpp"
#include "fimod/errors.hpp"
#include "fimod/h0.hpp"
#include "fimod/homology.hpp"
#include "fimod/json_io.hpp"
#include "fimod/shift.hpp"
#include "fimod/snf.hpp"
#include "fimod/torsion.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace fimod;

namespace {

struct OutputOptions {
    bool table = false;
    std::string out_path;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("FIMOD_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1;
}

Json level_row(const TruncatedFIModule& v, int n) {
    Json row;
    row["level"] = n;
    Json per_object = Json::array();
    for (std::size_t o = 0; o < v.coeff.n_objects(); ++o) {
        Json entry;
        entry["object"] = v.coeff.objects[o];
        entry["gens"] = v.levels[n].comps[o].gens;
        if (!v.levels[n].comps[o].tor.empty()) {
            Json tor = Json::array();
            for (const auto& d : v.levels[n].comps[o].tor)
                tor.push_back(d.get_str());
            entry["torsion"] = std::move(tor);
        }
        per_object.push_back(std::move(entry));
    }
    row["objects"] = std::move(per_object);
    return row;
}

Json dims_table(const TruncatedFIModule& v) {
    Json rows = Json::array();
    for (int n = 0; n <= v.N; ++n)
        rows.push_back(level_row(v, n));
    return rows;
}

void emit(const Json& report, const OutputOptions& opts) {
    if (opts.table) {
        std::cout << "command: " << report.value("command", "?") << "\n";
        for (auto& [key, value] : report.items()) {
            if (key == "command" || key == "engine_version" || key == "timing_ms")
                continue;
            std::cout << "  " << key << ": " << value.dump() << "\n";
        }
    } else {
        std::cout << canonical_dump(report);
    }
}

Json base_report(const std::string& command, std::uint64_t seed) {
    Json j;
    j["command"] = command;
    j["engine_version"] = kEngineVersion;
    j["seed"] = seed;
    return j;
}

void maybe_save(const TruncatedFIModule& v, const OutputOptions& opts) {
    if (!opts.out_path.empty())
        save_module_file(v, opts.out_path);
}

// --- the reproducible check-suite runner -------------------------------------

struct SuiteResult {
    int passed = 0, failed = 0;
    Json lines = Json::array();

    void record(const std::string& name, bool ok) {
        Json line;
        line["check"] = name;
        line["pass"] = ok;
        lines.push_back(std::move(line));
        (ok ? passed : failed)++;
        std::cerr << (ok ? "PASS " : "FAIL ") << name << "\n";
    }
};

void run_check_suite(SuiteResult& suite, std::uint64_t seed) {
    Rng rng(seed);

    // corpus validates (construction re-checks all FI relations)
    {
        bool ok = true;
        try {
            for (const auto& e : corpus())
                verify_fi_invariants(e.module);
        } catch (const Error&) {
            ok = false;
        }
        suite.record("corpus-fi-relations", ok);
    }

    // SNF contract on random matrices
    {
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            std::size_t rows = rng.range(0, 6), cols = rng.range(0, 6);
            Mat m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.at(i, j) = Scalar(rng.range(-9, 9));
            SmithResult s = smith_normal_form(m);
            if (s.u * m * s.v != s.d || det_sign_free(s.u) != 1 || det_sign_free(s.v) != 1)
                ok = false;
        }
        suite.record("smith-normal-form", ok);
    }

    // evaluation well-definedness: two factorization routes agree
    {
        bool ok = true;
        auto v = random_fg_module(rng.next(), CoeffCategory::prime_field(3), 5, 2, 3);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            long n = rng.range(0, 5), m = rng.range(0, n);
            auto all = all_injections(m, n);
            const Injection& phi = all[rng.range(0, static_cast<long>(all.size()) - 1)];
            if (evaluate_injection(v, phi) != evaluate_injection_alt(v, phi))
                ok = false;
        }
        suite.record("evaluation-factorization-independent", ok);
    }

    // functoriality of evaluation
    {
        bool ok = true;
        auto v = random_fg_module(rng.next(), CoeffCategory::prime_field(2), 5, 2, 3);
        for (int trial = 0; trial < 50 && ok; ++trial) {
            long n = rng.range(0, 5), mid = rng.range(0, n), m = rng.range(0, mid);
            auto phis = all_injections(m, mid);
            auto psis = all_injections(mid, n);
            const Injection& phi = phis[rng.range(0, static_cast<long>(phis.size()) - 1)];
            const Injection& psi = psis[rng.range(0, static_cast<long>(psis.size()) - 1)];
            if (evaluate_injection(v, compose_inj(psi, phi)) !=
                compose(evaluate_injection(v, psi), evaluate_injection(v, phi)))
                ok = false;
        }
        suite.record("evaluation-functorial", ok);
    }

    // dual-path homology on a few corpus modules
    {
        bool ok = true;
        for (const char* name : {"free-1-f2", "free-2-f3", "atomic-0-f2"}) {
            const auto& v = corpus_entry(name).module;
            if (!compare_h0_paths(v).matches() || !compare_h1_paths(v).matches())
                ok = false;
        }
        suite.record("dual-path-homology", ok);
    }

    // shift-zero law
    {
        bool ok = true;
        auto v = random_fg_module(rng.next(), CoeffCategory::prime_field(2), 4, 1, 2);
        for (long a = 0; a <= 2 && ok; ++a)
            ok = shift_zero_check(v, a).pass;
        suite.record("homology-shift-zero", ok);
    }

    // adjunction round-trip
    {
        bool ok = true;
        auto c = CoeffCategory::prime_field(3);
        auto A = free_module(c, 2, 0, 4);
        auto V = random_fg_module(rng.next(), c, 3, 2, 2);
        auto tw = t_adjoint(V, 1);
        auto hom = hom_fi(shift(A, 1), V);
        for (const auto& f : hom.gens) {
            FIMorphism g = transpose_to_adjoint(A, 1, f, tw);
            if (transpose_from_adjoint(g, V, tw).maps != f.maps)
                ok = false;
        }
        suite.record("adjunction-round-trip", ok);
    }

    // torsion: atomic module is eventually torsion, radical formula agrees
    {
        bool ok = true;
        auto z = CoeffCategory::integers();
        auto tau = make_theory("ztorsion", z);
        auto atomic = corpus_entry("atomic-0-z").module;
        ok = ok && membership_overline_t(atomic, *tau);
        ok = ok && !membership_overline_t(corpus_entry("free-0-z").module, *tau);
        auto mixed = corpus_entry("mixed-z").module;
        auto r = torsion_subobject(mixed, *tau);
        ok = ok && r.stabilized && r.sub.obj.levels[0] == ModObj::z_module({2}, 0);
        suite.record("torsion-radical", ok);
    }

    // localization triangle
    {
        bool ok = true;
        auto c = CoeffCategory::prime_field(2);
        auto tau = make_theory("zero", c);
        auto v = random_fg_module(rng.next(), c, 4, 1, 2);
        for (long k = 0; k + 1 <= v.N && ok; ++k) {
            auto sk = l_stage(v, *tau, k);
            auto sk1 = l_stage(v, *tau, k + 1);
            ok = sk.has_c &&
                 compose_fi(sk.c, truncate_fi_morphism(sk.l, sk.c.dom.N)) == sk1.l;
        }
        suite.record("localization-triangle", ok);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for truncated FI-modules"};
    app.require_subcommand(1);

    OutputOptions opts;
    std::string in_path, in2_path, coeff_spec = "f2", theory_spec = "zero", class_spec = "that0";
    std::string name;
    long d = 0, a = 1, k = 0, n_arg = 0, trials = 50, kmax = -1, to_level = 0, bound = -1;
    int n_trunc = 4;
    std::uint64_t seed = default_seed();
    std::string object_name;

    auto add_io = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in)
            cmd->add_option("--in", in_path, "input module file")->required();
        cmd->add_option("--out", opts.out_path, "output file");
        cmd->add_flag("--table", opts.table, "human-readable table output");
        cmd->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
        cmd->add_option("--seed", seed, "random seed (FIMOD_SEED overrides the default)");
    };

    auto* cmd_free = app.add_subcommand("free", "build a free module");
    cmd_free->add_option("--d", d, "generator degree")->required();
    cmd_free->add_option("--N", n_trunc, "truncation level")->required();
    cmd_free->add_option("--coeff", coeff_spec, "coefficient spec (f<p>|q|z|discrete:...)");
    cmd_free->add_option("--object", object_name, "generator object (discrete categories)");
    add_io(cmd_free, false);

    auto* cmd_shift = app.add_subcommand("shift", "positive shift of a module");
    cmd_shift->add_option("--a", a, "shift amount")->required();
    add_io(cmd_shift, true);

    auto* cmd_tadj = app.add_subcommand("tadj", "right adjoint of the shift");
    cmd_tadj->add_option("--a", a, "shift amount")->required();
    add_io(cmd_tadj, true);

    auto* cmd_h0 = app.add_subcommand("h0", "degreewise generator homology H0");
    add_io(cmd_h0, true);

    auto* cmd_gen = app.add_subcommand("gen-degree", "generation degree report");
    add_io(cmd_gen, true);

    auto* cmd_hom = app.add_subcommand("homology", "H_a of the subset complex");
    cmd_hom->add_option("--a", a, "homology index")->required();
    add_io(cmd_hom, true);

    auto* cmd_sr = app.add_subcommand("stable-range", "stable presentation range");
    add_io(cmd_sr, true);

    auto* cmd_ext = app.add_subcommand("extend", "extend a module by bounded-subset colimits");
    cmd_ext->add_option("--to", to_level, "target truncation")->required();
    cmd_ext->add_option("--bound", bound, "colimit bound (default: verified stable bound)");
    add_io(cmd_ext, true);

    auto* cmd_tor = app.add_subcommand("torsion-sub", "torsion subobject for a theory");
    cmd_tor->add_option("--theory", theory_spec, "torsion theory")->required();
    add_io(cmd_tor, true);

    auto* cmd_mem = app.add_subcommand("membership", "eventual-torsion membership");
    cmd_mem->add_option("--theory", theory_spec, "torsion theory")->required();
    add_io(cmd_mem, true);

    auto* cmd_fil = app.add_subcommand("filtration", "filtration stage F^n");
    cmd_fil->add_option("--theory", theory_spec, "torsion theory")->required();
    cmd_fil->add_option("--n", n_arg, "filtration index")->required();
    add_io(cmd_fil, true);

    auto* cmd_env = app.add_subcommand("envelope", "levelwise torsion envelope");
    cmd_env->add_option("--theory", theory_spec, "torsion theory")->required();
    add_io(cmd_env, true);

    auto* cmd_lk = app.add_subcommand("lk", "localization stage L^k (or the tower)");
    cmd_lk->add_option("--theory", theory_spec, "torsion theory")->required();
    cmd_lk->add_option("--k", k, "stage index")->required();
    cmd_lk->add_option("--kmax", kmax, "also report the tower up to kmax");
    add_io(cmd_lk, true);

    auto* cmd_cc = app.add_subcommand("closed-check", "randomized closedness check");
    cmd_cc->add_option("--theory", theory_spec, "torsion theory")->required();
    cmd_cc->add_option("--class", class_spec, "that0 | that:<a> | that-hat | t-tilde");
    cmd_cc->add_option("--trials", trials, "number of sampled maps");
    add_io(cmd_cc, true);

    auto* cmd_check = app.add_subcommand("check", "run the reproducible invariant suite");
    std::string suite_name = "all";
    cmd_check->add_option("--suite", suite_name, "suite selector (all)");
    add_io(cmd_check, false);

    auto* cmd_corpus = app.add_subcommand("corpus", "list or export the example corpus");
    cmd_corpus->add_option("--name", name, "entry to export");
    add_io(cmd_corpus, false);

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        Json report;
        if (*cmd_free) {
            CoeffCategory c = parse_coeff_spec(coeff_spec);
            std::size_t object = object_name.empty() ? 0 : c.object_index(object_name);
            TruncatedFIModule v = free_module(c, d, object, n_trunc);
            report = base_report("free", seed);
            report["dims"] = dims_table(v);
            maybe_save(v, opts);
        } else if (*cmd_shift) {
            TruncatedFIModule v = load_module_file(in_path);
            TruncatedFIModule s = shift(v, a);
            report = base_report("shift", seed);
            report["a"] = a;
            report["dims"] = dims_table(s);
            maybe_save(s, opts);
        } else if (*cmd_tadj) {
            TruncatedFIModule v = load_module_file(in_path);
            TAdjointResult tv = t_adjoint(v, a);
            report = base_report("tadj", seed);
            report["a"] = a;
            report["dims"] = dims_table(tv.obj);
            maybe_save(tv.obj, opts);
        } else if (*cmd_h0) {
            TruncatedFIModule v = load_module_file(in_path);
            FIQuotient h = h0(v);
            report = base_report("h0", seed);
            report["dims"] = dims_table(h.obj);
            maybe_save(h.obj, opts);
        } else if (*cmd_gen) {
            TruncatedFIModule v = load_module_file(in_path);
            GenerationReport r = generation_degree(v);
            report = base_report("gen-degree", seed);
            report["gen_degree"] = r.degree_str();
            report["gr_finitely_generated"] = r.gr_finitely_generated;
            report["window"] = r.window;
            report["h0_level_dims"] = r.h0_level_dims;
        } else if (*cmd_hom) {
            TruncatedFIModule v = load_module_file(in_path);
            TruncatedFIModule h = homology_a(v, a);
            report = base_report("homology", seed);
            report["a"] = a;
            report["dims"] = dims_table(h);
            maybe_save(h, opts);
        } else if (*cmd_sr) {
            TruncatedFIModule v = load_module_file(in_path);
            StableRangeReport r = stable_range(v);
            report = base_report("stable-range", seed);
            report["exceeds_truncation"] = r.exceeds_truncation;
            if (!r.exceeds_truncation) {
                report["n_bound"] = r.n_bound;
                report["n_min"] = r.n_min;
                report["verified"] = r.verified;
            }
            report["h0_dims"] = r.h0_dims;
            report["h1_dims"] = r.h1_dims;
        } else if (*cmd_ext) {
            TruncatedFIModule v = load_module_file(in_path);
            long use_bound = bound;
            if (use_bound < 0) {
                StableRangeReport r = stable_range(v);
                if (r.exceeds_truncation || !r.verified)
                    throw TruncationError("no verified stable bound inside the window");
                use_bound = r.n_bound;
            }
            TruncatedFIModule big = extend(v, static_cast<int>(to_level), use_bound);
            report = base_report("extend", seed);
            report["bound"] = use_bound;
            report["dims"] = dims_table(big);
            maybe_save(big, opts);
        } else if (*cmd_tor) {
            TruncatedFIModule v = load_module_file(in_path);
            auto tau = make_theory(theory_spec, v.coeff);
            TorsionSubReport r = torsion_subobject(v, *tau);
            report = base_report("torsion-sub", seed);
            report["theory"] = tau->name();
            report["stabilized"] = r.stabilized;
            report["stage_dims"] = r.stage_dims;
            if (r.stabilized) {
                report["stabilized_at"] = r.stabilized_at;
                report["certificate_level"] = r.certificate_level;
                report["dims"] = dims_table(r.sub.obj);
                maybe_save(r.sub.obj, opts);
            } else {
                emit(report, opts);
                throw TruncationError("torsion chain did not stabilize inside the window");
            }
        } else if (*cmd_mem) {
            TruncatedFIModule v = load_module_file(in_path);
            auto tau = make_theory(theory_spec, v.coeff);
            report = base_report("membership", seed);
            report["theory"] = tau->name();
            report["member"] = membership_overline_t(v, *tau);
            TailReport tail = torsion_tail(v, *tau);
            report["tail_member"] = tail.member;
            if (tail.member)
                report["tail_from_level"] = tail.from_level;
        } else if (*cmd_fil) {
            TruncatedFIModule v = load_module_file(in_path);
            auto tau = make_theory(theory_spec, v.coeff);
            FISubObject f = filtration_f(v, *tau, n_arg);
            report = base_report("filtration", seed);
            report["theory"] = tau->name();
            report["n"] = n_arg;
            report["dims"] = dims_table(f.obj);
            maybe_save(f.obj, opts);
        } else if (*cmd_env) {
            TruncatedFIModule v = load_module_file(in_path);
            auto tau = make_theory(theory_spec, v.coeff);
            EnvelopeResult e = envelope_fi(v, *tau);
            report = base_report("envelope", seed);
            report["theory"] = tau->name();
            report["dims"] = dims_table(e.obj);
            maybe_save(e.obj, opts);
        } else if (*cmd_lk) {
            TruncatedFIModule v = load_module_file(in_path);
            auto tau = make_theory(theory_spec, v.coeff);
            report = base_report("lk", seed);
            report["theory"] = tau->name();
            report["k"] = k;
            LStage stage = l_stage(v, *tau, k);
            report["dims"] = dims_table(stage.obj);
            if (stage.has_c) {
                LStage next = l_stage(v, *tau, k + 1);
                report["triangle_holds"] =
                    compose_fi(stage.c, truncate_fi_morphism(stage.l, stage.c.dom.N)) == next.l;
            }
            if (kmax >= 0) {
                LTowerReport tower = l_truncated(v, *tau, kmax);
                report["tower_stage_dims"] = tower.stage_dims;
                report["tower_c_is_iso"] = tower.c_is_iso;
                report["tower_stabilized_from"] = tower.stabilized_from;
            }
            maybe_save(stage.obj, opts);
        } else if (*cmd_cc) {
            TruncatedFIModule v = load_module_file(in_path);
            auto tau = make_theory(theory_spec, v.coeff);
            ClosedCheckSpec spec;
            if (class_spec == "that0") {
                spec.kind = ClosedCheckSpec::Kind::ThatA;
                spec.a = 0;
            } else if (class_spec.rfind("that:", 0) == 0) {
                spec.kind = ClosedCheckSpec::Kind::ThatA;
                spec.a = std::stol(class_spec.substr(5));
            } else if (class_spec == "that-hat") {
                spec.kind = ClosedCheckSpec::Kind::That;
            } else if (class_spec == "t-tilde") {
                spec.kind = ClosedCheckSpec::Kind::Ttilde;
            } else {
                throw ValidationError("unknown class spec '" + class_spec + "'");
            }
            ClosedVerdict verdict = is_closed(v, *tau, spec, seed, trials);
            report = base_report("closed-check", seed);
            report["theory"] = tau->name();
            report["class"] = class_spec;
            report["trials"] = verdict.trials_run;
            report["pass"] = verdict.pass;
            report["note"] = verdict.note;
            if (!verdict.pass)
                report["counterexample_trial"] = verdict.counterexample_trial;
        } else if (*cmd_check) {
            if (suite_name != "all")
                throw ValidationError("unknown suite '" + suite_name + "'");
            SuiteResult suite;
            run_check_suite(suite, seed);
            report = base_report("check", seed);
            report["passed"] = suite.passed;
            report["failed"] = suite.failed;
            report["checks"] = suite.lines;
            emit(report, opts);
            return suite.failed == 0 ? 0 : 1;
        } else if (*cmd_corpus) {
            report = base_report("corpus", seed);
            if (name.empty()) {
                Json list = Json::array();
                for (const auto& e : corpus()) {
                    Json item;
                    item["name"] = e.name;
                    item["doc"] = e.doc;
                    item["N"] = e.module.N;
                    list.push_back(std::move(item));
                }
                report["entries"] = std::move(list);
            } else {
                const CorpusEntry& e = corpus_entry(name);
                report["name"] = e.name;
                report["doc"] = e.doc;
                report["dims"] = dims_table(e.module);
                maybe_save(e.module, opts);
            }
        }
        const auto t1 = std::chrono::steady_clock::now();
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        emit(report, opts);
        return 0;
    } catch (const Error& e) {
        Json err;
        err["error"]["code"] = e.code();
        err["error"]["message"] = e.what();
        std::cerr << canonical_dump(err);
        if (e.code() == "validation")
            return 2;
        if (e.code() == "truncation-exceeded")
            return 3;
        if (e.code() == "capability")
            return 4;
        if (e.code() == "plugin-contract")
            return 5;
        return 6;
    } catch (const std::exception& e) {
        Json err;
        err["error"]["code"] = "internal";
        err["error"]["message"] = e.what();
        std::cerr << canonical_dump(err);
        return 6;
    }
}
