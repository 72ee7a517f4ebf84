// Command-line driver: runs relation suites, the PBW independence check, the
// Gauss-factor dump, and a kernel timing table, emitting JSON-lines reports.

#include <CLI11.hpp>

#include "tyv/pbw.hpp"
#include "tyv/acceptance.hpp"

#include <fstream>
#include <iostream>
#include <random>

using namespace tyv;

namespace {

struct RunConfig {
    int n = 2;
    int order = 6;
    int budget = 4;
    int max_level = 8;
    int degree = 2;
    int length_cap = 3;
    int jobs = 0; // 0 -> TYV_JOBS env var or hardware default
    unsigned seed = 1;
    std::string output; // empty -> stdout
};

int emit(const ReportSink& sink, const RunConfig& cfg) {
    if (cfg.output.empty()) {
        sink.write_json_lines(std::cout);
    } else {
        std::ofstream os(cfg.output);
        if (!os) {
            std::cerr << "cannot open output file: " << cfg.output << "\n";
            return 2;
        }
        sink.write_json_lines(os);
    }
    std::cerr << sink.size() - sink.fail_count() << "/" << sink.size()
              << " checks passed\n";
    return sink.all_pass() ? 0 : 1;
}

int require_cfg(bool ok, const std::string& msg) {
    if (!ok) {
        std::cerr << "config error: " << msg << "\n";
        return 2;
    }
    return 0;
}

// Timing table for the normal-form kernel: multiply random elements of
// increasing size and report wall time per product.
int run_bench(const RunConfig& cfg) {
    Algebra A(cfg.n);
    std::mt19937 rng(cfg.seed);
    auto random_element = [&](int terms, int factors) {
        Element e;
        std::uniform_int_distribution<int> idx(1, cfg.n), lvl(1, 3), num(-9, 9);
        for (int t = 0; t < terms; ++t) {
            Element m = Element::one();
            for (int f = 0; f < factors; ++f)
                m = A.mul(m, A.generator(idx(rng), idx(rng), lvl(rng)));
            int c = 0;
            while (c == 0) c = num(rng);
            e.add_scaled(m, Rat(c));
        }
        return e;
    };
    std::cout << "terms_per_factor  word_len  product_terms  millis\n";
    for (int terms : {2, 8, 32}) {
        for (int factors : {2, 3}) {
            Element a = random_element(terms, factors);
            Element b = random_element(terms, factors);
            Stopwatch sw;
            Element p = A.mul(a, b);
            std::cout << terms << "  " << factors << "  " << p.size() << "  "
                      << sw.millis() << "\n";
        }
    }
    return 0;
}

int run_gauss_dump(const RunConfig& cfg) {
    Algebra A(cfg.n);
    MatrixOfSeries S = build_S_matrix(A, cfg.order);
    GaussData g = gauss_decompose(S);
    auto dump = [&](const std::string& name, const TruncatedSeries& s) {
        std::cout << name << ":\n";
        for (const auto& [e, x] : s.coefficients())
            std::cout << "  u^" << e[0] << ": " << A.to_string(x) << "\n";
    };
    for (int i = 1; i <= cfg.n; ++i) dump("d_" + std::to_string(i), g.d[i]);
    for (int i = 1; i <= cfg.n; ++i)
        for (int j = i + 1; j <= cfg.n; ++j) {
            std::string ij = std::to_string(i) + std::to_string(j);
            dump("e_" + ij, g.e(i, j));
            dump("f_" + std::to_string(j) + std::to_string(i), g.f(j, i));
        }
    return 0;
}

int run_pbw(const RunConfig& cfg, bool with_negative_control) {
    Algebra A(cfg.n);
    PbwBasisSpec spec = make_pbw_spec(cfg.n, cfg.degree);
    ReportSink sink;
    RankResult r = rank_check(A, spec, cfg.degree, cfg.length_cap, cfg.degree + 2);
    report_rank_result(r, sink);
    if (with_negative_control) {
        MatrixOfSeries S = build_S_matrix(A, cfg.degree + 2);
        Currents cur = build_currents(gauss_decompose(S));
        Element dep = cur.b_coeff(1, 0) + cur.b_coeff(1, 1);
        RankResult bad =
            rank_check(A, spec, cfg.degree, cfg.length_cap, cfg.degree + 2, {dep});
        Stopwatch sw;
        RelationReport row;
        row.suite = "pbw";
        row.relation = "negative-control-detects-dependency";
        row.pass = bad.rank < bad.monomial_count;
        row.millis = sw.millis();
        sink.add(std::move(row));
    }
    return emit(sink, cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact relation workbench for the reflection-type coideal algebra"};
    app.require_subcommand(1);
    app.fallthrough(); // allow global flags (--jobs/--output/--seed) after subcommands
    RunConfig cfg;
    app.add_option("--jobs", cfg.jobs, "worker threads (default: TYV_JOBS or hw)");
    app.add_option("--output", cfg.output, "JSON-lines report path (default stdout)");
    app.add_option("--seed", cfg.seed, "random seed for fuzz/bench");

    auto* verify = app.add_subcommand("verify", "run one relation suite");
    verify->require_subcommand(1);
    std::string suite_order_note = "series truncation order";
    struct Sub {
        CLI::App* cmd;
        std::function<int()> run;
    };
    std::vector<Sub> subs;
    auto add = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                   std::function<int()> fn) {
        CLI::App* c = parent->add_subcommand(name, desc);
        subs.push_back({c, std::move(fn)});
        return c;
    };

    auto* rtt = add(verify, "rtt", "componentwise commutation oracle", [&] {
        if (int rc = require_cfg(cfg.n >= 1 && cfg.max_level >= 1, "need n>=1, max-level>=1"))
            return rc;
        Algebra A(cfg.n);
        ReportSink sink;
        verify_rtt_components(A, cfg.max_level, sink, cfg.jobs);
        return emit(sink, cfg);
    });
    rtt->add_option("--n", cfg.n, "matrix size");
    rtt->add_option("--max-level", cfg.max_level, "max r+s swept");

    auto* quat = add(verify, "quaternary", "exchange relation for the embedded S", [&] {
        Algebra A(cfg.n);
        ReportSink sink;
        verify_quaternary(A, cfg.budget, sink, cfg.jobs);
        return emit(sink, cfg);
    });
    quat->add_option("--n", cfg.n, "matrix size");
    quat->add_option("--budget", cfg.budget, "max coefficient pair order");

    auto* sym = add(verify, "symmetry", "transpose-reflection symmetry of S", [&] {
        Algebra A(cfg.n);
        EmbeddedS E = build_S(A, cfg.order);
        ReportSink sink;
        verify_symmetry(E, sink, cfg.jobs);
        return emit(sink, cfg);
    });
    sym->add_option("--n", cfg.n, "matrix size");
    sym->add_option("--order", cfg.order, suite_order_note);

    auto* sts = add(verify, "sts", "exchange with the inverse matrix", [&] {
        Algebra A(cfg.n);
        ReportSink sink;
        verify_sts(A, cfg.budget, sink, cfg.jobs);
        return emit(sink, cfg);
    });
    sts->add_option("--n", cfg.n, "matrix size");
    sts->add_option("--budget", cfg.budget, "max coefficient pair order");

    auto* yb = add(verify, "yangbaxter", "R-matrix braid identity at generic points", [&] {
        ReportSink sink;
        verify_yang_baxter(cfg.n, sink);
        return emit(sink, cfg);
    });
    yb->add_option("--n", cfg.n, "matrix size");

    auto* r1 = add(verify, "rank1", "2x2 Gauss-factor relation suite", [&] {
        if (int rc = require_cfg(cfg.budget >= 0, "need budget>=0")) return rc;
        Algebra A(2);
        ReportSink sink;
        verify_rank1_suite(A, cfg.budget, sink, cfg.jobs);
        return emit(sink, cfg);
    });
    r1->add_option("--budget", cfg.budget, "component sweep bound");

    auto* r2 = add(verify, "rank2", "3x3 Gauss-factor relation suite", [&] {
        if (int rc = require_cfg(cfg.budget >= 0, "need budget>=0")) return rc;
        Algebra A(3);
        ReportSink sink;
        verify_rank2_suite(A, cfg.budget, sink, cfg.jobs);
        return emit(sink, cfg);
    });
    r2->add_option("--budget", cfg.budget, "component sweep bound");

    auto* dr = add(verify, "drinfeld", "current-presentation sweep at size n", [&] {
        if (int rc = require_cfg(cfg.order >= cfg.budget + 3,
                                 "order must be >= budget + 3 for exact components"))
            return rc;
        Algebra A(cfg.n);
        ReportSink sink;
        verify_drinfeld(A, cfg.order, cfg.budget, sink);
        return emit(sink, cfg);
    });
    dr->add_option("--n", cfg.n, "matrix size");
    dr->add_option("--order", cfg.order, suite_order_note);
    dr->add_option("--budget", cfg.budget, "component sweep bound");

    auto* mp = add(verify, "maps", "transform-image identities", [&] {
        Algebra A(cfg.n);
        ReportSink sink;
        verify_transforms(A, cfg.budget, sink, cfg.jobs);
        return emit(sink, cfg);
    });
    mp->add_option("--n", cfg.n, "matrix size");
    mp->add_option("--budget", cfg.budget, "component sweep bound");

    auto* sc = add(verify, "serre-claims", "symmetrized triple-bracket claims", [&] {
        Algebra A(3);
        ReportSink sink;
        verify_serre_claims(A, cfg.budget, sink);
        return emit(sink, cfg);
    });
    sc->add_option("--budget", cfg.budget, "component sweep bound");

    auto* gs = app.add_subcommand("gauss", "decompose and print the Gauss factors");
    bool dump = false;
    gs->add_flag("--dump", dump, "print factor series");
    gs->add_option("--n", cfg.n, "matrix size");
    gs->add_option("--order", cfg.order, suite_order_note);
    subs.push_back({gs, [&] { return run_gauss_dump(cfg); }});

    auto* pb = app.add_subcommand("pbw", "ordered-monomial independence check");
    pb->add_option("--n", cfg.n, "matrix size");
    pb->add_option("--degree", cfg.degree, "total degree bound");
    pb->add_option("--cap", cfg.length_cap, "monomial length cap");
    subs.push_back({pb, [&] { return run_pbw(cfg, true); }});

    auto* al = app.add_subcommand("all", "pinned acceptance configuration");
    subs.push_back({al, [&] { return run_acceptance(std::cout, cfg.jobs, cfg.seed); }});

    auto* be = app.add_subcommand("bench", "kernel timing table");
    be->add_option("--n", cfg.n, "matrix size");
    subs.push_back({be, [&] { return run_bench(cfg); }});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }
    for (auto& s : subs)
        if (s.cmd->parsed()) {
            try {
                return s.run();
            } catch (const std::exception& ex) {
                std::cerr << "error: " << ex.what() << "\n";
                return 2;
            }
        }
    return 2;
}
