// Command-line front end; talks to the library exclusively through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grasscoh.h"

namespace {

int finish(gc_status st, char** payload) {
    if (st == GC_OK) {
        std::cout << *payload << "\n";
        gc_string_free(*payload);
        return 0;
    }
    std::cerr << "error: " << gc_last_error() << "\n";
    return static_cast<int>(st);
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct ContextArgs {
    int m = 0, n = 0, k = 0;

    void attach(CLI::App* cmd, bool with_m = true) {
        if (with_m) cmd->add_option("-m", m, "sphere dimension (0 = bare Grassmannian)");
        cmd->add_option("-n", n, "Grassmannian parameter n")->required();
        cmd->add_option("-k", k, "Grassmannian parameter k")->required();
    }
};

// RAII holder so every exit path releases the context.
struct ContextHandle {
    gc_context* ctx = nullptr;
    ~ContextHandle() { gc_context_destroy(ctx); }

    int open(const ContextArgs& a) {
        gc_status st = gc_context_create(a.m, a.n, a.k, &ctx);
        if (st != GC_OK) std::cerr << "error: " << gc_last_error() << "\n";
        return static_cast<int>(st);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert-calculus toolkit for Grassmannian and "
                 "sphere-times-Grassmannian cohomology"};
    app.require_subcommand(1);
    unsigned long seed = 0;
    app.add_option("--seed", seed, "seed for randomized property-test replay");

    int exit_code = 0;
    auto run = [&](gc_status st, char** payload) { exit_code = finish(st, payload); };

    // betti n k
    int bn = 0, bk = 0;
    auto* betti = app.add_subcommand("betti", "Betti numbers of CG_{n,k}");
    betti->add_option("n", bn)->required();
    betti->add_option("k", bk)->required();
    betti->callback([&] {
        char* out = nullptr;
        run(gc_betti(bn, bk, &out), &out);
    });

    // reduce -m M -n N -k K <expr>
    ContextArgs rctx;
    std::string rexpr;
    auto* reduce = app.add_subcommand("reduce", "reduce an expression to canonical form");
    rctx.attach(reduce);
    reduce->add_option("expr", rexpr, "ring expression")->required();
    reduce->callback([&] {
        ContextHandle h;
        if ((exit_code = h.open(rctx))) return;
        char* out = nullptr;
        run(gc_reduce(h.ctx, rexpr.c_str(), &out), &out);
    });

    // mul -m M -n N -k K <a> <b>
    ContextArgs mctx;
    std::string ma, mb;
    auto* mul = app.add_subcommand("mul", "multiply two expressions");
    mctx.attach(mul);
    mul->add_option("a", ma)->required();
    mul->add_option("b", mb)->required();
    mul->callback([&] {
        ContextHandle h;
        if ((exit_code = h.open(mctx))) return;
        char* out = nullptr;
        run(gc_mul(h.ctx, ma.c_str(), mb.c_str(), &out), &out);
    });

    // endo-check / classify -m M -n N -k K <endo.json>
    ContextArgs ectx, cctx;
    std::string epath, cpath;
    auto* echeck = app.add_subcommand("endo-check", "well-definedness of an endomorphism");
    ectx.attach(echeck);
    echeck->add_option("endo", epath, "endomorphism JSON file ('-' for stdin)")->required();
    echeck->callback([&] {
        ContextHandle h;
        if ((exit_code = h.open(ectx))) return;
        char* out = nullptr;
        run(gc_endo_check(h.ctx, slurp(epath).c_str(), &out), &out);
    });
    auto* classify = app.add_subcommand("classify", "classify an endomorphism");
    cctx.attach(classify);
    classify->add_option("endo", cpath, "endomorphism JSON file ('-' for stdin)")->required();
    classify->callback([&] {
        ContextHandle h;
        if ((exit_code = h.open(cctx))) return;
        char* out = nullptr;
        run(gc_classify(h.ctx, slurp(cpath).c_str(), &out), &out);
    });

    // adams / complement -m M -n N -k K --lambda --mu
    ContextArgs actx, coctx;
    std::string alam = "1", amu = "1", clam = "1", cmu = "1";
    auto* adams = app.add_subcommand("adams", "construct an Adams endomorphism");
    actx.attach(adams);
    adams->add_option("--lambda", alam);
    adams->add_option("--mu", amu);
    adams->callback([&] {
        ContextHandle h;
        if ((exit_code = h.open(actx))) return;
        char* out = nullptr;
        run(gc_adams(h.ctx, alam.c_str(), amu.c_str(), &out), &out);
    });
    auto* compl_ = app.add_subcommand("complement", "construct a complement endomorphism");
    coctx.attach(compl_);
    compl_->add_option("--lambda", clam);
    compl_->add_option("--mu", cmu);
    compl_->callback([&] {
        ContextHandle h;
        if ((exit_code = h.open(coctx))) return;
        char* out = nullptr;
        run(gc_complement(h.ctx, clam.c_str(), cmu.c_str(), &out), &out);
    });

    // derivations [n k drop] | --sweep nmax [--csv] [--threads]
    int dn = 0, dk = 0, ddrop = 0, dsweep = 0, dthreads = 0;
    bool dcsv = false;
    auto* deriv = app.add_subcommand("derivations", "degree-lowering derivation spaces");
    deriv->add_option("n", dn);
    deriv->add_option("k", dk);
    deriv->add_option("drop", ddrop);
    deriv->add_option("--sweep", dsweep, "sweep all contexts with n <= nmax");
    deriv->add_option("--threads", dthreads, "worker count (GRASSCOH_THREADS caps)");
    deriv->add_flag("--csv", dcsv);
    deriv->callback([&] {
        char* out = nullptr;
        if (dsweep > 0) {
            run(gc_derivations_sweep(dsweep, dthreads, dcsv ? 1 : 0, &out), &out);
        } else if (dn > 0 && dk > 0 && ddrop > 0) {
            run(gc_derivation_space(dn, dk, ddrop, &out), &out);
        } else {
            std::cerr << "error: give either n k drop or --sweep nmax\n";
            exit_code = 2;
        }
    });

    // extension -m M -n N -k K --lambda | --sweep nmax
    ContextArgs xctx;
    std::string xlam = "1";
    int xsweep = 0, xthreads = 0;
    bool xcsv = false;
    auto* ext = app.add_subcommand("extension", "u-correction extension nullspaces");
    ext->add_option("-m", xctx.m);
    ext->add_option("-n", xctx.n);
    ext->add_option("-k", xctx.k);
    ext->add_option("--lambda", xlam);
    ext->add_option("--sweep", xsweep, "sweep all contexts with n <= nmax");
    ext->add_option("--threads", xthreads);
    ext->add_flag("--csv", xcsv);
    ext->callback([&] {
        char* out = nullptr;
        if (xsweep > 0) {
            run(gc_extension_sweep(xsweep, xthreads, xcsv ? 1 : 0, &out), &out);
        } else if (xctx.m > 0 && xctx.n > 0 && xctx.k > 0) {
            run(gc_extension_nullspace(xctx.m, xctx.n, xctx.k, xlam.c_str(), &out), &out);
        } else {
            std::cerr << "error: give -m -n -k (and optionally --lambda) or --sweep nmax\n";
            exit_code = 2;
        }
    });

    // lefschetz (--closed | --trace)
    ContextArgs lctx;
    std::string llam = "1", lmu = "1", llam1 = "1", lmu1 = "1", lf, lg;
    bool lclosed = false, ltrace = false, lufam = false;
    auto* lef = app.add_subcommand("lefschetz", "Lefschetz coincidence numbers");
    lctx.attach(lef);
    auto* fclosed = lef->add_flag("--closed", lclosed, "use the printed closed forms");
    lef->add_flag("--trace", ltrace, "use the alternating trace")->excludes(fclosed);
    lef->add_option("--lambda", llam);
    lef->add_option("--mu", lmu);
    lef->add_option("--lambda1", llam1);
    lef->add_option("--mu1", lmu1);
    lef->add_flag("--u-family", lufam, "collapsed d_0 closed form");
    lef->add_option("--f", lf, "endomorphism JSON file for f (trace mode)");
    lef->add_option("--g", lg, "endomorphism JSON file for g (trace mode)");
    lef->callback([&] {
        char* out = nullptr;
        if (lclosed == ltrace) {
            std::cerr << "error: choose exactly one of --closed or --trace\n";
            exit_code = 2;
            return;
        }
        if (lclosed) {
            run(gc_lefschetz_closed(lctx.m, lctx.n, lctx.k, llam.c_str(), lmu.c_str(),
                                    llam1.c_str(), lmu1.c_str(), lufam ? 1 : 0, &out),
                &out);
            return;
        }
        if (lf.empty() || lg.empty()) {
            std::cerr << "error: --trace needs --f and --g endomorphism files\n";
            exit_code = 2;
            return;
        }
        ContextHandle h;
        if ((exit_code = h.open(lctx))) return;
        run(gc_lefschetz_trace(h.ctx, slurp(lf).c_str(), slurp(lg).c_str(), &out), &out);
    });

    // criteria -m M -n N -k K --f <desc.json> --g <desc.json> | --sweep
    ContextArgs crctx;
    std::string crf = "{\"family\":\"adams\",\"lambda\":\"1\",\"mu\":\"1\"}";
    std::string crg = "{\"family\":\"adams\",\"lambda\":\"1\",\"mu\":\"1\"}";
    int crsweep_m = 0, crsweep_n = 0, crthreads = 0;
    bool crcsv = false;
    auto* crit = app.add_subcommand("criteria", "coincidence decision procedure");
    crit->add_option("-m", crctx.m);
    crit->add_option("-n", crctx.n);
    crit->add_option("-k", crctx.k);
    crit->add_option("--f", crf, "family descriptor JSON (inline or @file)");
    crit->add_option("--g", crg, "family descriptor JSON (inline or @file)");
    crit->add_option("--sweep-m", crsweep_m, "sweep m = 1..mmax");
    crit->add_option("--sweep", crsweep_n, "sweep n <= nmax (with --sweep-m)");
    crit->add_option("--threads", crthreads);
    crit->add_flag("--csv", crcsv);
    crit->callback([&] {
        char* out = nullptr;
        if (crsweep_n > 0) {
            int mmax = crsweep_m > 0 ? crsweep_m : 2;
            run(gc_criteria_sweep(mmax, crsweep_n, crthreads, crcsv ? 1 : 0, &out), &out);
            return;
        }
        auto payload = [&](const std::string& s) {
            return s.size() > 1 && s[0] == '@' ? slurp(s.substr(1)) : s;
        };
        run(gc_criteria(crctx.m, crctx.n, crctx.k, payload(crf).c_str(), payload(crg).c_str(),
                        &out),
            &out);
    });

    // certify-lemma n k
    int cln = 0, clk = 0;
    auto* cl = app.add_subcommand("certify-lemma", "nonvanishing certificate for the Betti sum");
    cl->add_option("n", cln)->required();
    cl->add_option("k", clk)->required();
    cl->callback([&] {
        char* out = nullptr;
        run(gc_certify_lemma(cln, clk, &out), &out);
    });

    // fixed-basis m n k degree
    int fm = 0, fn = 0, fk = 0, fdeg = 0;
    auto* fb = app.add_subcommand("fixed-basis", "basis of the theta* fixed subring in one degree");
    fb->add_option("m", fm)->required();
    fb->add_option("n", fn)->required();
    fb->add_option("k", fk)->required();
    fb->add_option("degree", fdeg)->required();
    fb->callback([&] {
        char* out = nullptr;
        run(gc_fixed_basis(fm, fn, fk, fdeg, &out), &out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    (void)seed;
    return exit_code;
}
