#include "grasscoh.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "coincidence.hpp"
#include "derivations.hpp"
#include "endo.hpp"
#include "expr.hpp"

using json = nlohmann::ordered_json;
using namespace grasscoh;

struct gc_context {
    int m;  // 0 = bare Grassmannian
    RingContext ring;
    std::optional<ProductContext> prod;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
gc_status guarded(F&& fn) {
    try {
        fn();
        return GC_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return GC_ERR_PARSE;
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return GC_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return GC_ERR_PRECONDITION;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return GC_ERR_PRECONDITION;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GC_ERR_INTERNAL;
    }
}

void emit(char** out, const json& j) { *out = dup_string(j.dump(2)); }

const ProductContext& product_ctx(gc_context* ctx) {
    if (!ctx) throw std::invalid_argument("null context");
    if (!ctx->prod)
        throw std::invalid_argument("operation requires a product context (m >= 1)");
    return *ctx->prod;
}

Rational parse_rat(const char* s) {
    if (!s) throw std::invalid_argument("null rational");
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);  // malformed rationals are parse errors
    }
}

ProductClass parse_class(const ProductContext& ctx, const std::string& text) {
    return elaborate(*parse_expr(text), ctx);
}

GradedEndo parse_endo(const ProductContext& ctx, const char* endo_json) {
    if (!endo_json) throw std::invalid_argument("null endomorphism payload");
    json j = json::parse(endo_json);
    if (!j.contains("c") || !j["c"].is_array() || !j.contains("u"))
        throw std::invalid_argument("endomorphism JSON must have \"c\" array and \"u\"");
    std::vector<ProductClass> images;
    for (const auto& e : j["c"]) images.push_back(parse_class(ctx, e.get<std::string>()));
    ProductClass u_img = parse_class(ctx, j["u"].get<std::string>());
    return GradedEndo(ctx, std::move(images), std::move(u_img));
}

json endo_json_of(const GradedEndo& phi) {
    json j;
    j["c"] = json::array();
    for (const ProductClass& im : phi.c_images()) j["c"].push_back(im.str());
    j["u"] = phi.u_image().str();
    return j;
}

json class_report(const std::string& input, const ProductClass& x) {
    json j;
    j["input"] = input;
    j["class"] = x.str();
    int deg = -1;
    j["homogeneous"] = x.is_homogeneous(&deg);
    if (j["homogeneous"].get<bool>() && deg >= 0) j["degree"] = deg;
    return j;
}

json class_report(const std::string& input, const GrassClass& x) {
    json j;
    j["input"] = input;
    j["class"] = x.str();
    int deg = -1;
    j["homogeneous"] = x.is_homogeneous(&deg);
    if (j["homogeneous"].get<bool>() && deg >= 0) j["degree"] = deg;
    return j;
}

int pick_threads(int requested) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    if (const char* cap = std::getenv("GRASSCOH_THREADS")) {
        int c = std::atoi(cap);
        if (c > 0) t = std::min(t, c);
    }
    return std::max(1, t);
}

// Runs fn(i) for i in [0, count) on a small worker pool. Results must be
// written to preallocated slots so output order is independent of scheduling.
template <class F>
void parallel_for(std::size_t count, int threads, F&& fn) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    };
    std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

std::string csv_of(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

FamilyDescriptor parse_family(const char* text) {
    if (!text) throw std::invalid_argument("null family descriptor");
    json j = json::parse(text);
    FamilyDescriptor d;
    std::string fam = j.value("family", "adams");
    if (fam == "adams") d.family = FamilyDescriptor::Family::adams;
    else if (fam == "complement") d.family = FamilyDescriptor::Family::complement;
    else if (fam == "u_family") d.family = FamilyDescriptor::Family::u_family;
    else throw std::invalid_argument("unknown family: " + fam);
    if (j.contains("lambda")) d.lambda = parse_rational(j["lambda"].get<std::string>());
    if (j.contains("mu")) d.mu = parse_rational(j["mu"].get<std::string>());
    return d;
}

json verdict_json(int m, int n, int k, const CriteriaVerdict& v) {
    json j;
    j["m"] = m;
    j["n"] = n;
    j["k"] = k;
    j["theorem_applied"] = v.theorem_applied;
    j["hypotheses_checked"] = json::array();
    for (const auto& [name, ok] : v.hypotheses_checked)
        j["hypotheses_checked"].push_back({{"name", name}, {"holds", ok}});
    j["conclusion"] = v.coincidence_guaranteed ? "coincidence_guaranteed" : "not_decided";
    j["witnesses"] = json::array();
    for (const Rational& w : v.witnesses) j["witnesses"].push_back(rational_str(w));
    j["L_untwisted"] = rational_str(v.L_untwisted);
    j["L_twisted"] = rational_str(v.L_twisted);
    return j;
}

}  // namespace

extern "C" {

gc_status gc_context_create(int m, int n, int k, gc_context** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output pointer");
        if (m < 0) throw std::invalid_argument("m must be nonnegative");
        RingContext ring(n, k);
        auto* ctx = new gc_context{m, ring, std::nullopt};
        if (m >= 1) ctx->prod = ProductContext(m, ring);
        *out = ctx;
    });
}

void gc_context_destroy(gc_context* ctx) { delete ctx; }

const char* gc_last_error(void) { return g_last_error.c_str(); }

void gc_string_free(char* s) { std::free(s); }

gc_status gc_betti(int n, int k, char** json_out) {
    return guarded([&] {
        RingContext check(n, k);  // validates 0 < k < n
        json j;
        j["n"] = n;
        j["k"] = k;
        j["betti"] = betti(n, k);
        emit(json_out, j);
    });
}

gc_status gc_reduce(gc_context* ctx, const char* expr, char** json_out) {
    return guarded([&] {
        if (!ctx || !expr) throw std::invalid_argument("null argument");
        auto ast = parse_expr(expr);
        if (ctx->prod) {
            emit(json_out, class_report(expr, elaborate(*ast, *ctx->prod)));
        } else {
            emit(json_out, class_report(expr, elaborate_grass(*ast, ctx->ring)));
        }
    });
}

gc_status gc_mul(gc_context* ctx, const char* a, const char* b, char** json_out) {
    return guarded([&] {
        if (!ctx || !a || !b) throw std::invalid_argument("null argument");
        std::string input = std::string("(") + a + ")*(" + b + ")";
        if (ctx->prod) {
            ProductClass x = elaborate(*parse_expr(a), *ctx->prod);
            ProductClass y = elaborate(*parse_expr(b), *ctx->prod);
            emit(json_out, class_report(input, x * y));
        } else {
            GrassClass x = elaborate_grass(*parse_expr(a), ctx->ring);
            GrassClass y = elaborate_grass(*parse_expr(b), ctx->ring);
            emit(json_out, class_report(input, x * y));
        }
    });
}

gc_status gc_endo_check(gc_context* ctx, const char* endo_json, char** json_out) {
    return guarded([&] {
        GradedEndo phi = parse_endo(product_ctx(ctx), endo_json);
        EndoVerdict v = is_well_defined(phi);
        json j;
        j["well_defined"] = v.well_defined;
        if (v.failing_relation) j["failing_relation"] = *v.failing_relation;
        if (v.residue) j["residue"] = v.residue->str();
        emit(json_out, j);
    });
}

gc_status gc_classify(gc_context* ctx, const char* endo_json, char** json_out) {
    return guarded([&] {
        GradedEndo phi = parse_endo(product_ctx(ctx), endo_json);
        Classification c = classify(phi);
        json j;
        j["kind"] = Classification::kind_name(c.kind);
        if (c.lambda) j["lambda"] = rational_str(*c.lambda);
        j["u_kind"] = Classification::u_kind_name(c.u_kind);
        if (c.mu) j["mu"] = rational_str(*c.mu);
        if (c.witness) j["witness"] = *c.witness;
        emit(json_out, j);
    });
}

gc_status gc_adams(gc_context* ctx, const char* lambda, const char* mu, char** json_out) {
    return guarded([&] {
        emit(json_out, endo_json_of(make_adams(product_ctx(ctx), parse_rat(lambda), parse_rat(mu))));
    });
}

gc_status gc_complement(gc_context* ctx, const char* lambda, const char* mu, char** json_out) {
    return guarded([&] {
        emit(json_out,
             endo_json_of(make_complement(product_ctx(ctx), parse_rat(lambda), parse_rat(mu))));
    });
}

namespace {

json derivation_json(const DerivationSpace& ds, int unknowns) {
    json j;
    j["n"] = ds.ctx.n();
    j["k"] = ds.ctx.k();
    j["drop"] = ds.drop;
    j["unknowns"] = unknowns;
    j["rank"] = unknowns - ds.dimension;
    j["dimension"] = ds.dimension;
    j["basis"] = json::array();
    for (const auto& images : ds.basis) {
        json b = json::array();
        for (const GrassClass& g : images) b.push_back(g.str());
        j["basis"].push_back(b);
    }
    return j;
}

int count_unknowns(const RingContext& ctx, int offset) {
    int total = 0;
    for (int j = 1; j <= ctx.k(); ++j) {
        int deg = 2 * j - offset;
        if (deg < 0 || deg % 2 != 0) continue;
        total += static_cast<int>(partitions_in_box(ctx.box(), deg / 2).size());
    }
    return total;
}

}  // namespace

gc_status gc_derivation_space(int n, int k, int drop, char** json_out) {
    return guarded([&] {
        RingContext ctx(n, k);
        emit(json_out, derivation_json(derivation_space(ctx, drop), count_unknowns(ctx, drop)));
    });
}

gc_status gc_derivations_sweep(int nmax, int threads, int as_csv, char** json_out) {
    return guarded([&] {
        if (nmax < 2) throw std::invalid_argument("nmax must be at least 2");
        struct Task {
            int n, k, drop;
        };
        std::vector<Task> tasks;
        for (int n = 2; n <= nmax; ++n)
            for (int k = 1; 2 * k <= n; ++k)
                for (int drop = 2; drop <= 2 * k * (n - k); drop += 2)
                    tasks.push_back({n, k, drop});
        std::vector<json> results(tasks.size());
        parallel_for(tasks.size(), pick_threads(threads), [&](std::size_t i) {
            RingContext ctx(tasks[i].n, tasks[i].k);
            results[i] =
                derivation_json(derivation_space(ctx, tasks[i].drop), count_unknowns(ctx, tasks[i].drop));
        });
        if (as_csv) {
            std::vector<std::vector<std::string>> rows;
            for (const json& r : results)
                rows.push_back({std::to_string(r["n"].get<int>()), std::to_string(r["k"].get<int>()),
                                std::to_string(r["drop"].get<int>()),
                                std::to_string(r["unknowns"].get<int>()),
                                std::to_string(r["rank"].get<int>()),
                                std::to_string(r["dimension"].get<int>())});
            *json_out = dup_string(csv_of({"n", "k", "drop", "unknowns", "rank", "dimension"}, rows));
        } else {
            emit(json_out, json(results));
        }
    });
}

gc_status gc_extension_nullspace(int m, int n, int k, const char* lambda, char** json_out) {
    return guarded([&] {
        if (m < 1) throw std::invalid_argument("m must be at least 1");
        ProductContext ctx(m, RingContext(n, k));
        AssignmentSpace sp = extension_nullspace(ctx, parse_rat(lambda));
        json j;
        j["m"] = m;
        j["n"] = n;
        j["k"] = k;
        j["lambda"] = lambda;
        j["unknowns"] = count_unknowns(ctx.inner(), m);
        j["dimension"] = sp.dimension;
        j["basis"] = json::array();
        for (const auto& images : sp.basis) {
            json b = json::array();
            for (const GrassClass& g : images) b.push_back(g.str());
            j["basis"].push_back(b);
        }
        emit(json_out, j);
    });
}

gc_status gc_extension_sweep(int nmax, int threads, int as_csv, char** json_out) {
    return guarded([&] {
        if (nmax < 2) throw std::invalid_argument("nmax must be at least 2");
        struct Task {
            int m, n, k;
            Rational lambda;
            std::string label;
        };
        const std::vector<std::pair<Rational, std::string>> lambdas = {
            {Rational(1), "1"}, {Rational(2), "2"}, {Rational(-1), "-1"}, {Rational(1, 2), "1/2"}};
        std::vector<Task> tasks;
        for (int n = 2; n <= nmax; ++n)
            for (int k = 1; k < n; ++k)
                for (int m : {2, 4, 6}) {
                    if (m > 2 * k * (n - k)) continue;
                    for (const auto& [lam, label] : lambdas) tasks.push_back({m, n, k, lam, label});
                }
        std::vector<int> dims(tasks.size());
        parallel_for(tasks.size(), pick_threads(threads), [&](std::size_t i) {
            ProductContext ctx(tasks[i].m, RingContext(tasks[i].n, tasks[i].k));
            dims[i] = extension_nullspace(ctx, tasks[i].lambda).dimension;
        });
        if (as_csv) {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t i = 0; i < tasks.size(); ++i)
                rows.push_back({std::to_string(tasks[i].m), std::to_string(tasks[i].n),
                                std::to_string(tasks[i].k), tasks[i].label, std::to_string(dims[i])});
            *json_out = dup_string(csv_of({"m", "n", "k", "lambda", "dimension"}, rows));
        } else {
            json arr = json::array();
            for (std::size_t i = 0; i < tasks.size(); ++i)
                arr.push_back({{"m", tasks[i].m},
                               {"n", tasks[i].n},
                               {"k", tasks[i].k},
                               {"lambda", tasks[i].label},
                               {"dimension", dims[i]}});
            emit(json_out, arr);
        }
    });
}

gc_status gc_lefschetz_closed(int m, int n, int k, const char* lambda, const char* mu,
                              const char* lambda1, const char* mu1, int u_family,
                              char** json_out) {
    return guarded([&] {
        RingContext check(n, k);
        Rational lam = parse_rat(lambda), muu = parse_rat(mu);
        Rational lam1 = parse_rat(lambda1), mu1r = parse_rat(mu1);
        json j;
        j["m"] = m;
        j["n"] = n;
        j["k"] = k;
        if (m == 0) {
            j["L"] = rational_str(lefschetz_closed_grass(n, k, lam, lam1));
        } else {
            j["L_untwisted"] = rational_str(
                lefschetz_closed_product(m, n, k, lam, muu, lam1, mu1r, false, u_family != 0));
            j["L_twisted"] = rational_str(
                lefschetz_closed_product(m, n, k, lam, muu, lam1, mu1r, true, u_family != 0));
        }
        j["method"] = "closed_form";
        emit(json_out, j);
    });
}

gc_status gc_lefschetz_trace(gc_context* ctx, const char* f_endo_json, const char* g_endo_json,
                             char** json_out) {
    return guarded([&] {
        const ProductContext& pc = product_ctx(ctx);
        GradedEndo f = parse_endo(pc, f_endo_json);
        GradedEndo g = parse_endo(pc, g_endo_json);
        EndoVerdict vf = is_well_defined(f), vg = is_well_defined(g);
        if (!vf.well_defined || !vg.well_defined)
            throw std::invalid_argument("both endomorphisms must be well-defined");
        LefschetzReport rep = lefschetz_trace(f, g);
        json j;
        j["L_untwisted"] = rational_str(rep.value_untwisted);
        j["L_twisted"] = rational_str(rep.value_twisted);
        j["method"] = rep.method;
        j["slices"] = json::array();
        for (const auto& s : rep.slices)
            j["slices"].push_back({{"q", s.q},
                                   {"trace_untwisted", rational_str(s.untwisted)},
                                   {"trace_twisted", rational_str(s.twisted)}});
        if (rep.value_untwisted_plus)
            j["L_untwisted_all_plus"] = rational_str(*rep.value_untwisted_plus);
        if (rep.value_twisted_plus)
            j["L_twisted_all_plus"] = rational_str(*rep.value_twisted_plus);
        if (rep.convention_note) j["convention_note"] = *rep.convention_note;
        emit(json_out, j);
    });
}

gc_status gc_criteria(int m, int n, int k, const char* f_json, const char* g_json,
                      char** json_out) {
    return guarded([&] {
        FamilyDescriptor f = parse_family(f_json), g = parse_family(g_json);
        emit(json_out, verdict_json(m, n, k, coincidence_criteria(m, n, k, f, g)));
    });
}

gc_status gc_criteria_sweep(int mmax, int nmax, int threads, int as_csv, char** json_out) {
    return guarded([&] {
        if (mmax < 1 || nmax < 2) throw std::invalid_argument("need mmax >= 1 and nmax >= 2");
        struct Task {
            int m, n, k;
            Rational lam, mu, lam1, mu1;
        };
        const std::vector<Rational> grid = {Rational(1), Rational(2), Rational(-1)};
        std::vector<Task> tasks;
        for (int m = 1; m <= mmax; ++m)
            for (int n = 2; n <= nmax; ++n)
                for (int k = 1; k < n; ++k)
                    for (const Rational& lam : grid)
                        for (const Rational& mu : grid)
                            for (const Rational& lam1 : grid)
                                for (const Rational& mu1 : grid)
                                    tasks.push_back({m, n, k, lam, mu, lam1, mu1});
        std::vector<CriteriaVerdict> verdicts(tasks.size());
        parallel_for(tasks.size(), pick_threads(threads), [&](std::size_t i) {
            FamilyDescriptor f{FamilyDescriptor::Family::adams, tasks[i].lam, tasks[i].mu};
            FamilyDescriptor g{FamilyDescriptor::Family::adams, tasks[i].lam1, tasks[i].mu1};
            verdicts[i] = coincidence_criteria(tasks[i].m, tasks[i].n, tasks[i].k, f, g);
        });
        if (as_csv) {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t i = 0; i < tasks.size(); ++i) {
                const Task& t = tasks[i];
                const CriteriaVerdict& v = verdicts[i];
                rows.push_back({std::to_string(t.m), std::to_string(t.n), std::to_string(t.k),
                                rational_str(t.lam), rational_str(t.mu), rational_str(t.lam1),
                                rational_str(t.mu1), rational_str(v.L_untwisted),
                                rational_str(v.L_twisted), v.theorem_applied,
                                v.coincidence_guaranteed ? "coincidence_guaranteed" : "not_decided"});
            }
            *json_out = dup_string(csv_of({"m", "n", "k", "lambda", "mu", "lambda1", "mu1",
                                           "L_untwisted", "L_twisted", "theorem", "conclusion"},
                                          rows));
        } else {
            json arr = json::array();
            for (std::size_t i = 0; i < tasks.size(); ++i) {
                json j = verdict_json(tasks[i].m, tasks[i].n, tasks[i].k, verdicts[i]);
                j.erase("hypotheses_checked");
                j["lambda"] = rational_str(tasks[i].lam);
                j["mu"] = rational_str(tasks[i].mu);
                j["lambda1"] = rational_str(tasks[i].lam1);
                j["mu1"] = rational_str(tasks[i].mu1);
                arr.push_back(j);
            }
            emit(json_out, arr);
        }
    });
}

gc_status gc_certify_lemma(int n, int k, char** json_out) {
    return guarded([&] {
        RingContext check(n, k);
        NonvanishingCertificate c = nonvanishing_certificate(n, k);
        json j;
        j["n"] = c.n;
        j["k"] = c.k;
        j["d"] = c.d;
        j["betti"] = c.betti_numbers;
        j["endpoints_one"] = c.endpoints_one;
        j["candidate_roots"] = json::array({"1", "-1"});
        j["value_at_plus_one"] = c.value_at_plus_one.str();
        j["value_at_minus_one"] = c.value_at_minus_one.str();
        j["no_rational_root"] = c.no_rational_root;
        emit(json_out, j);
    });
}

gc_status gc_fixed_basis(int m, int n, int k, int degree, char** json_out) {
    return guarded([&] {
        if (m < 1) throw std::invalid_argument("m must be at least 1");
        ProductContext ctx(m, RingContext(n, k));
        std::vector<ProductClass> basis = fixed_subring_basis(ctx, degree);
        json j;
        j["m"] = m;
        j["n"] = n;
        j["k"] = k;
        j["degree"] = degree;
        j["dimension"] = basis.size();
        j["basis"] = json::array();
        for (const ProductClass& b : basis) j["basis"].push_back(b.str());
        emit(json_out, j);
    });
}

}  // extern "C"
