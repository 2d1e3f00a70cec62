#include "ybalg/report.hpp"

#include <algorithm>
#include <set>

namespace ybalg {

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct Ctx {
    VerificationReport& rep;
    void record(std::string id, std::string anchor, std::string computed, std::string printed) {
        std::string status;
        if (printed.empty())
            status = "UNPRINTED";
        else
            status = computed == printed ? "PASS" : "MISMATCH";
        rep.checks.push_back(
            {std::move(id), std::move(anchor), std::move(computed), std::move(printed), status});
    }
};

// dual graded dimensions via a completed rewriting system; exact counts, and
// dims vanish for good once a zero appears (degree-1 generated)
struct DualDims {
    std::vector<int64_t> dims;  // 0..through
    int through = 0;
    bool complete = false;      // a zero dimension was reached
    RewriteSystem system;       // the (possibly completed) dual system
    bool quadratic_confluent = false;
};

DualDims dual_dimensions(const QuadPresentation& dual, int want_at_least) {
    MonomialOrder order = MonomialOrder::natural(dual.dim());
    RewriteSystem quad = build_rewriting_system(dual, order);
    bool confluent = quad.pbw_confluent();
    int target = std::max(want_at_least + 1, 6);
    RewriteSystem sys = quad;
    if (!confluent) sys = truncated_completion(quad, target);
    DualDims out{{}, 0, false, sys, confluent};
    for (int cap = target; cap <= 14; cap += 4) {
        if (cap != target && !out.complete) {
            sys = truncated_completion(sys, cap);
            out.system = sys;
        }
        out.dims.clear();
        out.through = cap - 1;
        for (int m = 0; m <= cap - 1; ++m) {
            int64_t c = out.system.count_normal_words(m);
            out.dims.push_back(c);
            if (c == 0 && m >= 1) {
                out.complete = true;
                out.through = m;
                out.dims.resize(m + 1);
                break;
            }
        }
        if (out.complete || out.through >= want_at_least) break;
    }
    return out;
}

std::string join_dims(const std::vector<int64_t>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace

int VerificationReport::passes() const {
    int c = 0;
    for (const auto& r : checks) c += r.status == "PASS";
    return c;
}
int VerificationReport::mismatches() const {
    int c = 0;
    for (const auto& r : checks) c += r.status == "MISMATCH";
    return c;
}
int VerificationReport::unprinted() const {
    int c = 0;
    for (const auto& r : checks) c += r.status == "UNPRINTED";
    return c;
}

VerificationReport verification_report(const GroupSpec& spec, const ReportOptions& opt) {
    VerificationReport rep;
    rep.spec = spec;
    rep.pairing = opt.pairing == Pairing::Straight ? "straight" : "reversed";
    rep.lambda_r_square = opt.rsq == RSquareSign::CommutesWithSelf ? "+1" : "-1";
    Ctx ctx{rep};
    std::string tagbase = spec.to_string();

    YbAlgebra alg = build_yb(spec, opt.rsq);
    const QuadPresentation& dual =
        opt.pairing == Pairing::Straight ? alg.dual_straight : alg.dual_reversed;

    if (spec.reducible_warning())
        ctx.record("spec.reducible_warning", "structure:" + tagbase, "true", "");

    // reflections and structure
    ctx.record("reflections.count", "catalog:" + tagbase + ".reflections",
               std::to_string(alg.space.dim()), std::to_string(reflection_count(spec)));
    ctx.record("braid_equation", "structure:braiding",
               bool_str(alg.space.check_braid_relation()), "true");
    ctx.record("yd_compatibility", "structure:coaction",
               bool_str(alg.space.check_yd_condition()), "true");

    // published relation lists against the computed subspaces
    auto run_family = [&](const std::vector<CatalogRelation>& rels, const QuadPresentation& p,
                          const std::string& fam, bool claim_span) {
        if (rels.empty()) return;
        std::vector<ExplicitRel> only;
        only.reserve(rels.size());
        for (const auto& r : rels) only.push_back(r.rel);
        RelationCheck chk = relation_list_check(p, only);
        int contained = 0;
        for (bool b : chk.contained) contained += b;
        ctx.record(fam + ".contained", "catalog:" + tagbase + "." + fam,
                   std::to_string(contained) + "/" + std::to_string(rels.size()),
                   std::to_string(rels.size()) + "/" + std::to_string(rels.size()));
        for (size_t k = 0; k < rels.size(); ++k)
            if (!chk.contained[k])
                ctx.record(fam + "." + rels[k].id, "catalog:" + tagbase + "." + fam, "not-contained",
                           "contained");
        ctx.record(fam + ".independent", "catalog:" + tagbase + "." + fam,
                   std::to_string(chk.independent), "");
        if (claim_span)
            ctx.record(fam + ".span_equals_computed", "catalog:" + tagbase + "." + fam,
                       bool_str(chk.span_equal), "true");
    };

    if (spec.series != Series::A) {
        run_family(published_kernel_relations(alg.space), alg.quad_cover, "kernel_relations", true);
        run_family(catalog_relations(alg.space, RelFamily::KernelDLoop), alg.quad_cover,
                   "kernel_relations.loop_derived", false);
    }
    run_family(published_envelope_relations(alg.space), alg.envelope, "envelope_relations", true);

    // dual relation families under both conventions
    auto dual_known = [&](RelFamily fam, const std::string& name) {
        std::vector<CatalogRelation> rels;
        try {
            rels = catalog_relations(alg.space, fam);
        } catch (const std::invalid_argument&) {
            return;
        }
        if (rels.empty()) return;
        for (Pairing c : {Pairing::Straight, Pairing::Reversed}) {
            const QuadPresentation& d = c == Pairing::Straight ? alg.dual_straight : alg.dual_reversed;
            std::string tag = c == Pairing::Straight ? "straight" : "reversed";
            int held = 0;
            std::vector<std::string> failing;
            for (const auto& r : rels) {
                RatVec v = relation_vector(r.rel, alg.space.dim());
                bool ok = d.relations.contains(v);
                held += ok;
                if (!ok) failing.push_back(r.id);
            }
            ctx.record(name + ".holds[" + tag + "]", "catalog:" + tagbase + "." + name,
                       std::to_string(held) + "/" + std::to_string(rels.size()),
                       std::to_string(rels.size()) + "/" + std::to_string(rels.size()));
            for (const auto& id : failing)
                ctx.record(name + "." + id + "[" + tag + "]", "catalog:" + tagbase + "." + name,
                           "fails", "holds");
        }
    };
    dual_known(RelFamily::DualSquares, "dual_antisymmetry");
    if (spec.series == Series::A) dual_known(RelFamily::DualA, "dual_relations_a");
    if (spec.series != Series::A) {
        dual_known(RelFamily::DualA, "dual_relations_a");
        dual_known(RelFamily::DualD, "dual_relations_d");
    }
    if (spec.series == Series::B) dual_known(RelFamily::DualB, "dual_relations_r");

    // series A: the enveloping relations equal the classical Yang-Baxter span
    if (spec.series == Series::A) {
        auto rels = catalog_relations(alg.space, RelFamily::TrExplicit);
        std::vector<ExplicitRel> only;
        for (const auto& r : rels) only.push_back(r.rel);
        RelationCheck chk = relation_list_check(alg.envelope, only);
        ctx.record("classical_ybe.span_equality", "catalog:" + tagbase + ".presentation",
                   bool_str(chk.span_equal), "true");
    }

    auto pub = published_series(spec);

    // dual dimensions: count on the (completed) dual system, cross-checked
    // against exact linear algebra in low degrees
    int dual_need = pub ? static_cast<int>(pub->dual_poly.size()) : std::min(opt.max_degree, 4);
    DualDims dd = dual_dimensions(dual, dual_need);
    rep.backends.emplace_back("dual", dd.quadratic_confluent ? "admissible-word count (quadratic)"
                                                             : "admissible-word count (completed)");
    for (int m = 0; m <= dd.through; ++m) {
        // the printed polynomial claims zero beyond its top degree
        std::string printed;
        if (pub)
            printed = m < static_cast<int>(pub->dual_poly.size())
                          ? std::to_string(pub->dual_poly[m])
                          : "0";
        ctx.record("dual_dim[" + std::to_string(m) + "]",
                   "catalog:" + tagbase + ".dual_poly[" + std::to_string(m) + "]",
                   std::to_string(dd.dims[m]), printed);
    }
    {
        // exact linear-algebra cross-check where the budget allows
        int64_t d = dual.dim();
        int lin_max = 1;
        for (int64_t cols = d; lin_max < 4 && cols * d <= 100000; ++lin_max) cols *= d;
        for (int m = 2; m <= std::min(lin_max, dd.through); ++m) {
            GradedDim g = graded_dimension(dual, m, FieldBackend::Rational);
            ctx.record("dual_dim_linalg[" + std::to_string(m) + "]",
                       "crosscheck:" + tagbase + ".dual", std::to_string(g.dim),
                       std::to_string(dd.dims[m]));
        }
        rep.backends.emplace_back("dual_linalg_degrees", "rational through " + std::to_string(lin_max));
    }
    if (dd.complete) {
        int64_t total = 0;
        for (int64_t x : dd.dims) total += x;
        ctx.record("dual_total_dim", "catalog:" + tagbase + ".dual_total", std::to_string(total),
                   pub && pub->dual_total ? std::to_string(*pub->dual_total) : "");
    }

    // published normal-form pattern counts
    for (int m = 1; m <= dd.through; ++m) {
        auto pattern = reduced_monomials(spec, m);
        std::string printed;
        if (pub)
            printed = m < static_cast<int>(pub->dual_poly.size())
                          ? std::to_string(pub->dual_poly[m])
                          : "0";
        ctx.record("dual_pattern_count[" + std::to_string(m) + "]",
                   "catalog:" + tagbase + ".basis_pattern", std::to_string(pattern.size()), printed);
    }

    // admissible-pair table and confluence of the dual system
    {
        MonomialOrder order = MonomialOrder::natural(dual.dim());
        RewriteSystem quad = build_rewriting_system(dual, order);
        std::vector<Overlap> fails;
        bool confluent = quad.pbw_confluent(&fails);
        ctx.record("dual_pbw_confluent", "catalog:" + tagbase + ".pbw_claim", bool_str(confluent),
                   spec.series == Series::A ? "" : "true");
        if (!confluent) {
            std::string sample;
            for (size_t k = 0; k < fails.size() && k < 5; ++k) {
                if (k) sample += "; ";
                sample += quad.word_string(fails[k].word);
            }
            ctx.record("dual_pbw_failing_overlaps", "catalog:" + tagbase + ".pbw_claim",
                       std::to_string(fails.size()) + " unresolved (" + sample + ")", "");
        }
        if (spec.series != Series::A) {
            auto published = published_t_set(spec);
            std::set<std::pair<int, int>> pub_t;
            for (const auto& [x, y] : published)
                pub_t.emplace(alg.space.index_of(x), alg.space.index_of(y));
            std::set<std::pair<int, int>> comp_t;
            for (auto [a, b] : quad.t_set())
                comp_t.emplace(order.gen_of[a], order.gen_of[b]);
            ctx.record("t_set.size", "catalog:" + tagbase + ".t_table",
                       std::to_string(comp_t.size()), std::to_string(pub_t.size()));
            std::vector<std::string> missing, extra;
            for (const auto& p : comp_t)
                if (!pub_t.count(p))
                    missing.push_back(alg.space.basis()[p.first].to_string() + " " +
                                      alg.space.basis()[p.second].to_string());
            for (const auto& p : pub_t)
                if (!comp_t.count(p))
                    extra.push_back(alg.space.basis()[p.first].to_string() + " " +
                                    alg.space.basis()[p.second].to_string());
            auto join = [](const std::vector<std::string>& v) {
                std::string s;
                for (size_t i = 0; i < v.size(); ++i) {
                    if (i) s += "; ";
                    s += v[i];
                }
                return s.empty() ? std::string("none") : s;
            };
            ctx.record("t_set.computed_minus_published", "catalog:" + tagbase + ".t_table",
                       join(missing), "none");
            ctx.record("t_set.published_minus_computed", "catalog:" + tagbase + ".t_table",
                       join(extra), "none");
        }
        // oracle equivalence: admissible-word count vs exact dimension when confluent
        if (confluent) {
            for (int m = 2; m <= std::min(4, dd.through); ++m) {
                int64_t cnt = quad.count_normal_words(m);
                GradedDim g = graded_dimension(dual, m, FieldBackend::Rational);
                ctx.record("dual_oracle_equivalence[" + std::to_string(m) + "]",
                           "crosscheck:" + tagbase + ".dual", std::to_string(cnt),
                           std::to_string(g.dim));
            }
        }
    }

    // primal graded dimensions
    std::vector<int64_t> primal;
    int primal_through = opt.max_degree;
    if (pub && opt.extended_series)
        primal_through = std::max<int>(primal_through,
                                       static_cast<int>(pub->primal_series.size()) - 1);
    {
        MonomialOrder order = MonomialOrder::natural(alg.envelope.dim());
        RewriteSystem prim_quad = build_rewriting_system(alg.envelope, order);
        bool completed_ok = false;
        RewriteSystem completed = prim_quad;
        try {
            completed = truncated_completion(prim_quad, primal_through + 1);
            completed_ok = true;
        } catch (const BudgetExceeded&) {
        }
        for (int m = 0; m <= primal_through; ++m) {
            int64_t dim = -1;
            std::string backend;
            bool exact = true;
            if (m <= 1) {
                dim = m == 0 ? 1 : alg.envelope.dim();
                backend = "exact";
            } else {
                try {
                    GradedDim g = graded_dimension(alg.envelope, m, FieldBackend::Rational);
                    dim = g.dim;
                    backend = "rational";
                } catch (const BudgetExceeded&) {
                    if (completed_ok) {
                        dim = completed.count_normal_words(m);
                        backend = "count(completed)";
                    } else {
                        GradedDim g = graded_dimension(alg.envelope, m, FieldBackend::Modular);
                        dim = g.dim;
                        backend = "modular(" + std::to_string(kDefaultPrime) + ") upper bound";
                        exact = false;
                    }
                }
                if (backend == "rational" && completed_ok) {
                    int64_t cnt = completed.count_normal_words(m);
                    ctx.record("primal_dim_crosscheck[" + std::to_string(m) + "]",
                               "crosscheck:" + tagbase + ".primal", std::to_string(cnt),
                               std::to_string(dim));
                }
            }
            (void)exact;
            rep.backends.emplace_back("primal[" + std::to_string(m) + "]", backend);
            primal.push_back(dim);
            std::string printed = (pub && m < static_cast<int>(pub->primal_series.size()))
                                      ? std::to_string(pub->primal_series[m])
                                      : "";
            ctx.record("primal_dim[" + std::to_string(m) + "]",
                       "catalog:" + tagbase + ".series[" + std::to_string(m) + "]",
                       std::to_string(dim), printed);
        }
    }

    // the printed dual polynomial really does invert to the printed series
    if (pub) {
        std::vector<Rat> poly;
        for (long long c : pub->dual_poly) poly.push_back(Rat(c));
        int N = static_cast<int>(pub->primal_series.size()) - 1;
        auto inv = series_inverse(poly, N);
        for (int m = 0; m <= N; ++m)
            ctx.record("series_inversion[" + std::to_string(m) + "]",
                       "catalog:" + tagbase + ".series[" + std::to_string(m) + "]",
                       inv[m].to_string(), std::to_string(pub->primal_series[m]));
    }

    // numerical Koszulness: low coefficients of P(t) * Pdual(-t) vanish
    {
        std::vector<Rat> p, pd;
        int upto = std::min<int>(4, std::min<int>(static_cast<int>(primal.size()) - 1, dd.through));
        for (int m = 0; m <= upto; ++m) {
            p.push_back(Rat(primal[m]));
            pd.push_back(Rat(dd.dims[m]));
        }
        auto prod = koszul_product(p, pd, upto);
        for (int m = 1; m <= upto; ++m)
            ctx.record("koszul_product[" + std::to_string(m) + "]",
                       "structure:koszul", prod[m].to_string(), "0");
    }

    // the structural reduction agrees with rewriting normal forms (sampled)
    {
        DualReducer red(alg.envelope, opt.pairing, MonomialOrder::natural(alg.envelope.dim()));
        const RewriteSystem& sys = dd.system;
        int d = alg.envelope.dim();
        int agree = 0, total = 0;
        for (int a = 0; a < d && total < 400; ++a)
            for (int b = 0; b < d && total < 400; ++b)
                for (int c = 0; c < d && total < 400; ++c) {
                    ++total;
                    auto r = red.reduce({a, b, c});
                    Poly nf = sys.normal_form(sys.to_ranks({a, b, c}));
                    bool ok;
                    if (r.coeff.is_zero()) {
                        ok = nf.empty();
                    } else {
                        ok = nf.size() == 1 && nf.begin()->second == r.coeff &&
                             sys.to_gens(nf.begin()->first) == r.word;
                    }
                    agree += ok;
                }
        ctx.record("reduction_agreement.deg3_sample", "crosscheck:" + tagbase + ".reduction",
                   std::to_string(agree) + "/" + std::to_string(total),
                   std::to_string(total) + "/" + std::to_string(total));
    }

    return rep;
}

}  // namespace ybalg
