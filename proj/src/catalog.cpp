#include "ybalg/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybalg {

namespace {

std::string tuple_tag(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

struct RelBuilder {
    const BraidedSpace& y;
    std::vector<CatalogRelation>* out;

    int u(int i, int j) const { return y.index_of({GenLabel::Kind::U, i, j}); }
    int uu(int i, int j) const { return y.index_of({GenLabel::Kind::UU, i, j}); }
    int r(int k) const { return y.index_of({GenLabel::Kind::R, k, 0}); }

    void emit(std::string id, ExplicitRel rel) { out->push_back({std::move(id), std::move(rel)}); }
    static ExplicitRel comm(int a, int b) { return {{Rat(1), a, b}, {Rat(-1), b, a}}; }
};

void kernel_d(const BraidedSpace& y, std::vector<CatalogRelation>& out, bool loop_fixed_only) {
    RelBuilder B{y, &out};
    int n = y.spec().rank;
    if (!loop_fixed_only) {
        // disjoint supports
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = i; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) {
                        if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
                        if (k == i || k == j || l == i || l == j) continue;
                        auto tag = tuple_tag({i, j, k, l});
                        B.emit("duo1" + tag, RelBuilder::comm(B.u(i, j), B.u(k, l)));
                        B.emit("duo2" + tag, RelBuilder::comm(B.uu(i, j), B.uu(k, l)));
                        B.emit("duo3" + tag, RelBuilder::comm(B.u(i, j), B.uu(k, l)));
                        B.emit("duo3" + tuple_tag({k, l, i, j}), RelBuilder::comm(B.u(k, l), B.uu(i, j)));
                    }
        // equal supports
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto tag = tuple_tag({i, j});
                B.emit("duo4" + tag, {{Rat(1), B.u(i, j), B.u(i, j)}});
                B.emit("duo5" + tag, {{Rat(1), B.uu(i, j), B.uu(i, j)}});
                B.emit("duo6" + tag,
                       {{Rat(1), B.u(i, j), B.uu(i, j)}, {Rat(1), B.uu(i, j), B.u(i, j)}});
            }
    }
    // one shared index: k < j < l
    for (int k = 1; k <= n; ++k)
        for (int j = k + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) {
                auto tag = tuple_tag({k, j, l});
                int ukj = B.u(k, j), ukl = B.u(k, l), ujl = B.u(j, l);
                int vkj = B.uu(k, j), vkl = B.uu(k, l), vjl = B.uu(j, l);
                if (loop_fixed_only) {
                    // the two schemas rederived from the braiding cycles
                    B.emit("tri4.loop" + tag,
                           {{Rat(1), vkj, vjl}, {Rat(-1), ukl, vkj}, {Rat(-1), vjl, ukl}});
                    B.emit("tri6.loop" + tag,
                           {{Rat(1), ukj, vjl}, {Rat(-1), vkl, ukj}, {Rat(-1), vjl, vkl}});
                    continue;
                }
                B.emit("tri1" + tag, {{Rat(1), ujl, ukj}, {Rat(-1), ukj, ukl}, {Rat(-1), ukl, ujl}});
                B.emit("tri2" + tag, {{Rat(1), ukj, ujl}, {Rat(-1), ujl, ukl}, {Rat(-1), ukl, ukj}});
                B.emit("tri3" + tag, {{Rat(1), vjl, vkj}, {Rat(-1), vkj, ukl}, {Rat(-1), ukl, vjl}});
                B.emit("tri4" + tag, {{Rat(1), vkj, vjl}, {Rat(-1), ujl, vkl}, {Rat(-1), vkl, ukj}});
                B.emit("tri5" + tag, {{Rat(1), vjl, ukj}, {Rat(-1), ukj, vkl}, {Rat(-1), vkl, vjl}});
                B.emit("tri6" + tag, {{Rat(1), vkj, ujl}, {Rat(-1), vjl, vkl}, {Rat(-1), vkl, ukj}});
                B.emit("tri7" + tag, {{Rat(1), ujl, vkj}, {Rat(-1), vkj, vkl}, {Rat(-1), vkl, ujl}});
                B.emit("tri8" + tag, {{Rat(1), vkj, ujl}, {Rat(-1), ujl, vkl}, {Rat(-1), vkl, vkj}});
            }
}

void envelope_d(const BraidedSpace& y, std::vector<CatalogRelation>& out) {
    RelBuilder B{y, &out};
    int n = y.spec().rank;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
                    if (k == i || k == j || l == i || l == j) continue;
                    auto tag = tuple_tag({i, j, k, l});
                    B.emit("antiduo1" + tag, RelBuilder::comm(B.u(i, j), B.u(k, l)));
                    B.emit("antiduo2" + tag, RelBuilder::comm(B.uu(i, j), B.uu(k, l)));
                    B.emit("antiduo3" + tag, RelBuilder::comm(B.u(i, j), B.uu(k, l)));
                    B.emit("antiduo3" + tuple_tag({k, l, i, j}),
                           RelBuilder::comm(B.u(k, l), B.uu(i, j)));
                }
    auto minus = [](ExplicitRel a, const ExplicitRel& b) {
        for (auto t : b) {
            t.coeff = -t.coeff;
            a.push_back(t);
        }
        return a;
    };
    for (int k = 1; k <= n; ++k)
        for (int j = k + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) {
                auto tag = tuple_tag({k, j, l});
                int ukj = B.u(k, j), ukl = B.u(k, l), ujl = B.u(j, l);
                int vkj = B.uu(k, j), vkl = B.uu(k, l), vjl = B.uu(j, l);
                B.emit("antitri1" + tag,
                       minus(minus(RelBuilder::comm(ujl, ukj), RelBuilder::comm(ukj, ukl)),
                             RelBuilder::comm(ukl, ujl)));
                B.emit("antitri2" + tag,
                       minus(minus(RelBuilder::comm(vjl, vkj), RelBuilder::comm(vkj, ukl)),
                             RelBuilder::comm(ukl, vjl)));
                B.emit("antitri3" + tag,
                       minus(minus(RelBuilder::comm(vjl, ukj), RelBuilder::comm(ukj, vkl)),
                             RelBuilder::comm(vkl, vjl)));
                B.emit("antitri4" + tag,
                       minus(minus(RelBuilder::comm(ujl, vkj), RelBuilder::comm(vkj, vkl)),
                             RelBuilder::comm(vkl, ujl)));
            }
}

void kernel_b(const BraidedSpace& y, std::vector<CatalogRelation>& out) {
    RelBuilder B{y, &out};
    int n = y.spec().rank;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                auto tag = tuple_tag({i, j, k});
                B.emit("b1" + tag, RelBuilder::comm(B.r(k), B.u(i, j)));
                B.emit("b2" + tag, RelBuilder::comm(B.r(k), B.uu(i, j)));
            }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            B.emit("rr" + tuple_tag({j, k}), RelBuilder::comm(B.r(j), B.r(k)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto tag = tuple_tag({i, j});
            int u = B.u(i, j), v = B.uu(i, j), ri = B.r(i), rj = B.r(j);
            B.emit("b3" + tag,
                   {{Rat(1), ri, u}, {Rat(-1), v, ri}, {Rat(1), rj, v}, {Rat(-1), u, rj}});
            B.emit("b4" + tag,
                   {{Rat(1), rj, u}, {Rat(-1), v, rj}, {Rat(1), ri, v}, {Rat(-1), u, ri}});
        }
}

void envelope_b(const BraidedSpace& y, std::vector<CatalogRelation>& out) {
    RelBuilder B{y, &out};
    int n = y.spec().rank;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                auto tag = tuple_tag({i, j, k});
                B.emit("b1" + tag, RelBuilder::comm(B.r(k), B.u(i, j)));
                B.emit("b2" + tag, RelBuilder::comm(B.r(k), B.uu(i, j)));
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto tag = tuple_tag({i, j});
            int u = B.u(i, j), v = B.uu(i, j), ri = B.r(i), rj = B.r(j);
            // [r_i + r_j, u + uu]
            ExplicitRel rel;
            for (int x : {ri, rj})
                for (int w : {u, v}) {
                    rel.push_back({Rat(1), x, w});
                    rel.push_back({Rat(-1), w, x});
                }
            B.emit("b5" + tag, std::move(rel));
        }
}

void tr_explicit(const BraidedSpace& y, std::vector<CatalogRelation>& out) {
    RelBuilder B{y, &out};
    int n = y.spec().rank;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
                    if (k == i || k == j || l == i || l == j) continue;
                    B.emit("ybe.disjoint" + tuple_tag({i, j, k, l}),
                           RelBuilder::comm(B.u(i, j), B.u(k, l)));
                }
    auto plus = [](ExplicitRel a, const ExplicitRel& b) {
        for (const auto& t : b) a.push_back(t);
        return a;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                int uij = B.u(i, j), uik = B.u(i, k), ujk = B.u(j, k);
                B.emit("ybe" + tuple_tag({i, j, k}),
                       plus(plus(RelBuilder::comm(uij, uik), RelBuilder::comm(uij, ujk)),
                            RelBuilder::comm(uik, ujk)));
            }
}

// dual equalities are emitted as differences; membership in the annihilator
// subspace means the printed equality holds in the dual algebra
void dual_a(const BraidedSpace& y, std::vector<CatalogRelation>& out) {
    RelBuilder B{y, &out};
    int n = y.spec().rank;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                auto tag = tuple_tag({i, j, k});
                int uij = B.u(i, j), uik = B.u(i, k), ujk = B.u(j, k);
                // printed chain: (ij)(jk) = (ik)(jk) = (jk)(ij) = (ij)(ik)
                B.emit("dualA.eq1" + tag, {{Rat(1), uij, ujk}, {Rat(-1), uik, ujk}});
                B.emit("dualA.eq2" + tag, {{Rat(1), uik, ujk}, {Rat(-1), ujk, uij}});
                B.emit("dualA.eq3" + tag, {{Rat(1), ujk, uij}, {Rat(-1), uij, uik}});
            }
}

void dual_d(const BraidedSpace& y, std::vector<CatalogRelation>& out) {
    RelBuilder B{y, &out};
    int n = y.spec().rank;
    for (int k = 1; k <= n; ++k)
        for (int j = k + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) {
                auto tag = tuple_tag({k, j, l});
                int ukj = B.u(k, j), ukl = B.u(k, l), ujl = B.u(j, l);
                int vkj = B.uu(k, j), vkl = B.uu(k, l), vjl = B.uu(j, l);
                // chains as printed, expanded to consecutive differences
                B.emit("dual2.eq1" + tag, {{Rat(1), vjl, vkl}, {Rat(1), ukj, vjl}});
                B.emit("dual2.eq2" + tag, {{Rat(1), ukj, vjl}, {Rat(-1), ukj, vkl}});
                B.emit("dual3.eq1" + tag, {{Rat(1), vkl, vkj}, {Rat(-1), ujl, vkl}});
                B.emit("dual3.eq2" + tag, {{Rat(1), ujl, vkl}, {Rat(1), ujl, vkj}});
                B.emit("dual4.eq1" + tag, {{Rat(1), vkj, vjl}, {Rat(-1), ukl, vjl}});
                B.emit("dual4.eq2" + tag, {{Rat(1), ukl, vjl}, {Rat(1), ukl, vkj}});
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            B.emit("dual5" + tuple_tag({i, j}), {{Rat(1), B.u(i, j), B.uu(i, j)}});
}

void dual_b(const BraidedSpace& y, std::vector<CatalogRelation>& out) {
    RelBuilder B{y, &out};
    int n = y.spec().rank;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto tag = tuple_tag({i, j});
            int u = B.u(i, j), v = B.uu(i, j), ri = B.r(i), rj = B.r(j);
            // r^i (ij) = r^i ((ij)) = r^j (ij) = r^j ((ij))
            B.emit("dualB.eq1" + tag, {{Rat(1), ri, u}, {Rat(-1), ri, v}});
            B.emit("dualB.eq2" + tag, {{Rat(1), ri, v}, {Rat(-1), rj, u}});
            B.emit("dualB.eq3" + tag, {{Rat(1), rj, u}, {Rat(-1), rj, v}});
        }
}

void dual_squares(const BraidedSpace& y, std::vector<CatalogRelation>& out) {
    RelBuilder B{y, &out};
    int d = y.dim();
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            ExplicitRel rel{{Rat(1), a, b}};
            if (b != a) rel.push_back({Rat(1), b, a});
            B.emit("sym(" + y.basis()[a].to_string() + "," + y.basis()[b].to_string() + ")",
                   std::move(rel));
        }
}

}  // namespace

std::vector<CatalogRelation> catalog_relations(const BraidedSpace& y, RelFamily fam) {
    std::vector<CatalogRelation> out;
    Series s = y.spec().series;
    switch (fam) {
        case RelFamily::KernelD:
            if (s == Series::A) throw std::invalid_argument("KernelD: series D or B only");
            kernel_d(y, out, false);
            break;
        case RelFamily::KernelDLoop:
            if (s == Series::A) throw std::invalid_argument("KernelDLoop: series D or B only");
            kernel_d(y, out, true);
            break;
        case RelFamily::EnvelopeD:
            if (s == Series::A) throw std::invalid_argument("EnvelopeD: series D or B only");
            envelope_d(y, out);
            break;
        case RelFamily::KernelB:
            if (s != Series::B) throw std::invalid_argument("KernelB: series B only");
            kernel_b(y, out);
            break;
        case RelFamily::EnvelopeB:
            if (s != Series::B) throw std::invalid_argument("EnvelopeB: series B only");
            envelope_b(y, out);
            break;
        case RelFamily::TrExplicit:
            if (s != Series::A) throw std::invalid_argument("TrExplicit: series A only");
            tr_explicit(y, out);
            break;
        case RelFamily::DualA:
            dual_a(y, out);
            break;
        case RelFamily::DualD:
            if (s == Series::A) throw std::invalid_argument("DualD: series D or B only");
            dual_d(y, out);
            break;
        case RelFamily::DualB:
            if (s != Series::B) throw std::invalid_argument("DualB: series B only");
            dual_b(y, out);
            break;
        case RelFamily::DualSquares:
            dual_squares(y, out);
            break;
    }
    return out;
}

std::vector<CatalogRelation> published_kernel_relations(const BraidedSpace& y) {
    std::vector<CatalogRelation> out;
    if (y.spec().series == Series::A) {
        // the kernel for A is not printed as a schema; the enveloping relations are
        return out;
    }
    out = catalog_relations(y, RelFamily::KernelD);
    if (y.spec().series == Series::B) {
        auto more = catalog_relations(y, RelFamily::KernelB);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

std::vector<CatalogRelation> published_envelope_relations(const BraidedSpace& y) {
    std::vector<CatalogRelation> out;
    if (y.spec().series == Series::A) return catalog_relations(y, RelFamily::TrExplicit);
    out = catalog_relations(y, RelFamily::EnvelopeD);
    if (y.spec().series == Series::B) {
        auto more = catalog_relations(y, RelFamily::EnvelopeB);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

std::string ReducedMonomial::to_string() const {
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += " ";
        s += letters[i].to_string();
    }
    return s;
}

namespace {

// blocks on a fixed sorted support; degree = letters.size()
std::vector<std::vector<GenLabel>> blocks_on_support(const GroupSpec& spec,
                                                     const std::vector<int>& s) {
    std::vector<std::vector<GenLabel>> out;
    size_t k = s.size();
    bool has_uu = spec.series != Series::A;
    bool has_r = spec.series == Series::B;
    if (k >= 2) {
        std::vector<GenLabel> star;
        for (size_t t = 1; t < k; ++t) star.push_back({GenLabel::Kind::U, s[0], s[t]});
        out.push_back(star);  // plain star
        if (has_uu) {
            // starred variant: one letter doubled, positions 2..k as published
            for (size_t p = 2; p < k; ++p) {
                std::vector<GenLabel> m;
                for (size_t t = 1; t < k; ++t)
                    if (t != p) m.push_back({GenLabel::Kind::U, s[0], s[t]});
                m.push_back({GenLabel::Kind::UU, s[0], s[p]});
                out.push_back(std::move(m));
            }
            // shifted star ending in the doubled smallest pair
            std::vector<GenLabel> m;
            for (size_t t = 2; t < k; ++t) m.push_back({GenLabel::Kind::U, s[1], s[t]});
            m.push_back({GenLabel::Kind::UU, s[0], s[1]});
            out.push_back(std::move(m));
        }
    }
    if (has_r) {
        std::vector<GenLabel> m;
        for (size_t t = 1; t < k; ++t) m.push_back({GenLabel::Kind::U, s[0], s[t]});
        m.push_back({GenLabel::Kind::R, s[0], 0});
        out.push_back(std::move(m));
    }
    return out;
}

void enumerate_products(const GroupSpec& spec, int n, int deg_left, int min_next,
                        std::vector<int> used, std::vector<GenLabel> acc,
                        std::vector<ReducedMonomial>& out) {
    if (deg_left == 0) {
        out.push_back({acc});
        return;
    }
    // choose the next support: min element > min_next, disjoint from used
    std::vector<int> avail;
    for (int x = min_next + 1; x <= n; ++x)
        if (std::find(used.begin(), used.end(), x) == used.end()) avail.push_back(x);
    for (size_t first = 0; first < avail.size(); ++first) {
        int m0 = avail[first];
        std::vector<int> rest(avail.begin() + first + 1, avail.end());
        // subsets of rest joined with m0
        size_t rn = rest.size();
        for (size_t mask = 0; mask < (size_t{1} << rn); ++mask) {
            std::vector<int> support{m0};
            for (size_t b = 0; b < rn; ++b)
                if (mask & (size_t{1} << b)) support.push_back(rest[b]);
            for (auto& block : blocks_on_support(spec, support)) {
                if (static_cast<int>(block.size()) > deg_left || block.empty()) continue;
                std::vector<int> used2 = used;
                used2.insert(used2.end(), support.begin(), support.end());
                std::vector<GenLabel> acc2 = acc;
                acc2.insert(acc2.end(), block.begin(), block.end());
                enumerate_products(spec, n, deg_left - static_cast<int>(block.size()), m0,
                                   std::move(used2), std::move(acc2), out);
            }
        }
    }
}

}  // namespace

std::vector<ReducedMonomial> reduced_monomials(const GroupSpec& spec, int m) {
    std::vector<ReducedMonomial> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    enumerate_products(spec, spec.rank, m, 0, {}, {}, out);
    std::sort(out.begin(), out.end(), [](const ReducedMonomial& a, const ReducedMonomial& b) {
        return a.letters < b.letters;
    });
    return out;
}

std::vector<std::pair<GenLabel, GenLabel>> published_t_set(const GroupSpec& spec) {
    if (spec.series == Series::A)
        throw std::invalid_argument("published_t_set: only the D and B tables are published");
    std::vector<std::pair<GenLabel, GenLabel>> t;
    int n = spec.rank;
    auto U = [](int i, int j) { return GenLabel{GenLabel::Kind::U, i, j}; };
    auto UU = [](int i, int j) { return GenLabel{GenLabel::Kind::UU, i, j}; };
    auto R = [](int k) { return GenLabel{GenLabel::Kind::R, k, 0}; };
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    if (c == a || c == b || d == a || d == b) continue;
                    if (std::make_pair(a, b) < std::make_pair(c, d)) {
                        t.emplace_back(U(a, b), U(c, d));
                        t.emplace_back(UU(a, b), UU(c, d));
                    }
                    t.emplace_back(U(a, b), UU(c, d));
                }
    for (int k = 1; k <= n; ++k)
        for (int j = k + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) {
                t.emplace_back(U(k, j), U(k, l));
                t.emplace_back(U(k, j), UU(k, l));
                t.emplace_back(U(j, l), UU(k, j));
            }
    if (spec.series == Series::B) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j) continue;
                    t.emplace_back(U(i, j), R(k));
                    t.emplace_back(UU(i, j), R(k));
                }
                t.emplace_back(U(i, j), R(i));
            }
    }
    std::sort(t.begin(), t.end());
    return t;
}

std::optional<PublishedSeries> published_series(const GroupSpec& spec) {
    if (spec.series == Series::D && spec.rank == 4) {
        return PublishedSeries{{1, 12, 21, 4}, {1, 12, 123, 1228, 12201, 121116}, 38};
    }
    if (spec.series == Series::B && spec.rank == 4) {
        return PublishedSeries{
            {1, 72, 51, 5}, {1, 72, 5133, 365909, 26084025, 1859414106}, std::nullopt};
    }
    return std::nullopt;
}

}  // namespace ybalg
