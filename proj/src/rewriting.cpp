#include "ybalg/rewriting.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ybalg {

Poly poly_scale(Poly p, const Rat& c) {
    for (auto& [w, v] : p) v *= c;
    return p;
}

void poly_add(Poly& p, const Poly& q, const Rat& c) {
    for (const auto& [w, v] : q) {
        auto it = p.find(w);
        if (it == p.end()) {
            Rat nv = v * c;
            if (!nv.is_zero()) p.emplace(w, std::move(nv));
        } else {
            it->second += v * c;
            if (it->second.is_zero()) p.erase(it);
        }
    }
}

MonomialOrder MonomialOrder::natural(int d) {
    MonomialOrder o;
    o.rank_of.resize(d);
    o.gen_of.resize(d);
    for (int i = 0; i < d; ++i) o.rank_of[i] = o.gen_of[i] = i;
    return o;
}

MonomialOrder MonomialOrder::custom(const std::vector<GenLabel>& gens,
                                    const std::vector<std::string>& order) {
    if (order.size() != gens.size())
        throw std::invalid_argument("MonomialOrder: order list must name every generator once");
    MonomialOrder o;
    o.rank_of.assign(gens.size(), -1);
    o.gen_of.resize(gens.size());
    for (size_t r = 0; r < order.size(); ++r) {
        GenLabel l = GenLabel::parse(order[r]);
        int idx = -1;
        for (size_t k = 0; k < gens.size(); ++k)
            if (gens[k] == l) idx = static_cast<int>(k);
        if (idx < 0) throw std::invalid_argument("MonomialOrder: unknown label " + order[r]);
        if (o.rank_of[idx] != -1) throw std::invalid_argument("MonomialOrder: duplicate " + order[r]);
        o.rank_of[idx] = static_cast<int>(r);
        o.gen_of[r] = idx;
    }
    return o;
}

MonomialOrder MonomialOrder::from_spec(const std::vector<GenLabel>& gens, const std::string& spec) {
    if (spec == "paperD" || spec == "paperB" || spec == "lex")
        return natural(static_cast<int>(gens.size()));
    const std::string prefix = "custom:";
    if (spec.rfind(prefix, 0) == 0) {
        // split on commas outside parentheses: labels themselves contain commas
        std::vector<std::string> parts;
        std::string cur;
        int depth = 0;
        for (char c : spec.substr(prefix.size())) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) parts.push_back(cur);
        return custom(gens, parts);
    }
    throw std::invalid_argument("MonomialOrder: unknown order spec '" + spec + "'");
}

void RewriteSystem::add_rule(Word lhs, Poly rhs) {
    max_lhs_len_ = std::max(max_lhs_len_, static_cast<int>(lhs.size()));
    rules_[std::move(lhs)] = std::move(rhs);
}

std::vector<std::pair<int, int>> RewriteSystem::t_set() const {
    std::vector<std::pair<int, int>> t;
    for (int a = 0; a < d_; ++a)
        for (int b = 0; b < d_; ++b)
            if (!rules_.count(Word{a, b})) t.emplace_back(a, b);
    return t;
}

std::optional<std::pair<size_t, const Word*>> RewriteSystem::find_redex(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (int len = 2; len <= max_lhs_len_ && pos + len <= w.size(); ++len) {
            Word sub(w.begin() + pos, w.begin() + pos + len);
            auto it = rules_.find(sub);
            if (it != rules_.end()) return std::make_pair(pos, &it->first);
        }
    }
    return std::nullopt;
}

Poly RewriteSystem::normal_form(const Poly& p) const {
    Poly pending = p;
    Poly done;
    while (!pending.empty()) {
        auto top = std::prev(pending.end());  // deglex-largest monomial
        Word w = top->first;
        Rat c = top->second;
        pending.erase(top);
        auto redex = find_redex(w);
        if (!redex) {
            auto it = done.find(w);
            if (it == done.end()) {
                done.emplace(std::move(w), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) done.erase(it);
            }
            continue;
        }
        auto [pos, lhs] = *redex;
        const Poly& rhs = rules_.at(*lhs);
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + lhs->size(), w.end());
        for (const auto& [m, v] : rhs) {
            Word nw = prefix;
            nw.insert(nw.end(), m.begin(), m.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            Rat nv = c * v;
            auto it = pending.find(nw);
            if (it == pending.end()) {
                if (!nv.is_zero()) pending.emplace(std::move(nw), std::move(nv));
            } else {
                it->second += nv;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return done;
}

Poly RewriteSystem::normal_form(const Word& w) const {
    Poly p;
    p.emplace(w, Rat(1));
    return normal_form(p);
}

bool RewriteSystem::pbw_confluent(std::vector<Overlap>* failures, bool parallel) const {
    // overlaps abc with ab and bc both leading words of quadratic rules
    std::vector<Word> overlaps;
    for (const auto& [lhs, rhs] : rules_) {
        (void)rhs;
        if (lhs.size() != 2) continue;
        for (int c = 0; c < d_; ++c) {
            if (rules_.count(Word{lhs[1], c})) overlaps.push_back(Word{lhs[0], lhs[1], c});
        }
    }
    std::vector<char> ok(overlaps.size(), 1);
    std::vector<Overlap> fails(overlaps.size());
    int64_t n = static_cast<int64_t>(overlaps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
    for (int64_t i = 0; i < n; ++i) {
        const Word& w = overlaps[i];
        // reduce the left pair first
        Poly left;
        {
            const Poly& rhs = rules_.at(Word{w[0], w[1]});
            for (const auto& [m, v] : rhs) {
                Word nw = m;
                nw.push_back(w[2]);
                left[nw] = v;
            }
            left = normal_form(left);
        }
        Poly right;
        {
            const Poly& rhs = rules_.at(Word{w[1], w[2]});
            for (const auto& [m, v] : rhs) {
                Word nw{w[0]};
                nw.insert(nw.end(), m.begin(), m.end());
                right[nw] = v;
            }
            right = normal_form(right);
        }
        if (!(left == right)) {
            ok[i] = 0;
            fails[i] = Overlap{w, std::move(left), std::move(right)};
        }
    }
    bool all_ok = true;
    for (int64_t i = 0; i < n; ++i) {
        if (!ok[i]) {
            all_ok = false;
            if (failures) failures->push_back(std::move(fails[i]));
        }
    }
    return all_ok;
}

int64_t RewriteSystem::count_normal_words(int m) const {
    if (m == 0) return 1;
    // Aho-Corasick style automaton over the leading-word set
    std::vector<Word> prefixes{Word{}};
    std::map<Word, int, DeglexLess> state_of{{Word{}, 0}};
    for (const auto& [lhs, rhs] : rules_) {
        (void)rhs;
        for (size_t len = 1; len < lhs.size(); ++len) {
            Word p(lhs.begin(), lhs.begin() + len);
            if (state_of.emplace(p, static_cast<int>(prefixes.size())).second) prefixes.push_back(p);
        }
    }
    int S = static_cast<int>(prefixes.size());
    auto longest_state = [&](const Word& w) {
        // longest suffix of w that is a proper prefix of some lhs; -1 if w contains a full lhs
        for (size_t start = 0; start <= w.size(); ++start) {
            Word suf(w.begin() + start, w.end());
            // reject if any factor of suf was a full lhs: checked incrementally below instead
            auto it = state_of.find(suf);
            if (it != state_of.end()) return it->second;
        }
        return 0;
    };
    // transitions
    std::vector<std::vector<int>> next(S, std::vector<int>(d_, 0));
    for (int s = 0; s < S; ++s) {
        for (int a = 0; a < d_; ++a) {
            Word w = prefixes[s];
            w.push_back(a);
            // dead if some suffix of w is a full lhs
            bool dead = false;
            for (size_t start = 0; start < w.size() && !dead; ++start) {
                Word suf(w.begin() + start, w.end());
                if (rules_.count(suf)) dead = true;
            }
            next[s][a] = dead ? -1 : longest_state(w);
        }
    }
    std::vector<int64_t> cnt(S, 0);
    cnt[0] = 1;
    for (int step = 0; step < m; ++step) {
        std::vector<int64_t> ncnt(S, 0);
        for (int s = 0; s < S; ++s) {
            if (!cnt[s]) continue;
            for (int a = 0; a < d_; ++a) {
                int t = next[s][a];
                if (t >= 0) ncnt[t] += cnt[s];
            }
        }
        cnt = std::move(ncnt);
    }
    int64_t total = 0;
    for (int64_t v : cnt) total += v;
    return total;
}

Word RewriteSystem::to_ranks(const std::vector<int>& gen_indices) const {
    Word w;
    w.reserve(gen_indices.size());
    for (int g : gen_indices) w.push_back(order_.rank_of[g]);
    return w;
}

std::vector<int> RewriteSystem::to_gens(const Word& w) const {
    std::vector<int> g;
    g.reserve(w.size());
    for (int r : w) g.push_back(order_.gen_of[r]);
    return g;
}

std::string RewriteSystem::word_string(const Word& w) const {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += names_[w[i]];
    }
    return s;
}

RewriteSystem build_rewriting_system(const QuadPresentation& p, const MonomialOrder& order) {
    int d = p.dim();
    std::vector<std::string> names(d);
    for (int r = 0; r < d; ++r) names[r] = p.gens[order.gen_of[r]].to_string();
    RewriteSystem rs(d, std::move(names), order);

    // Re-echelonize R with columns ordered by descending deglex on rank pairs,
    // so each pivot is its relation's largest word and right-hand sides come
    // out fully reduced.
    auto desc_col = [&](int64_t pair_col) {
        int a = static_cast<int>(pair_col / d), b = static_cast<int>(pair_col % d);
        int64_t rank_pair = static_cast<int64_t>(order.rank_of[a]) * d + order.rank_of[b];
        return static_cast<int64_t>(d) * d - 1 - rank_pair;
    };
    std::vector<RatVec> rows;
    for (const auto& rv : p.relations.basis()) {
        std::vector<std::pair<int64_t, Rat>> terms;
        for (const auto& [col, c] : rv.terms) terms.emplace_back(desc_col(col), c);
        std::sort(terms.begin(), terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        RatVec v;
        v.terms = std::move(terms);
        rows.push_back(std::move(v));
    }
    auto ech = rref_serial(RatOps{}, std::move(rows));
    for (size_t i = 0; i < ech.rows.size(); ++i) {
        int64_t rank_pair = static_cast<int64_t>(d) * d - 1 - ech.pivots[i];
        Word lhs{static_cast<int>(rank_pair / d), static_cast<int>(rank_pair % d)};
        Poly rhs;
        for (const auto& [col, c] : ech.rows[i].terms) {
            if (col == ech.pivots[i]) continue;
            int64_t rp = static_cast<int64_t>(d) * d - 1 - col;
            rhs[Word{static_cast<int>(rp / d), static_cast<int>(rp % d)}] = -c;
        }
        rs.add_rule(std::move(lhs), std::move(rhs));
    }
    return rs;
}

RewriteSystem truncated_completion(const RewriteSystem& rs, int maxdeg, size_t max_rules) {
    if (maxdeg < 3) throw std::invalid_argument("truncated_completion: maxdeg must be >= 3");
    RewriteSystem out = rs;

    // pending relation polynomials (from unresolved overlaps / displaced rules)
    auto poly_of_rule = [](const Word& lhs, const Poly& rhs) {
        Poly p = rhs;
        poly_add(p, Poly{{lhs, Rat(-1)}}, Rat(1));
        return poly_scale(std::move(p), Rat(-1));  // lhs - rhs
    };

    std::function<void(Poly, std::set<Word, DeglexLess>&)> insert_poly =
        [&](Poly q, std::set<Word, DeglexLess>& dirty) {
        q = out.normal_form(q);
        if (q.empty()) return;
        auto top = std::prev(q.end());
        Word lhs = top->first;
        Rat c = top->second;
        q.erase(top);
        Poly rhs = poly_scale(std::move(q), -(c.inv()));
        // displace any existing rule whose lhs contains the new one
        std::vector<Word> displaced;
        for (const auto& [l, r] : out.rules_) {
            (void)r;
            if (l.size() <= lhs.size() || l == lhs) continue;
            for (size_t pos = 0; pos + lhs.size() <= l.size(); ++pos) {
                if (std::equal(lhs.begin(), lhs.end(), l.begin() + pos)) {
                    displaced.push_back(l);
                    break;
                }
            }
        }
        std::vector<Poly> requeue;
        for (const auto& l : displaced) {
            requeue.push_back(poly_of_rule(l, out.rules_.at(l)));
            out.rules_.erase(l);
        }
        out.add_rule(lhs, std::move(rhs));
        dirty.insert(lhs);
        if (out.rule_count() > max_rules)
            throw BudgetExceeded("truncated_completion: rule budget exceeded");
        for (auto& q2 : requeue) insert_poly(std::move(q2), dirty);
    };

    std::set<Word, DeglexLess> dirty;
    for (const auto& [lhs, rhs] : out.rules_) {
        (void)rhs;
        dirty.insert(lhs);
    }

    while (!dirty.empty()) {
        // overlaps involving a dirty rule, composite length <= maxdeg; rules
        // are indexed by first and last letter so discovery is driven by the
        // dirty side instead of scanning all pairs
        std::set<Word, DeglexLess> todo;
        auto overlaps_of = [&](const Word& u, const Word& v, std::set<Word, DeglexLess>& acc) {
            size_t maxo = std::min(u.size(), v.size()) - 1;
            for (size_t o = 1; o <= maxo; ++o) {
                if (u.size() + v.size() - o > static_cast<size_t>(maxdeg)) continue;
                if (std::equal(v.begin(), v.begin() + o, u.end() - o)) {
                    Word w = u;
                    w.insert(w.end(), v.begin() + o, v.end());
                    acc.insert(std::move(w));
                }
            }
        };
        std::vector<std::vector<const Word*>> by_first(out.d_), by_last(out.d_);
        for (const auto& [l, r] : out.rules_) {
            (void)r;
            by_first[l.front()].push_back(&l);
            by_last[l.back()].push_back(&l);
        }
        for (const Word& u : dirty) {
            if (!out.rules_.count(u)) continue;  // displaced since marked
            // u on the left: a suffix of u is a prefix of v, so v starts with
            // one of u's trailing letters
            for (size_t start = 1; start < u.size(); ++start)
                for (const Word* v : by_first[u[start]]) overlaps_of(u, *v, todo);
            // u on the right: some rule ends with a prefix of u
            for (size_t o = 1; o < u.size(); ++o)
                for (const Word* w : by_last[u[o - 1]]) overlaps_of(*w, u, todo);
        }
        dirty.clear();
        for (const Word& w : todo) {
            // locate every rule occurrence by direct lookup
            std::vector<std::pair<size_t, Word>> occ;
            for (size_t pos = 0; pos < w.size(); ++pos) {
                for (size_t len = 2; len <= static_cast<size_t>(out.max_lhs_len_) &&
                                     pos + len <= w.size();
                     ++len) {
                    Word sub(w.begin() + pos, w.begin() + pos + len);
                    if (out.rules_.count(sub)) occ.emplace_back(pos, std::move(sub));
                }
            }
            if (occ.size() < 2) continue;
            auto reduce_at = [&](size_t pos, const Word& lhs) {
                Poly p;
                const Poly& rhs = out.rules_.at(lhs);
                for (const auto& [m, v] : rhs) {
                    Word nw(w.begin(), w.begin() + pos);
                    nw.insert(nw.end(), m.begin(), m.end());
                    nw.insert(nw.end(), w.begin() + pos + lhs.size(), w.end());
                    poly_add(p, Poly{{std::move(nw), v}}, Rat(1));
                }
                return out.normal_form(p);
            };
            Poly first = reduce_at(occ[0].first, occ[0].second);
            for (size_t k = 1; k < occ.size(); ++k) {
                Poly other = reduce_at(occ[k].first, occ[k].second);
                Poly diff = first;
                poly_add(diff, other, Rat(-1));
                if (!diff.empty()) insert_poly(std::move(diff), dirty);
            }
        }
    }
    // restore the reduced-rhs invariant
    for (auto& [lhs, rhs] : out.rules_) {
        (void)lhs;
        rhs = out.normal_form(rhs);
    }
    return out;
}

std::vector<Rat> series_inverse(const std::vector<Rat>& p, int N) {
    if (p.empty() || !(p[0] == Rat(1)))
        throw std::invalid_argument("series_inverse: constant term must be 1");
    // q(t) = p(-t); c = 1/q
    std::vector<Rat> q(p.size());
    for (size_t j = 0; j < p.size(); ++j) q[j] = (j % 2 == 0) ? p[j] : -p[j];
    std::vector<Rat> c(N + 1);
    c[0] = Rat(1);
    for (int m = 1; m <= N; ++m) {
        Rat s;
        for (size_t j = 1; j < q.size() && j <= static_cast<size_t>(m); ++j) s += q[j] * c[m - j];
        c[m] = -s;
    }
    return c;
}

std::vector<Rat> koszul_product(const std::vector<Rat>& p, const std::vector<Rat>& pdual, int N) {
    std::vector<Rat> out(N + 1);
    for (int m = 0; m <= N; ++m) {
        Rat s;
        for (int j = 0; j <= m; ++j) {
            if (j >= static_cast<int>(p.size())) break;
            int k = m - j;
            if (k >= static_cast<int>(pdual.size())) continue;
            Rat dual_term = (k % 2 == 0) ? pdual[k] : -pdual[k];
            s += p[j] * dual_term;
        }
        out[m] = s;
    }
    return out;
}

}  // namespace ybalg
