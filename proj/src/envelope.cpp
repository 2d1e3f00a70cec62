#include "ybalg/envelope.hpp"

#include <map>
#include <stdexcept>

namespace ybalg {

YbAlgebra build_yb(const GroupSpec& spec, RSquareSign rsq) {
    BraidedSpace y(spec, rsq);
    QuadPresentation cover = quad_kernel_presentation(y);
    QuadPresentation env = lambda_part(cover);
    env.provenance = "lambda-part(quad-kernel)";
    QuadPresentation ds = quadratic_dual(env, Pairing::Straight);
    QuadPresentation dr = quadratic_dual(env, Pairing::Reversed);
    return YbAlgebra{spec, std::move(y), std::move(cover), std::move(env), std::move(ds),
                     std::move(dr)};
}

DualReducer::DualReducer(const QuadPresentation& envelope, Pairing convention,
                         const MonomialOrder& order)
    : d_(envelope.dim()), order_(order) {
    // pairing profile of each two-letter word against the relation basis;
    // words with equal profiles are equal in the dual, zero profile is zero
    const auto& rels = envelope.relations.basis();
    int64_t nrel = envelope.relations.dim();
    auto profile = [&](int a, int b) {
        std::vector<Rat> v(nrel);
        int64_t col = convention == Pairing::Straight ? static_cast<int64_t>(a) * d_ + b
                                                      : static_cast<int64_t>(b) * d_ + a;
        for (int64_t k = 0; k < nrel; ++k) {
            for (const auto& [c, val] : rels[k].terms) {
                if (c == col) {
                    v[k] = val;
                    break;
                }
                if (c > col) break;
            }
        }
        return v;
    };
    struct Key {
        std::vector<std::string> repr;
        bool operator<(const Key& o) const { return repr < o.repr; }
    };
    auto key_of = [](const std::vector<Rat>& v, bool negate) {
        Key k;
        k.repr.reserve(v.size());
        for (const auto& x : v) k.repr.push_back((negate ? -x : x).to_string());
        return k;
    };
    // group representatives: first nonzero coordinate normalized positive
    std::map<Key, std::vector<std::pair<Rat, int64_t>>> classes;  // key -> [(scale to rep, pair)]
    std::vector<std::vector<Rat>> profiles(static_cast<size_t>(d_) * d_);
    table_.assign(static_cast<size_t>(d_) * d_, {});
    for (int a = 0; a < d_; ++a) {
        for (int b = 0; b < d_; ++b) {
            auto v = profile(a, b);
            bool zero = true;
            Rat lead;
            for (const auto& x : v)
                if (!x.is_zero()) {
                    lead = x;
                    zero = false;
                    break;
                }
            int64_t pair = static_cast<int64_t>(a) * d_ + b;
            if (zero) {
                table_[pair].zero = true;
                continue;
            }
            // scale so the first nonzero coordinate is 1: v = lead * unit
            std::vector<Rat> unit(v.size());
            for (size_t k = 0; k < v.size(); ++k) unit[k] = v[k] / lead;
            classes[key_of(unit, false)].emplace_back(lead, pair);
        }
    }
    auto rank_pair = [&](int64_t pair) {
        int a = static_cast<int>(pair / d_), b = static_cast<int>(pair % d_);
        return static_cast<int64_t>(order_.rank_of[a]) * d_ + order_.rank_of[b];
    };
    for (auto& [key, members] : classes) {
        (void)key;
        // canonical representative: deglex-least word in the class
        int64_t best = members[0].second;
        Rat best_scale = members[0].first;
        for (const auto& [scale, pair] : members) {
            if (rank_pair(pair) < rank_pair(best)) {
                best = pair;
                best_scale = scale;
            }
        }
        for (const auto& [scale, pair] : members) {
            auto& pc = table_[pair];
            pc.zero = false;
            pc.coeff = scale / best_scale;  // word = coeff * canonical
            pc.a = static_cast<int>(best / d_);
            pc.b = static_cast<int>(best % d_);
        }
    }
}

DualReducer::Result DualReducer::reduce(const std::vector<int>& word) const {
    Rat coeff(1);
    std::vector<int> w = word;
    for (int x : w)
        if (x < 0 || x >= d_) throw std::invalid_argument("DualReducer: letter out of range");
    // a repeated letter kills the word: two equal letters with no copy between
    // them anticommute together and square to zero
    auto has_duplicate = [](const std::vector<int>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j]) return true;
        return false;
    };
    bool changed = true;
    while (changed) {
        if (has_duplicate(w)) return {Rat(), {}};
        changed = false;
        for (size_t i = 0; i < w.size() && !changed; ++i) {
            for (size_t j = i + 1; j < w.size() && !changed; ++j) {
                const PairClass& pc = pair_class(w[i], w[j]);
                if (pc.zero) return {Rat(), {}};
                if (pc.a == w[i] && pc.b == w[j]) continue;
                // pull letter j next to i (each hop across a letter flips the sign),
                // then substitute the canonical pair
                if ((j - i - 1) % 2 == 1) coeff = -coeff;
                coeff *= pc.coeff;
                std::vector<int> nw;
                nw.reserve(w.size());
                for (size_t k = 0; k < i; ++k) nw.push_back(w[k]);
                nw.push_back(pc.a);
                nw.push_back(pc.b);
                for (size_t k = i + 1; k < w.size(); ++k)
                    if (k != j) nw.push_back(w[k]);
                w = std::move(nw);
                changed = true;
            }
        }
    }
    return {coeff, std::move(w)};
}

}  // namespace ybalg
