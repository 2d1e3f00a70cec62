#include "ybalg/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ybalg {

std::string GroupSpec::to_string() const {
    const char* s = series == Series::A ? "A" : (series == Series::B ? "B" : "D");
    return std::string(s) + ":" + std::to_string(rank);
}

GroupSpec GroupSpec::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("GroupSpec: expected SERIES:RANK");
    std::string ser = s.substr(0, colon);
    int n = std::stoi(s.substr(colon + 1));
    if (n < 1) throw std::invalid_argument("GroupSpec: rank must be positive");
    if (ser == "A") return {Series::A, n};
    if (ser == "B") return {Series::B, n};
    if (ser == "D") return {Series::D, n};
    throw std::invalid_argument("GroupSpec: unknown series " + ser);
}

SignedPerm SignedPerm::identity(int n) {
    SignedPerm p;
    p.img.resize(n);
    p.sgn.assign(n, 1);
    for (int i = 0; i < n; ++i) p.img[i] = i;
    return p;
}

bool SignedPerm::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img[i] != i || sgn[i] != 1) return false;
    return true;
}

SignedPerm operator*(const SignedPerm& g, const SignedPerm& h) {
    // (g*h)(e_i) = g(h(e_i))
    SignedPerm r;
    int n = g.n();
    r.img.resize(n);
    r.sgn.resize(n);
    for (int i = 0; i < n; ++i) {
        r.img[i] = g.img[h.img[i]];
        r.sgn[i] = static_cast<int8_t>(h.sgn[i] * g.sgn[h.img[i]]);
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    int m = n();
    r.img.resize(m);
    r.sgn.resize(m);
    for (int i = 0; i < m; ++i) {
        r.img[img[i]] = i;
        r.sgn[img[i]] = sgn[i];
    }
    return r;
}

int SignedPerm::flips() const {
    int c = 0;
    for (int8_t s : sgn)
        if (s < 0) ++c;
    return c;
}

bool SignedPerm::in_group(const GroupSpec& spec) const {
    switch (spec.series) {
        case Series::A:
            return flips() == 0;
        case Series::D:
            return flips() % 2 == 0;
        case Series::B:
            return true;
    }
    return false;
}

std::string RootLabel::to_string() const {
    switch (kind) {
        case Kind::Transposition:
            return "s(e" + std::to_string(i) + "-e" + std::to_string(j) + ")";
        case Kind::DoubleTransposition:
            return "s(e" + std::to_string(i) + "+e" + std::to_string(j) + ")";
        case Kind::ShortRoot:
            return "s(e" + std::to_string(i) + ")";
    }
    return "";
}

SignedPerm reflection_element(const GroupSpec& spec, const RootLabel& label) {
    int n = spec.rank;
    SignedPerm p = SignedPerm::identity(n);
    switch (label.kind) {
        case RootLabel::Kind::Transposition:
            std::swap(p.img[label.i - 1], p.img[label.j - 1]);
            break;
        case RootLabel::Kind::DoubleTransposition:
            std::swap(p.img[label.i - 1], p.img[label.j - 1]);
            p.sgn[label.i - 1] = -1;
            p.sgn[label.j - 1] = -1;
            break;
        case RootLabel::Kind::ShortRoot:
            p.sgn[label.i - 1] = -1;
            break;
    }
    return p;
}

std::vector<Reflection> enumerate_reflections(const GroupSpec& spec) {
    int n = spec.rank;
    std::vector<Reflection> out;
    auto make = [&](RootLabel lbl) {
        Reflection r;
        r.label = lbl;
        r.elem = reflection_element(spec, lbl);
        r.alpha.assign(n, 0);
        r.alpha_co.assign(n, 0);
        switch (lbl.kind) {
            case RootLabel::Kind::Transposition:
                r.alpha[lbl.i - 1] = 1;
                r.alpha[lbl.j - 1] = -1;
                r.alpha_co = r.alpha;
                break;
            case RootLabel::Kind::DoubleTransposition:
                r.alpha[lbl.i - 1] = 1;
                r.alpha[lbl.j - 1] = 1;
                r.alpha_co = r.alpha;
                break;
            case RootLabel::Kind::ShortRoot:
                r.alpha[lbl.i - 1] = 1;
                r.alpha_co[lbl.i - 1] = 2;
                break;
        }
        out.push_back(std::move(r));
    };
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            make({RootLabel::Kind::Transposition, i, j});
    if (spec.series == Series::B || spec.series == Series::D) {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                make({RootLabel::Kind::DoubleTransposition, i, j});
    }
    if (spec.series == Series::B) {
        for (int k = 1; k <= n; ++k) make({RootLabel::Kind::ShortRoot, k, 0});
    }
    return out;
}

int64_t reflection_count(const GroupSpec& spec) {
    int64_t n = spec.rank;
    switch (spec.series) {
        case Series::A:
            return n * (n - 1) / 2;
        case Series::D:
            return n * (n - 1);
        case Series::B:
            return n * n;
    }
    return 0;
}

int64_t group_order(const GroupSpec& spec) {
    int64_t f = 1;
    for (int i = 2; i <= spec.rank; ++i) f *= i;
    int64_t two = 1;
    int exp = spec.series == Series::B ? spec.rank : (spec.series == Series::D ? spec.rank - 1 : 0);
    for (int i = 0; i < exp; ++i) two *= 2;
    return f * two;
}

Reflection conjugate(const GroupSpec& spec, const SignedPerm& g, const Reflection& s) {
    SignedPerm t = g * s.elem * g.inverse();
    for (const auto& r : enumerate_reflections(spec)) {
        if (r.elem == t) return r;
    }
    throw std::logic_error("conjugate: g s g^-1 is not a reflection");
}

std::vector<SignedPerm> enumerate_group(const GroupSpec& spec) {
    std::set<SignedPerm> seen;
    std::vector<SignedPerm> frontier{SignedPerm::identity(spec.rank)};
    seen.insert(frontier[0]);
    auto gens = enumerate_reflections(spec);
    while (!frontier.empty()) {
        std::vector<SignedPerm> next;
        for (const auto& g : frontier) {
            for (const auto& s : gens) {
                SignedPerm h = g * s.elem;
                if (seen.insert(h).second) next.push_back(h);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace ybalg
