#include "ybalg/morphisms.hpp"

#include <stdexcept>

namespace ybalg {

SignedPerm GeneratorMap::embed_group(const SignedPerm& g) const {
    SignedPerm h = SignedPerm::identity(target.rank);
    for (int i = 0; i < g.n(); ++i) {
        h.img[i] = g.img[i];
        h.sgn[i] = g.sgn[i];
    }
    return h;
}

SignedPerm GeneratorMap::project_group(const SignedPerm& g) const {
    if (!has_projection())
        throw std::invalid_argument("project_group: only the cross-series maps project");
    SignedPerm h = SignedPerm::identity(source.rank);
    for (int i = 0; i < source.rank; ++i) h.img[i] = g.img[i];
    return h;
}

GeneratorMap build_map(const std::string& kind) {
    auto split = [&](const std::string& s) {
        std::vector<std::string> parts;
        size_t pos = 0;
        while (pos != std::string::npos) {
            size_t c = s.find(':', pos);
            parts.push_back(s.substr(pos, c == std::string::npos ? c : c - pos));
            pos = c == std::string::npos ? c : c + 1;
        }
        return parts;
    };
    auto parts = split(kind);
    GeneratorMap m;
    m.kind = kind;
    if (parts.size() == 2 && (parts[0] == "AtoD" || parts[0] == "AtoB")) {
        int n = std::stoi(parts[1]);
        m.source = {Series::A, n};
        m.target = {parts[0] == "AtoD" ? Series::D : Series::B, n};
    } else if (parts.size() == 3 && parts[0] == "step") {
        GroupSpec s = GroupSpec::parse(parts[1] + ":" + parts[2]);
        m.source = s;
        m.target = {s.series, s.rank + 1};
    } else {
        throw std::invalid_argument("build_map: unknown kind '" + kind + "'");
    }
    for (const auto& r : enumerate_reflections(m.source)) {
        GenLabel l = GenLabel::from_root(r.label);
        m.source_gens.push_back(l);
        m.target_of.push_back(l);  // labels map identically in every series map
    }
    return m;
}

MorphismCheck check_morphism(const GeneratorMap& m, const YbAlgebra& src, const YbAlgebra& tgt) {
    MorphismCheck out{true, true, {}, false};

    // coaction: the target degree of the image equals the embedded source degree
    for (size_t k = 0; k < m.source_gens.size(); ++k) {
        const SignedPerm& ds = src.space.coaction(m.source_gens[k]);
        const SignedPerm& dt = tgt.space.coaction(m.target_of[k]);
        if (!(dt == m.embed_group(ds))) out.coaction_compatible = false;
    }

    // index translation source -> target on tensor squares
    int ds_ = src.space.dim(), dt_ = tgt.space.dim();
    std::vector<int> tgt_index(ds_);
    for (int k = 0; k < ds_; ++k) tgt_index[k] = tgt.space.index_of(m.target_of[k]);
    auto map_pair_vec = [&](const RatVec& v) {
        std::vector<std::pair<int64_t, Rat>> terms;
        for (const auto& [col, c] : v.terms) {
            int a = static_cast<int>(col / ds_), b = static_cast<int>(col % ds_);
            terms.emplace_back(static_cast<int64_t>(tgt_index[a]) * dt_ + tgt_index[b], c);
        }
        std::sort(terms.begin(), terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        RatVec w;
        w.terms = std::move(terms);
        return w;
    };

    for (int64_t k = 0; k < src.envelope.relations.dim(); ++k) {
        RatVec image = map_pair_vec(src.envelope.relations.basis()[k]);
        if (!tgt.envelope.relations.contains(image)) {
            out.relations_preserved = false;
            out.failing_relations.push_back("envelope-relation[" + std::to_string(k) + "]");
        }
    }

    // degree-2 perfect subquotient: R_target restricted to the image tensor
    // square equals the image of R_source
    std::vector<RatVec> image_rows;
    for (const auto& v : src.envelope.relations.basis()) image_rows.push_back(map_pair_vec(v));
    Subspace image_r = Subspace::from_rows(static_cast<int64_t>(dt_) * dt_, std::move(image_rows));
    std::vector<RatVec> image_square;
    for (int a = 0; a < ds_; ++a)
        for (int b = 0; b < ds_; ++b) {
            RatVec v;
            v.push(static_cast<int64_t>(tgt_index[a]) * dt_ + tgt_index[b], Rat(1));
            image_square.push_back(std::move(v));
        }
    Subspace w = Subspace::from_rows(static_cast<int64_t>(dt_) * dt_, std::move(image_square));
    out.perfect_subquotient_deg2 = (intersect(tgt.envelope.relations, w) == image_r);
    return out;
}

MorphismCheck check_morphism(const GeneratorMap& m) {
    YbAlgebra src = build_yb(m.source);
    YbAlgebra tgt = build_yb(m.target);
    return check_morphism(m, src, tgt);
}

}  // namespace ybalg
