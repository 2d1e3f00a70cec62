// Generator labels u(i,j), uu(i,j), r(k) in bijection with the reflections.
#pragma once

#include <string>
#include <vector>

#include "ybalg/group.hpp"

namespace ybalg {

struct GenLabel {
    enum class Kind { U, UU, R };
    Kind kind;
    int i = 0, j = 0;  // 1-based, i<j for U/UU; j unused for R

    bool operator==(const GenLabel& o) const { return kind == o.kind && i == o.i && j == o.j; }
    bool operator<(const GenLabel& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }

    std::string to_string() const;
    static GenLabel parse(const std::string& s);

    RootLabel root() const {
        switch (kind) {
            case Kind::U:
                return {RootLabel::Kind::Transposition, i, j};
            case Kind::UU:
                return {RootLabel::Kind::DoubleTransposition, i, j};
            default:
                return {RootLabel::Kind::ShortRoot, i, 0};
        }
    }
    static GenLabel from_root(const RootLabel& r) {
        switch (r.kind) {
            case RootLabel::Kind::Transposition:
                return {Kind::U, r.i, r.j};
            case RootLabel::Kind::DoubleTransposition:
                return {Kind::UU, r.i, r.j};
            default:
                return {Kind::R, r.i, 0};
        }
    }
};

std::vector<std::string> label_strings(const std::vector<GenLabel>& labels);

}  // namespace ybalg
