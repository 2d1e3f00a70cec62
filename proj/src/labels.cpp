#include "ybalg/labels.hpp"

#include <stdexcept>

namespace ybalg {

std::string GenLabel::to_string() const {
    switch (kind) {
        case Kind::U:
            return "u(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::UU:
            return "uu(" + std::to_string(i) + "," + std::to_string(j) + ")";
        default:
            return "r(" + std::to_string(i) + ")";
    }
}

GenLabel GenLabel::parse(const std::string& s) {
    auto open = s.find('(');
    auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("GenLabel: cannot parse '" + s + "'");
    std::string head = s.substr(0, open);
    std::string body = s.substr(open + 1, close - open - 1);
    if (head == "r") {
        return {Kind::R, std::stoi(body), 0};
    }
    auto comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("GenLabel: cannot parse '" + s + "'");
    int i = std::stoi(body.substr(0, comma));
    int j = std::stoi(body.substr(comma + 1));
    if (i >= j) throw std::invalid_argument("GenLabel: indices must satisfy i<j in '" + s + "'");
    if (head == "u") return {Kind::U, i, j};
    if (head == "uu") return {Kind::UU, i, j};
    throw std::invalid_argument("GenLabel: unknown kind '" + head + "'");
}

std::vector<std::string> label_strings(const std::vector<GenLabel>& labels) {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(l.to_string());
    return out;
}

}  // namespace ybalg
