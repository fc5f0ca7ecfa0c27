#include "levi/levi_graph.hpp"

#include <algorithm>

#include "levi/errors.hpp"

namespace levi {

std::string point_label(const std::string& point_id) { return "x:" + point_id; }
std::string curve_label(const std::string& curve_id) { return "y:" + curve_id; }

LeviGraph build_levi(const Arrangement& arr) {
    LeviGraph levi;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& p : arr.points()) {
        const auto x = point_label(p.id);
        labels.push_back(x);
        levi.point_side.push_back(x);
        levi.origin.emplace(x, p.id);
        for (const auto& c : p.curves) edges.emplace_back(x, curve_label(c));
    }
    for (const auto& c : arr.curves()) {
        const auto y = curve_label(c.id);
        labels.push_back(y);
        levi.curve_side.push_back(y);
        levi.origin.emplace(y, c.id);
    }
    levi.graph = Graph(std::move(labels), edges);
    for (const auto& y : levi.curve_side) {
        if (levi.graph.degree(levi.graph.index_of(y)) == 0) {
            throw InputError("curve '" + levi.origin.at(y) +
                             "' carries no singular point; it would be an isolated Levi vertex");
        }
    }
    std::sort(levi.point_side.begin(), levi.point_side.end());
    std::sort(levi.curve_side.begin(), levi.curve_side.end());
    return levi;
}

LeviGraph quasi_pencil_graph(int k) {
    if (k < 3) throw InputError("quasi-pencil needs k >= 3 lines");
    LeviGraph levi;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    auto x = [](int i) { return point_label("p" + std::to_string(i)); };
    auto y = [](int i) { return curve_label("l" + std::to_string(i)); };
    for (int i = 1; i <= k; ++i) {
        labels.push_back(x(i));
        labels.push_back(y(i));
        levi.point_side.push_back(x(i));
        levi.curve_side.push_back(y(i));
        levi.origin.emplace(x(i), "p" + std::to_string(i));
        levi.origin.emplace(y(i), "l" + std::to_string(i));
        if (i == 2) continue;
        edges.emplace_back(x(2), y(i));
        edges.emplace_back(x(i), y(2));
        edges.emplace_back(x(i), y(i));
    }
    levi.graph = Graph(std::move(labels), edges);
    std::sort(levi.point_side.begin(), levi.point_side.end());
    std::sort(levi.curve_side.begin(), levi.curve_side.end());
    return levi;
}

std::vector<std::string> to_arrangement_ids(const LeviGraph& levi,
                                            const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& l : labels) {
        auto it = levi.origin.find(l);
        out.push_back(it == levi.origin.end() ? l : it->second);
    }
    return out;
}

}  // namespace levi
