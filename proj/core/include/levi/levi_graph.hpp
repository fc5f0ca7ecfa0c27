#pragma once

#include <map>
#include <string>
#include <vector>

#include "levi/arrangement.hpp"
#include "levi/graph.hpp"

namespace levi {

/// Bipartite point/curve incidence graph of an arrangement.
///
/// Point vertices are labelled "x:<point-id>", curve vertices "y:<curve-id>".
struct LeviGraph {
    Graph graph;
    std::vector<std::string> point_side;
    std::vector<std::string> curve_side;
    /// Vertex label -> arrangement id.
    std::map<std::string, std::string> origin;

    friend bool operator==(const LeviGraph&, const LeviGraph&) = default;
};

std::string point_label(const std::string& point_id);
std::string curve_label(const std::string& curve_id);

/// Throws InputError when a curve carries no singular point.
LeviGraph build_levi(const Arrangement& arr);

/// Levi graph of the quasi-pencil of k lines: the (k-1)-fold point p2 lies on
/// every line except l2, and each p_j (j != 2) is the double point l2 ∩ l_j.
/// Throws InputError for k < 3.
LeviGraph quasi_pencil_graph(int k);

/// Translate Levi labels to arrangement ids; labels without an origin pass
/// through unchanged.
std::vector<std::string> to_arrangement_ids(const LeviGraph& levi,
                                            const std::vector<std::string>& labels);

}  // namespace levi
