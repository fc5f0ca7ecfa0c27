#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "levi/arrangement.hpp"
#include "levi/graph.hpp"

namespace levi {

/// k lines with one (k-1)-fold point p2 on every line but l2, and the k-1
/// double points p_j = l2 ∩ l_j. Throws InputError for k < 3.
Arrangement quasi_pencil(int k);

/// k lines through one point p1. Throws InputError for k < 3.
Arrangement pencil_lines(int k);

/// k curves of degree d, every pair meeting in d^2 distinct double points
/// p_i_j_m. Throws InputError for d < 1 or k < 3.
Arrangement generic(int d, int k);

/// Projective plane over the prime field F_p as a line arrangement: points
/// and lines are the 1- and 2-dimensional subspaces of F_p^3.
/// Supported p: 2 (Fano plane) and 3.
Arrangement projective_plane(int p);

/// Path v1 - v2 - ... - vn.
Graph path_graph(int n);
/// Cycle v1 - ... - vn - v1, n >= 3.
Graph cycle_graph(int n);
/// Star K_{1,k}: "center" joined to leaf1..leafk.
Graph star_graph(int k);

using CatalogPayload = std::variant<Arrangement, Graph, CountOnlyDataset>;

struct CatalogEntry {
    std::string name;
    CatalogPayload payload;
    std::string provenance;
};

/// Named fixtures: p4, four_conics_three_lines, dual_hesse,
/// dual_hesse_incidence, hesse_conics, hesse_conic_line, cremona_klein,
/// conic_pencil, halphen_fragment.
std::vector<CatalogEntry> fixtures();
std::optional<CatalogEntry> find_fixture(const std::string& name);

/// Resolves generator names (quasi-pencil, pencil, generic,
/// projective-plane, fano, path, cycle, star) with integer parameters
/// (k, d, p, n), or a fixture name. Throws InputError for unknown names or
/// missing/invalid parameters.
CatalogEntry make_catalog_entry(const std::string& name, const std::map<std::string, int>& params);

/// Generator and fixture names accepted by make_catalog_entry.
std::vector<std::string> catalog_names();

/// The test corpus: quasi-pencils k=3..7, pencils k=3..6, generic (d, k) for
/// d in {1,2}, k in {3,4,5}, projective planes p=2,3, plus all fixtures.
std::vector<CatalogEntry> standard_corpus();

}  // namespace levi
