#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levi/arrangement.hpp"
#include "levi/catalog.hpp"
#include "levi/cm_analysis.hpp"
#include "levi/cutsets.hpp"
#include "levi/cycles.hpp"
#include "levi/levi_graph.hpp"

namespace levi {

/// What a report is computed for: a bare graph, or the Levi graph of an
/// arrangement (then witnesses are translated to arrangement ids).
struct Subject {
    std::string name;
    Graph graph;
    std::optional<LeviGraph> levi;
    std::optional<Arrangement> arrangement;
};

Subject subject_from_graph(std::string name, Graph g);
Subject subject_from_arrangement(std::string name, const Arrangement& arr);
/// Throws UnsupportedInputError for count-only datasets.
Subject subject_from_entry(const CatalogEntry& entry);

struct ReportOptions {
    int powers = 3;
    CutsetOptions cutsets;
    PathSearchOptions paths;
    C6SearchOptions c6;
    /// Also search for a longest induced cycle.
    bool longest_cycle = false;
};

struct InvariantReport {
    std::string name;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool connected = false;
    bool bipartite = false;
    std::size_t side_a = 0;
    std::size_t side_b = 0;
    std::size_t leaf_count = 0;

    std::optional<ValidationReport> validation;

    std::optional<std::size_t> cutset_count;
    std::optional<std::int64_t> dimension;
    std::optional<bool> unmixed;
    std::optional<int> kappa;
    std::optional<std::int64_t> depth_upper_bound;
    std::optional<std::int64_t> cmdef_lower_bound;
    CmVerdict verdict;

    InducedPath longest_path;
    std::vector<RegularityBound> regularity;

    std::optional<CycleWitness> induced_c6;
    std::optional<CycleWitness> induced_c2k;
    std::optional<InducedCycle> longest_cycle;

    /// Why a quantity is absent (cap exceeded, graph class, hypotheses).
    std::vector<std::string> notes;
};

InvariantReport build_report(const Subject& subject, const ReportOptions& options = {});

/// Aligned human-readable table.
std::string render_text(const InvariantReport& report);
/// JSON with a fixed key order.
std::string render_json(const InvariantReport& report);

/// Cutset dump with omega, dimension contribution, height and optionally
/// the components of G \ T.
std::string render_cutsets_text(const Subject& subject, const std::vector<Cutset>& cutsets, bool list_components);
std::string render_cutsets_json(const Subject& subject, const std::vector<Cutset>& cutsets, bool list_components);

std::string render_validation_text(const std::string& name, const ValidationReport& report);
std::string render_validation_json(const std::string& name, const ValidationReport& report);

}  // namespace levi
