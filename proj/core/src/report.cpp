#include "levi/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "levi/errors.hpp"

namespace levi {

using ojson = nlohmann::ordered_json;

Subject subject_from_graph(std::string name, Graph g) {
    return Subject{std::move(name), std::move(g), std::nullopt, std::nullopt};
}

Subject subject_from_arrangement(std::string name, const Arrangement& arr) {
    LeviGraph levi = build_levi(arr);
    Graph g = levi.graph;
    return Subject{std::move(name), std::move(g), std::move(levi), arr};
}

Subject subject_from_entry(const CatalogEntry& entry) {
    if (const auto* arr = std::get_if<Arrangement>(&entry.payload)) {
        return subject_from_arrangement(entry.name, *arr);
    }
    if (const auto* g = std::get_if<Graph>(&entry.payload)) return subject_from_graph(entry.name, *g);
    throw UnsupportedInputError("'" + entry.name +
                                "' is a count-only dataset; a Levi graph needs incidence data");
}

namespace {

std::vector<std::string> display(const Subject& s, const std::vector<std::string>& labels) {
    return s.levi ? to_arrangement_ids(*s.levi, labels) : labels;
}

bool c2k_applies(const Arrangement& arr) {
    if (arr.kind() != ArrangementKind::d_arrangement || !arr.complete() || arr.curve_count() < 4) {
        return false;
    }
    const TVector tv = t_vector(arr);
    if (tv[2] == 0) return false;
    for (const auto& [r, t] : tv.entries()) {
        if (r > 2) return false;
    }
    return true;
}

}  // namespace

InvariantReport build_report(const Subject& subject, const ReportOptions& options) {
    const Graph& g = subject.graph;
    InvariantReport r;
    r.name = subject.name;
    r.vertices = g.order();
    r.edges = g.size();
    r.connected = !g.empty() && is_connected(g);
    if (auto b = bipartition_of(g)) {
        r.bipartite = true;
        r.side_a = b->side_a.size();
        r.side_b = b->side_b.size();
    }
    r.leaf_count = leaves(g).size();

    if (subject.arrangement) {
        r.validation = validate(*subject.arrangement);
    }

    std::optional<std::vector<Cutset>> cutsets;
    std::string skip_reason;
    try {
        cutsets = enumerate_cutsets(g, options.cutsets);
    } catch (const ResourceLimitError& e) {
        skip_reason = e.what();
        r.notes.push_back("dimension skipped: " + skip_reason);
    }
    if (cutsets) {
        r.cutset_count = cutsets->size();
        r.dimension = dimension(*cutsets);
        r.unmixed = is_unmixed(*cutsets);
    }

    if (r.connected && !is_complete(g)) {
        r.kappa = vertex_connectivity(g);
        r.depth_upper_bound = static_cast<std::int64_t>(g.order()) + 2 - *r.kappa;
        if (r.dimension) {
            r.cmdef_lower_bound = std::max<std::int64_t>(0, *r.dimension - *r.depth_upper_bound);
        }
    } else {
        r.notes.push_back("depth bound skipped: needs a connected, non-complete graph");
    }

    std::optional<ArrangementContext> context;
    if (subject.arrangement) {
        context = ArrangementContext{subject.name, to_string(subject.arrangement->kind())};
    }
    r.verdict = cm_verdict(g, cutsets ? &*cutsets : nullptr, skip_reason, context);

    r.longest_path = longest_induced_path(g, options.paths);
    if (!r.longest_path.exact) {
        r.notes.push_back("longest induced path search hit its budget; regularity bounds use a lower estimate");
    }
    r.regularity = regularity_bounds(r.longest_path, options.powers);

    try {
        r.induced_c6 = find_induced_c6(g, options.c6);
    } catch (const ResourceLimitError& e) {
        r.notes.push_back(std::string("induced C6 search skipped: ") + e.what());
    }
    if (subject.arrangement && c2k_applies(*subject.arrangement)) {
        r.induced_c2k = find_induced_c2k(*subject.arrangement);
    }
    if (options.longest_cycle) r.longest_cycle = longest_induced_cycle(g, options.paths);

    if (subject.levi) {
        r.longest_path.path = display(subject, r.longest_path.path);
        if (r.induced_c6) r.induced_c6->sequence = display(subject, r.induced_c6->sequence);
        if (r.induced_c2k) r.induced_c2k->sequence = display(subject, r.induced_c2k->sequence);
        if (r.longest_cycle && r.longest_cycle->cycle) {
            r.longest_cycle->cycle->sequence = display(subject, r.longest_cycle->cycle->sequence);
        }
    }
    return r;
}

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

template <typename T>
std::string or_dash(const std::optional<T>& v) {
    if (!v) return "-";
    if constexpr (std::is_same_v<T, bool>) {
        return *v ? "yes" : "no";
    } else {
        return std::to_string(*v);
    }
}

}  // namespace

std::string render_text(const InvariantReport& r) {
    std::ostringstream out;
    auto row = [&](const std::string& key, const std::string& value) {
        out << std::left << std::setw(24) << key << value << "\n";
    };
    row("subject", r.name);
    row("vertices", std::to_string(r.vertices));
    row("edges", std::to_string(r.edges));
    row("connected", r.connected ? "yes" : "no");
    row("bipartite", r.bipartite ? std::to_string(r.side_a) + "/" + std::to_string(r.side_b) : "no");
    row("leaves", std::to_string(r.leaf_count));
    if (r.validation) {
        if (r.validation->checks.empty()) {
            row("validation", "skipped");
        } else {
            row("validation", r.validation->passed() ? "passed" : "FAILED");
        }
    }
    row("cutsets", or_dash(r.cutset_count));
    row("dimension", or_dash(r.dimension));
    row("unmixed", or_dash(r.unmixed));
    row("kappa", or_dash(r.kappa));
    row("depth <=", or_dash(r.depth_upper_bound));
    row("cmdef >=", or_dash(r.cmdef_lower_bound));
    row("cm verdict", std::string(to_string(r.verdict.status)) +
                          (r.verdict.reasons.empty() ? "" : " (" + join(r.verdict.reasons, ", ") + ")"));
    for (const auto& c : r.verdict.evidence) {
        row("  " + c.name, std::string(to_string(c.status)) + (c.detail.empty() ? "" : ": " + c.detail));
    }
    row("induced path", std::to_string(r.longest_path.length) + (r.longest_path.exact ? "" : " (lower estimate)") +
                            "  [" + join(r.longest_path.path, " ") + "]");
    for (const auto& b : r.regularity) {
        row("  reg t=" + std::to_string(b.power), ">= " + std::to_string(b.lower_bound));
    }
    row("induced C6", r.induced_c6 ? join(r.induced_c6->sequence, " ") : "none");
    if (r.induced_c2k) {
        row("induced C" + std::to_string(r.induced_c2k->length()), join(r.induced_c2k->sequence, " "));
    }
    if (r.longest_cycle) {
        const auto& lc = *r.longest_cycle;
        row("longest cycle", lc.cycle ? std::to_string(lc.cycle->length()) + (lc.exact ? "" : " (lower estimate)") +
                                            "  [" + join(lc.cycle->sequence, " ") + "]"
                                      : "none");
    }
    for (const auto& n : r.notes) row("note", n);
    return out.str();
}

namespace {

template <typename T>
ojson opt(const std::optional<T>& v) {
    return v ? ojson(*v) : ojson(nullptr);
}

ojson validation_json(const ValidationReport& v) {
    ojson checks = ojson::array();
    for (const auto& c : v.checks) {
        checks.push_back(ojson{{"equation", c.equation}, {"subject", c.subject}, {"lhs", c.lhs},
                               {"rhs", c.rhs}, {"passed", c.passed()}});
    }
    return ojson{{"passed", v.passed()}, {"checks", checks}, {"notes", v.notes}};
}

}  // namespace

std::string render_json(const InvariantReport& r) {
    ojson doc;
    doc["subject"] = r.name;
    doc["graph"] = ojson{{"vertices", r.vertices}, {"edges", r.edges}, {"connected", r.connected},
                         {"bipartite", r.bipartite}, {"side_a", r.side_a}, {"side_b", r.side_b},
                         {"leaves", r.leaf_count}};
    doc["validation"] = r.validation ? validation_json(*r.validation) : ojson(nullptr);
    doc["cutsets"] = opt(r.cutset_count);
    doc["dimension"] = opt(r.dimension);
    doc["unmixed"] = opt(r.unmixed);
    doc["kappa"] = opt(r.kappa);
    doc["depth_upper_bound"] = opt(r.depth_upper_bound);
    doc["cmdef_lower_bound"] = opt(r.cmdef_lower_bound);
    ojson evidence = ojson::array();
    for (const auto& c : r.verdict.evidence) {
        ojson data = ojson::object();
        for (const auto& [k, v] : c.data) data[k] = v;
        evidence.push_back(ojson{{"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail},
                                 {"data", data}});
    }
    doc["cm_verdict"] = ojson{{"status", to_string(r.verdict.status)}, {"reasons", r.verdict.reasons},
                              {"evidence", evidence}};
    doc["longest_induced_path"] = ojson{{"length", r.longest_path.length}, {"exact", r.longest_path.exact},
                                        {"path", r.longest_path.path}};
    ojson reg = ojson::array();
    for (const auto& b : r.regularity) {
        reg.push_back(ojson{{"power", b.power}, {"lower_bound", b.lower_bound},
                            {"path_length", b.path_length}, {"path_exact", b.path_exact}});
    }
    doc["regularity_lower_bounds"] = reg;
    doc["induced_c6"] = r.induced_c6 ? ojson(r.induced_c6->sequence) : ojson(nullptr);
    doc["induced_c2k"] = r.induced_c2k ? ojson(r.induced_c2k->sequence) : ojson(nullptr);
    if (r.longest_cycle) {
        doc["longest_induced_cycle"] =
            ojson{{"cycle", r.longest_cycle->cycle ? ojson(r.longest_cycle->cycle->sequence) : ojson(nullptr)},
                  {"exact", r.longest_cycle->exact}};
    }
    doc["notes"] = r.notes;
    return doc.dump(2) + "\n";
}

std::string render_cutsets_text(const Subject& s, const std::vector<Cutset>& cutsets, bool list_components) {
    std::ostringstream out;
    out << "subject " << s.name << ": " << cutsets.size() << " cutsets, dimension " << dimension(cutsets) << "\n";
    out << std::left << std::setw(8) << "omega" << std::setw(8) << "dim" << std::setw(8) << "height" << "members\n";
    for (const auto& c : cutsets) {
        const auto members = display(s, member_labels(s.graph, c));
        out << std::left << std::setw(8) << c.omega << std::setw(8) << c.dim_contribution << std::setw(8)
            << c.height << "{" << join(members, ", ") << "}\n";
        if (list_components) {
            VertexSet t(s.graph.order());
            for (auto v : c.members) t.set(v);
            for (const auto& comp : components_within(s.graph, s.graph.all() - t)) {
                out << std::string(24, ' ') << "component {"
                    << join(display(s, s.graph.labels_of(comp)), ", ") << "}\n";
            }
        }
    }
    return out.str();
}

std::string render_cutsets_json(const Subject& s, const std::vector<Cutset>& cutsets, bool list_components) {
    ojson list = ojson::array();
    for (const auto& c : cutsets) {
        ojson item{{"members", display(s, member_labels(s.graph, c))}, {"omega", c.omega},
                   {"dim_contribution", c.dim_contribution}, {"height", c.height}};
        if (list_components) {
            VertexSet t(s.graph.order());
            for (auto v : c.members) t.set(v);
            ojson comps = ojson::array();
            for (const auto& comp : components_within(s.graph, s.graph.all() - t)) {
                comps.push_back(display(s, s.graph.labels_of(comp)));
            }
            item["components"] = comps;
        }
        list.push_back(std::move(item));
    }
    ojson doc{{"subject", s.name}, {"count", cutsets.size()}, {"dimension", dimension(cutsets)},
              {"unmixed", is_unmixed(cutsets)}, {"cutsets", list}};
    return doc.dump(2) + "\n";
}

std::string render_validation_text(const std::string& name, const ValidationReport& v) {
    std::ostringstream out;
    out << "subject " << name << ": " << (v.passed() ? "passed" : "FAILED") << "\n";
    for (const auto& c : v.checks) {
        out << "  " << std::left << std::setw(10) << c.equation << std::setw(10) << c.subject << c.lhs
            << (c.passed() ? " = " : " != ") << c.rhs << "\n";
    }
    for (const auto& n : v.notes) out << "  note: " << n << "\n";
    return out.str();
}

std::string render_validation_json(const std::string& name, const ValidationReport& v) {
    ojson doc = validation_json(v);
    doc = ojson{{"subject", name}, {"passed", doc["passed"]}, {"checks", doc["checks"]}, {"notes", doc["notes"]}};
    return doc.dump(2) + "\n";
}

}  // namespace levi
