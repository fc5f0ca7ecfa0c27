#include "levi/arrangement.hpp"

#include <algorithm>
#include <set>

#include "levi/errors.hpp"

namespace levi {

const char* to_string(ArrangementKind kind) {
    switch (kind) {
        case ArrangementKind::d_arrangement: return "d-arrangement";
        case ArrangementKind::conic_line: return "conic-line";
    }
    return "?";
}

bool is_valid_id(const std::string& id) {
    return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
               (c >= '0' && c <= '9') || c == '_';
    });
}

namespace {

void normalise_points(std::vector<SingularPoint>& points) {
    for (auto& p : points) {
        std::sort(p.curves.begin(), p.curves.end());
        if (auto dup = std::adjacent_find(p.curves.begin(), p.curves.end());
            dup != p.curves.end()) {
            throw InputError("point '" + p.id + "' lists curve '" + *dup + "' twice");
        }
    }
}

}  // namespace

void Arrangement::check_common() const {
    std::set<std::string> curve_ids;
    for (const auto& c : curves_) {
        if (!is_valid_id(c.id)) throw InputError("invalid curve id '" + c.id + "'");
        if (!curve_ids.insert(c.id).second) throw InputError("duplicate curve id '" + c.id + "'");
        if (c.degree < 1) throw InputError("curve '" + c.id + "' has non-positive degree");
    }
    std::set<std::string> point_ids;
    for (const auto& p : points_) {
        if (!is_valid_id(p.id)) throw InputError("invalid point id '" + p.id + "'");
        if (!point_ids.insert(p.id).second) throw InputError("duplicate point id '" + p.id + "'");
        if (p.multiplicity() < 2) {
            throw InputError("point '" + p.id + "' has multiplicity " +
                             std::to_string(p.multiplicity()) +
                             "; a singular point lies on at least two curves");
        }
        for (const auto& c : p.curves) {
            if (!curve_ids.contains(c)) {
                throw InputError("point '" + p.id + "' references unknown curve '" + c + "'");
            }
        }
    }
}

Arrangement Arrangement::d_arrangement(int d, std::vector<Curve> curves,
                                       std::vector<SingularPoint> points, bool complete) {
    if (d < 1) throw InputError("d-arrangement degree must be positive");
    if (curves.size() < 3) throw InputError("a d-arrangement needs at least 3 curves");
    for (const auto& c : curves) {
        if (c.degree != d) {
            throw InputError("curve '" + c.id + "' has degree " + std::to_string(c.degree) +
                             " in a " + std::to_string(d) + "-arrangement");
        }
    }
    normalise_points(points);
    Arrangement a;
    a.kind_ = ArrangementKind::d_arrangement;
    a.d_ = d;
    a.curves_ = std::move(curves);
    a.points_ = std::move(points);
    a.complete_ = complete;
    a.check_common();
    return a;
}

Arrangement Arrangement::conic_line(int lines, int conics, std::vector<Curve> curves,
                                    std::vector<SingularPoint> points, bool complete) {
    int seen_lines = 0;
    int seen_conics = 0;
    for (const auto& c : curves) {
        if (c.degree == 1) {
            ++seen_lines;
        } else if (c.degree == 2) {
            ++seen_conics;
        } else {
            throw InputError("curve '" + c.id + "' has degree " + std::to_string(c.degree) +
                             "; conic-line arrangements allow degrees 1 and 2");
        }
    }
    if (seen_lines != lines || seen_conics != conics) {
        throw InputError("declared n=" + std::to_string(lines) + ", k=" + std::to_string(conics) +
                         " but curves contain " + std::to_string(seen_lines) + " lines and " +
                         std::to_string(seen_conics) + " conics");
    }
    normalise_points(points);
    Arrangement a;
    a.kind_ = ArrangementKind::conic_line;
    a.lines_ = lines;
    a.conics_ = conics;
    a.curves_ = std::move(curves);
    a.points_ = std::move(points);
    a.complete_ = complete;
    a.check_common();
    return a;
}

const Curve* Arrangement::find_curve(const std::string& id) const {
    for (const auto& c : curves_) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

bool Arrangement::incident(const SingularPoint& p, const std::string& curve_id) const {
    return std::binary_search(p.curves.begin(), p.curves.end(), curve_id);
}

TVector::TVector(std::map<int, std::int64_t> entries) {
    for (const auto& [r, t] : entries) {
        if (r < 2) throw InputError("t-vector index r must be at least 2");
        if (t < 0) throw InputError("t-vector entries must be non-negative");
        if (t > 0) entries_.emplace(r, t);
    }
}

std::int64_t TVector::operator[](int r) const {
    auto it = entries_.find(r);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t TVector::point_count() const {
    std::int64_t s = 0;
    for (const auto& [r, t] : entries_) s += t;
    return s;
}

TVector t_vector(const Arrangement& arr) {
    std::map<int, std::int64_t> counts;
    for (const auto& p : arr.points()) ++counts[static_cast<int>(p.multiplicity())];
    return TVector(std::move(counts));
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

std::vector<EquationCheck> ValidationReport::failures() const {
    std::vector<EquationCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
                 [](const auto& c) { return !c.passed(); });
    return out;
}

namespace {

std::int64_t weighted_pair_count(const TVector& tv) {
    std::int64_t s = 0;
    for (const auto& [r, t] : tv.entries()) s += choose2(r) * t;
    return s;
}

std::int64_t excess_on_curve(const Arrangement& arr, const std::string& curve_id) {
    std::int64_t s = 0;
    for (const auto& p : arr.points()) {
        if (arr.incident(p, curve_id)) s += static_cast<std::int64_t>(p.multiplicity()) - 1;
    }
    return s;
}

void require_complete(const Arrangement& arr, ArrangementKind expected, const char* op) {
    if (arr.kind() != expected) {
        throw PreconditionError(std::string(op) + " called on a " + to_string(arr.kind()) +
                                " arrangement");
    }
    if (!arr.complete()) {
        throw PreconditionError(std::string(op) +
                                " requires complete incidence data (complete=true)");
    }
}

}  // namespace

ValidationReport validate_d_arrangement(const Arrangement& arr) {
    require_complete(arr, ArrangementKind::d_arrangement, "validate_d_arrangement");
    ValidationReport report;
    const std::int64_t d2 = static_cast<std::int64_t>(arr.d()) * arr.d();
    const auto k = static_cast<std::int64_t>(arr.curve_count());
    report.checks.push_back({"global", "*", d2 * choose2(k), weighted_pair_count(t_vector(arr))});
    for (const auto& c : arr.curves()) {
        report.checks.push_back({"per_curve", c.id, d2 * (k - 1), excess_on_curve(arr, c.id)});
    }
    return report;
}

ValidationReport validate_conic_line(const Arrangement& arr) {
    require_complete(arr, ArrangementKind::conic_line, "validate_conic_line");
    ValidationReport report;
    const std::int64_t n = arr.line_count();
    const std::int64_t k = arr.conic_count();
    report.checks.push_back(
        {"global", "*", 4 * choose2(k) + choose2(n) + 2 * k * n, weighted_pair_count(t_vector(arr))});
    for (const auto& c : arr.curves()) {
        if (c.degree == 1) {
            report.checks.push_back({"per_line", c.id, (n - 1) + 2 * k, excess_on_curve(arr, c.id)});
        } else {
            report.checks.push_back({"per_conic", c.id, 2 * n + 4 * (k - 1), excess_on_curve(arr, c.id)});
        }
    }
    return report;
}

ValidationReport validate_counts_only(const TVector& tv, const CountParams& params) {
    ValidationReport report;
    std::int64_t lhs = 0;
    if (params.kind == ArrangementKind::d_arrangement) {
        const std::int64_t d2 = static_cast<std::int64_t>(params.d) * params.d;
        lhs = d2 * choose2(params.k);
    } else {
        const std::int64_t n = params.n;
        const std::int64_t k = params.k;
        lhs = 4 * choose2(k) + choose2(n) + 2 * k * n;
    }
    report.checks.push_back({"global", "*", lhs, weighted_pair_count(tv)});
    report.notes.push_back("count-only dataset: per-curve identities skipped");
    return report;
}

ValidationReport validate(const Arrangement& arr) {
    if (!arr.complete()) {
        ValidationReport report;
        report.notes.push_back("incomplete incidence data: count identities skipped");
        return report;
    }
    return arr.kind() == ArrangementKind::d_arrangement ? validate_d_arrangement(arr)
                                                        : validate_conic_line(arr);
}

}  // namespace levi
