#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace levi {

enum class ArrangementKind { d_arrangement, conic_line };

const char* to_string(ArrangementKind kind);

struct Curve {
    std::string id;
    int degree = 1;

    friend bool operator==(const Curve&, const Curve&) = default;
};

struct SingularPoint {
    std::string id;
    std::vector<std::string> curves;  // sorted, unique

    std::size_t multiplicity() const noexcept { return curves.size(); }

    friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

/// Incidence combinatorics of a plane curve arrangement: curves with their
/// degrees and singular points with the set of curves through each.
///
/// Construction enforces: unique ids, ids match [A-Za-z0-9_]+, incident
/// curves exist, every point has multiplicity >= 2, and the kind-specific
/// degree rules (a d-arrangement has k >= 3 curves all of degree d; a
/// conic-line arrangement has n lines and k conics). Violations throw
/// InputError.
class Arrangement {
public:
    static Arrangement d_arrangement(int d, std::vector<Curve> curves,
                                     std::vector<SingularPoint> points, bool complete);
    static Arrangement conic_line(int lines, int conics, std::vector<Curve> curves,
                                  std::vector<SingularPoint> points, bool complete);

    ArrangementKind kind() const noexcept { return kind_; }
    /// Common degree; only meaningful for d-arrangements.
    int d() const noexcept { return d_; }
    /// Number of lines in a conic-line arrangement.
    int line_count() const noexcept { return lines_; }
    /// Number of conics in a conic-line arrangement.
    int conic_count() const noexcept { return conics_; }
    /// Number of curves (k for a d-arrangement).
    std::size_t curve_count() const noexcept { return curves_.size(); }
    bool complete() const noexcept { return complete_; }

    const std::vector<Curve>& curves() const noexcept { return curves_; }
    const std::vector<SingularPoint>& points() const noexcept { return points_; }

    const Curve* find_curve(const std::string& id) const;
    bool incident(const SingularPoint& p, const std::string& curve_id) const;

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    Arrangement() = default;
    void check_common() const;

    ArrangementKind kind_ = ArrangementKind::d_arrangement;
    int d_ = 0;
    int lines_ = 0;
    int conics_ = 0;
    std::vector<Curve> curves_;
    std::vector<SingularPoint> points_;
    bool complete_ = false;
};

bool is_valid_id(const std::string& id);

/// t_r counts: number of points of multiplicity exactly r.
class TVector {
public:
    TVector() = default;
    /// Throws InputError for r < 2 or negative counts. Zero entries are dropped.
    explicit TVector(std::map<int, std::int64_t> entries);

    std::int64_t operator[](int r) const;
    std::int64_t point_count() const;
    const std::map<int, std::int64_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const TVector&, const TVector&) = default;

private:
    std::map<int, std::int64_t> entries_;
};

TVector t_vector(const Arrangement& arr);

/// Parameters of a t-vector-only dataset (no incidence).
struct CountParams {
    ArrangementKind kind = ArrangementKind::d_arrangement;
    int d = 1;       // d-arrangement degree
    int k = 0;       // curves (d-arrangement) or conics (conic-line)
    int n = 0;       // lines (conic-line)
};

struct CountOnlyDataset {
    std::string name;
    CountParams params;
    TVector counts;
};

/// One combinatorial identity with both sides evaluated.
struct EquationCheck {
    std::string equation;  // "global", "per_curve", "per_line", "per_conic"
    std::string subject;   // "*" for global identities, otherwise the curve id
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;

    bool passed() const noexcept { return lhs == rhs; }
};

struct ValidationReport {
    std::vector<EquationCheck> checks;
    std::vector<std::string> notes;

    bool passed() const;
    std::vector<EquationCheck> failures() const;
};

std::int64_t choose2(std::int64_t n);

/// Global count d^2 C(k,2) = sum_p C(m_p,2) and, for every curve,
/// d^2 (k-1) = sum over points on it of (m_p - 1).
/// Throws PreconditionError unless arr is a complete d-arrangement.
ValidationReport validate_d_arrangement(const Arrangement& arr);

/// Global count 4 C(k,2) + C(n,2) + 2kn = sum_r C(r,2) t_r, per line
/// (n-1) + 2k = sum (m_p - 1), per conic 2n + 4(k-1) = sum (m_p - 1).
/// Throws PreconditionError unless arr is a complete conic-line arrangement.
ValidationReport validate_conic_line(const Arrangement& arr);

/// Global identity only, for datasets that carry no incidence.
ValidationReport validate_counts_only(const TVector& tv, const CountParams& params);

/// Dispatch on kind. Incomplete arrangements get an empty report with a note.
ValidationReport validate(const Arrangement& arr);

}  // namespace levi
