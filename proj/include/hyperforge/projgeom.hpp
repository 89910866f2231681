#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperforge/element_set.hpp"
#include "hyperforge/hyperfield.hpp"

namespace hyperforge {

/// Incidence structure on points 0..points-1. Lines are sorted point lists,
/// themselves kept in sorted order. When built from a hyperfield, point p is
/// the element p+1.
struct ProjectiveGeometry {
    int points = 0;
    std::vector<std::vector<int>> lines;
    std::string source;
};

/// Lines {x, y} u (x + y) over distinct nonzero x, y. Accepts CC
/// hyperfields and characteristic-2 fields (x + x = {0}). Throws
/// PreconditionError otherwise, for carriers below 3, or when two points
/// would lie on two different lines.
ProjectiveGeometry geometry_of(const FiniteHyperfield& h);

/// Size of a greedy spanning set (points taken in index order, span closed
/// under joining lines) minus one.
int dimension(const ProjectiveGeometry& g);

enum class Verdict { Pass, Fail, Vacuous, DegenerateAdmitted };

/// "pass", "fail", "vacuous", "degenerate_admitted".
std::string verdict_name(Verdict v);

struct IncidenceReport {
    /// Every line has two or more points; each pair of points is on exactly one line.
    Verdict pair_uniqueness = Verdict::Pass;
    std::optional<std::pair<int, int>> offending_pair;
    /// If ab and cd meet off a, b, c, d then so do ac and bd.
    Verdict veblen_young = Verdict::Pass;
    std::vector<int> veblen_young_witness; // a, b, c, d
    /// Lines have three or more points, or there is only one line.
    Verdict thickness = Verdict::Pass;

    bool ok() const { return pair_uniqueness != Verdict::Fail && veblen_young != Verdict::Fail && thickness != Verdict::Fail; }
};

IncidenceReport check_incidence_axioms(const ProjectiveGeometry& g);

inline constexpr int kMaxDesarguesPoints = 40;

/// Checks every pair of centrally perspective triangles for axial
/// perspectivity. PreconditionError when the dimension is below 2,
/// BoundError above kMaxDesarguesPoints.
bool is_desarguesian(const ProjectiveGeometry& g);

/// The same geometry with point p renamed perm[p].
ProjectiveGeometry permuted(const ProjectiveGeometry& g, const std::vector<int>& perm);

} // namespace hyperforge
