#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "parehr/polytope.hpp"

namespace parehr {

/// Type-A alcoved polytope data: the inequalities x_i - x_j <= b_ij over
/// ordered pairs of distinct i, j in [d+1], with x_{d+1} = 0 by convention.
/// Entries are stored in the canonical lexicographic pair order
/// (1,2), (1,3), ..., (1,d+1), (2,1), (2,3), ..., (d+1,d).
struct AlcovedSpec {
    int d = 0;
    IntVec b;  // size d*(d+1), canonical pair order

    AlcovedSpec(int dim, IntVec entries);

    /// Canonical ordered pairs (1-based), aligned with b.
    static std::vector<std::pair<int, int>> pair_order(int d);

    /// b_{ij} accessor with 1-based i, j.
    std::int64_t at(int i, int j) const;

    /// Row labels "b12", "b13", ... matching the canonical order.
    std::vector<std::string> labels() const;

    HPolytope polytope() const;
};

/// Facet normal rows e_i - e_j (with e_{d+1} = 0) in the canonical pair order;
/// n = d(d+1) rows.
IntMat alcoved_matrix(int d);

/// All triangle inequalities b_ij + b_jk >= b_ik over distinct ordered
/// triples, plus the 2-cycle conditions b_ij + b_ji >= 0 (implied by the
/// triangles for d >= 2, needed for d = 1 where no triples exist).
bool is_tight_metric(const AlcovedSpec& s);

/// Strict versions of all the inequalities above.  Maximal alcoved polytopes
/// are exactly these; they are smooth with C(2d, d) vertices.
/// Throws NotMetricError when the input is not tight to begin with.
bool is_maximal(const AlcovedSpec& s);

/// Produces a maximal b' whose normal fan refines the input's: scale by
/// Lambda = d+2, repair zero-slack inequalities by greedy unit decrements,
/// and fall back to seeded rejection sampling of perturbations when greedy
/// stalls.  Postcondition (checked): in_type_cone(P(b'), bases(b'), Lambda*b).
AlcovedSpec refine_to_maximal(const AlcovedSpec& s, std::uint64_t seed = 1);

/// Rejection-samples a maximal AlcovedSpec with entries in [0, range];
/// deterministic given the engine state.  Throws ExhaustedAttemptsError
/// after the retry budget.
AlcovedSpec random_alcoved(int d, std::int64_t range, std::mt19937_64& rng);
AlcovedSpec random_alcoved(int d, std::int64_t range, std::uint64_t seed);

}  // namespace parehr
