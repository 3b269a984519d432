#include "parehr/alcoved.hpp"

#include <algorithm>
#include <map>

#include "parehr/errors.hpp"

namespace parehr {

AlcovedSpec::AlcovedSpec(int dim, IntVec entries) : d(dim), b(std::move(entries)) {
    if (d < 1) throw ParseError("AlcovedSpec: d must be >= 1");
    if (b.size() != static_cast<std::size_t>(d * (d + 1)))
        throw ParseError("AlcovedSpec: expected " + std::to_string(d * (d + 1)) +
                         " entries, got " + std::to_string(b.size()));
}

std::vector<std::pair<int, int>> AlcovedSpec::pair_order(int d) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= d + 1; ++i)
        for (int j = 1; j <= d + 1; ++j)
            if (i != j) pairs.emplace_back(i, j);
    return pairs;
}

std::int64_t AlcovedSpec::at(int i, int j) const {
    const auto pairs = pair_order(d);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (pairs[k] == std::make_pair(i, j)) return b[k];
    throw ParseError("AlcovedSpec: no pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

std::vector<std::string> AlcovedSpec::labels() const {
    std::vector<std::string> out;
    for (auto [i, j] : pair_order(d)) out.push_back("b" + std::to_string(i) + std::to_string(j));
    return out;
}

HPolytope AlcovedSpec::polytope() const {
    return HPolytope(alcoved_matrix(d), b);
}

IntMat alcoved_matrix(int d) {
    IntMat rows;
    for (auto [i, j] : AlcovedSpec::pair_order(d)) {
        IntVec row(d, 0);
        if (i <= d) row[i - 1] = 1;
        if (j <= d) row[j - 1] = -1;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// Visits every constraint as (lhs_pair_a, lhs_pair_b, rhs_value): triangle
// b_ij + b_jk >= b_ik, and 2-cycle b_ij + b_ji >= 0 encoded with rhs = 0.
template <class Fn>
void for_each_metric_inequality(const AlcovedSpec& s, Fn fn) {
    for (int i = 1; i <= s.d + 1; ++i)
        for (int j = 1; j <= s.d + 1; ++j) {
            if (i == j) continue;
            fn(s.at(i, j) + s.at(j, i), std::int64_t{0}, i, j, i);  // 2-cycle
            for (int k = 1; k <= s.d + 1; ++k) {
                if (k == i || k == j) continue;
                fn(s.at(i, j) + s.at(j, k), s.at(i, k), i, j, k);
            }
        }
}

bool metric_holds(const AlcovedSpec& s, bool strict) {
    bool ok = true;
    for_each_metric_inequality(s, [&](std::int64_t lhs, std::int64_t rhs, int, int, int) {
        if (strict ? lhs <= rhs : lhs < rhs) ok = false;
    });
    return ok;
}

}  // namespace

bool is_tight_metric(const AlcovedSpec& s) {
    return metric_holds(s, /*strict=*/false);
}

bool is_maximal(const AlcovedSpec& s) {
    if (!is_tight_metric(s))
        throw NotMetricError("is_maximal: input violates a triangle inequality");
    if (!metric_holds(s, /*strict=*/true)) return false;
    // Strict triangle inequalities keep every facet irredundant but do not
    // rule out every wall of the type fan: for d >= 3 two shortest paths can
    // tie without any triangle being tight (e.g. b12+b23 = b14+b43), which
    // merges vertices into a non-simple one.  Interior of a maximal cone
    // means the polytope is simple, so test exactly that.
    try {
        enumerate_vertices(s.polytope());
        return true;
    } catch (const DegenerateError&) {
        return false;
    }
}

AlcovedSpec refine_to_maximal(const AlcovedSpec& s, std::uint64_t seed) {
    if (!is_tight_metric(s))
        throw NotMetricError("refine_to_maximal: input violates a triangle inequality");
    if (is_maximal(s)) return s;  // fixed point

    const std::int64_t lambda = s.d + 2;
    AlcovedSpec scaled = s;
    for (auto& v : scaled.b) v *= lambda;

    auto accept = [&](const AlcovedSpec& candidate) -> bool {
        if (!is_tight_metric(candidate) || !is_maximal(candidate)) return false;
        // coarsening witness: the scaled original b must sit in the closed
        // type cone of the refined polytope
        const HPolytope refined = candidate.polytope();
        const auto bases = enumerate_vertices(refined);
        return in_type_cone(refined, bases, scaled.b);
    };

    if (accept(scaled)) return scaled;

    // greedy: force every tight-or-violated inequality strict by decrementing
    // its right-hand side entry
    AlcovedSpec work = scaled;
    const auto pairs = AlcovedSpec::pair_order(s.d);
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t k = 0; k < pairs.size(); ++k) index[pairs[k]] = k;
    const int budget = 16 * s.d * s.d * s.d * static_cast<int>(lambda) + 64;
    for (int step = 0; step < budget; ++step) {
        bool changed = false;
        for_each_metric_inequality(work, [&](std::int64_t lhs, std::int64_t rhs, int i, int, int k) {
            if (changed || k == i) return;  // 2-cycles have no adjustable rhs entry
            if (lhs <= rhs) {
                work.b[index.at({i, k})] = lhs - 1;
                changed = true;
            }
        });
        if (!changed) break;
    }
    if (is_tight_metric(work) && accept(work)) return work;

    // fall back to seeded rejection sampling of small nonnegative bumps
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> bump(0, lambda - 1);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        AlcovedSpec candidate = scaled;
        for (auto& v : candidate.b) v += bump(rng);
        if (accept(candidate)) return candidate;
    }
    throw ExhaustedAttemptsError("refine_to_maximal: no maximal refinement found in budget");
}

AlcovedSpec random_alcoved(int d, std::int64_t range, std::mt19937_64& rng) {
    if (range < 1) throw ParseError("random_alcoved: range must be >= 1");
    std::uniform_int_distribution<std::int64_t> entry(0, range);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        IntVec b(static_cast<std::size_t>(d * (d + 1)));
        for (auto& v : b) v = entry(rng);
        AlcovedSpec s(d, std::move(b));
        if (is_tight_metric(s) && is_maximal(s)) return s;
    }
    throw ExhaustedAttemptsError("random_alcoved: retry budget exhausted");
}

AlcovedSpec random_alcoved(int d, std::int64_t range, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_alcoved(d, range, rng);
}

}  // namespace parehr
