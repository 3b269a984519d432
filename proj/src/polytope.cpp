#include "parehr/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "parehr/errors.hpp"

namespace parehr {

namespace {

// Calls fn(subset) for every k-subset of {0..n-1}, in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

QMat submatrix(const IntMat& A, const std::vector<int>& rows) {
    QMat m;
    m.reserve(rows.size());
    for (int r : rows) {
        QVec row;
        row.reserve(A[r].size());
        for (auto v : A[r]) row.emplace_back(static_cast<long>(v));
        m.push_back(std::move(row));
    }
    return m;
}

QVec subvector(const IntVec& b, const std::vector<int>& rows) {
    QVec v;
    v.reserve(rows.size());
    for (int r : rows) v.emplace_back(static_cast<long>(b[r]));
    return v;
}

bool satisfies(const IntMat& A, const QVec& b, const QVec& x) {
    for (std::size_t i = 0; i < A.size(); ++i) {
        Rational lhs(0);
        for (std::size_t j = 0; j < x.size(); ++j) lhs += Rational(static_cast<long>(A[i][j])) * x[j];
        if (lhs > b[i]) return false;
    }
    return true;
}

QVec to_qvec(const IntVec& b) {
    QVec q;
    q.reserve(b.size());
    for (auto v : b) q.emplace_back(static_cast<long>(v));
    return q;
}

struct VertexInfo {
    QVec point;
    std::vector<int> tight;  // all tight rows at the point
};

// Shared basic-solution scan: every feasible point A_I^{-1} b_I over
// nonsingular d-subsets I, dedup'd, with full tight sets.
std::vector<VertexInfo> scan_vertices(const IntMat& A, const IntVec& b) {
    const int n = static_cast<int>(A.size());
    const int d = n ? static_cast<int>(A[0].size()) : 0;
    const QVec bq = to_qvec(b);
    std::set<QVec> seen;
    std::vector<VertexInfo> out;
    for_each_subset(n, d, [&](const std::vector<int>& I) {
        auto x = mat_solve(submatrix(A, I), subvector(b, I));
        if (!x) return;
        if (!satisfies(A, bq, *x)) return;
        if (!seen.insert(*x).second) return;
        VertexInfo vi;
        vi.point = *x;
        for (int r = 0; r < n; ++r) {
            Rational lhs(0);
            for (int j = 0; j < d; ++j) lhs += Rational(static_cast<long>(A[r][j])) * (*x)[j];
            if (lhs == bq[r]) vi.tight.push_back(r);
        }
        out.push_back(std::move(vi));
    });
    std::sort(out.begin(), out.end(),
              [](const VertexInfo& a, const VertexInfo& b2) { return a.point < b2.point; });
    return out;
}

}  // namespace

HPolytope::HPolytope(IntMat a, IntVec b) : A(std::move(a)), b0(std::move(b)) {
    if (A.empty()) throw DegenerateError("HPolytope: empty constraint matrix");
    const std::size_t d = A[0].size();
    if (d == 0) throw DegenerateError("HPolytope: zero-dimensional ambient space");
    for (const auto& row : A)
        if (row.size() != d) throw DegenerateError("HPolytope: ragged constraint matrix");
    if (b0.size() != A.size()) throw DegenerateError("HPolytope: |b0| != number of rows");
    if (A.size() < d + 1)
        throw DegenerateError("HPolytope: need at least d+1 facets for a bounded polytope");
}

bool is_bounded(const IntMat& A) {
    const int n = static_cast<int>(A.size());
    const int d = n ? static_cast<int>(A[0].size()) : 0;
    QMat full = submatrix(A, [&] {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }());
    if (mat_rank(full) < d) return false;  // recession cone contains a line direction
    const QVec zero(n, Rational(0));
    bool ray_found = false;
    // extreme rays of {Ax <= 0} lie on d-1 independent tight rows
    for_each_subset(n, d - 1, [&](const std::vector<int>& J) {
        if (ray_found) return;
        auto kernel = mat_kernel(submatrix(A, J));
        if (kernel.size() != 1) return;
        for (int s : {1, -1}) {
            QVec r = kernel[0];
            for (auto& c : r) c *= Rational(s);
            if (satisfies(A, zero, r)) {
                ray_found = true;
                return;
            }
        }
    });
    return !ray_found;
}

std::vector<QVec> basic_feasible_points(const IntMat& A, const IntVec& b) {
    std::vector<QVec> pts;
    for (auto& vi : scan_vertices(A, b)) pts.push_back(std::move(vi.point));
    return pts;
}

std::string format_point(const QVec& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i].str();
    }
    os << ")";
    return os.str();
}

std::vector<VertexBasis> enumerate_vertices(const HPolytope& P) {
    if (!is_bounded(P.A)) throw UnboundedError("enumerate_vertices: P_A(b) is unbounded");
    auto infos = scan_vertices(P.A, P.b0);
    if (infos.empty()) throw DegenerateError("enumerate_vertices: P_A(b0) is empty");
    const int d = P.d();
    // full-dimensionality: no row may be tight at every vertex
    for (int r = 0; r < P.n(); ++r) {
        bool slack_somewhere = false;
        for (const auto& vi : infos)
            if (std::find(vi.tight.begin(), vi.tight.end(), r) == vi.tight.end()) {
                slack_somewhere = true;
                break;
            }
        if (!slack_somewhere)
            throw DegenerateError("enumerate_vertices: not full-dimensional (facet " +
                                  std::to_string(r) + " is tight on all of P)");
    }
    std::vector<VertexBasis> out;
    out.reserve(infos.size());
    for (const auto& vi : infos) {
        if (static_cast<int>(vi.tight.size()) > d)
            throw DegenerateError("enumerate_vertices: non-simple vertex " +
                                  format_point(vi.point) + " with " +
                                  std::to_string(vi.tight.size()) + " tight facets");
        VertexBasis vb;
        vb.facet_set = vi.tight;  // == the defining d-subset, already sorted
        auto inv = mat_inverse(submatrix(P.A, vi.tight));
        assert(inv);
        vb.inverse = std::move(*inv);
        vb.vertex = vi.point;
        out.push_back(std::move(vb));
    }
    return out;
}

ParametricVertex parametric_vertex(const VertexBasis& vb) {
    const auto d = vb.inverse.size();
    ParametricVertex pv;
    pv.coords.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        MPoly c;
        for (std::size_t k = 0; k < d; ++k) {
            const auto row = static_cast<std::uint32_t>(vb.facet_set[k]);
            const Rational& a = vb.inverse[i][k];
            if (a.is_zero()) continue;
            c += MPoly::variable(VarId::b(row)).scaled(a);
            c += MPoly::variable(VarId::h(row)).scaled(a);
        }
        pv.coords.push_back(std::move(c));
    }
    return pv;
}

bool is_smooth(const HPolytope& P) {
    if (!is_bounded(P.A)) throw UnboundedError("is_smooth: P_A(b) is unbounded");
    auto infos = scan_vertices(P.A, P.b0);
    if (infos.empty()) throw DegenerateError("is_smooth: P_A(b0) is empty");
    const int d = P.d();
    for (const auto& vi : infos) {
        if (static_cast<int>(vi.tight.size()) != d) return false;  // non-simple
        Rational det = mat_det(submatrix(P.A, vi.tight));
        if (!(det == Rational(1) || det == Rational(-1))) return false;
    }
    return true;
}

bool in_type_cone(const HPolytope& P, const std::vector<VertexBasis>& bases, const QVec& b) {
    for (const auto& vb : bases) {
        QVec bI;
        bI.reserve(vb.facet_set.size());
        for (int r : vb.facet_set) bI.push_back(b[r]);
        const QVec x = mat_apply(vb.inverse, bI);
        if (!satisfies(P.A, b, x)) return false;
    }
    return true;
}

bool in_type_cone(const HPolytope& P, const std::vector<VertexBasis>& bases, const IntVec& b) {
    return in_type_cone(P, bases, to_qvec(b));
}

namespace {

// Sign of det(q2-q1, ..., qd-q1, x-q1): which side of the facet's hyperplane
// x falls on.
int orient_side(const std::vector<QVec>& pts, const std::vector<int>& facet, const QVec& x) {
    const std::size_t d = x.size();
    QMat m;
    m.reserve(d);
    for (std::size_t i = 1; i < facet.size(); ++i) {
        QVec row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = pts[facet[i]][j] - pts[facet[0]][j];
        m.push_back(std::move(row));
    }
    QVec last(d);
    for (std::size_t j = 0; j < d; ++j) last[j] = x[j] - pts[facet[0]][j];
    m.push_back(std::move(last));
    return mat_det(std::move(m)).sign();
}

int simplex_orientation(const std::vector<QVec>& pts, const std::vector<int>& simplex) {
    const std::size_t d = pts[0].size();
    QMat m;
    m.reserve(d);
    for (std::size_t i = 1; i < simplex.size(); ++i) {
        QVec row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = pts[simplex[i]][j] - pts[simplex[0]][j];
        m.push_back(std::move(row));
    }
    return mat_det(std::move(m)).sign();
}

}  // namespace

ParametricTriangulation triangulate(const HPolytope& P, const std::vector<VertexBasis>& bases,
                                    std::uint64_t order_seed) {
    const int d = P.d();
    const int nv = static_cast<int>(bases.size());
    if (nv < d + 1) throw DegenerateError("triangulate: fewer than d+1 vertices");

    std::vector<QVec> pts;
    pts.reserve(nv);
    for (const auto& vb : bases) pts.push_back(vb.vertex);

    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[a] < pts[b]; });
    if (order_seed != 0) {
        std::mt19937_64 rng(order_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    // seed simplex: greedily extend to d+1 affinely independent points
    std::vector<int> seed;
    std::vector<int> rest;
    for (int id : order) {
        if (static_cast<int>(seed.size()) == d + 1) {
            rest.push_back(id);
            continue;
        }
        std::vector<int> candidate = seed;
        candidate.push_back(id);
        if (candidate.size() >= 2) {
            QMat m;
            for (std::size_t i = 1; i < candidate.size(); ++i) {
                QVec row(d);
                for (int j = 0; j < d; ++j) row[j] = pts[candidate[i]][j] - pts[candidate[0]][j];
                m.push_back(std::move(row));
            }
            if (mat_rank(std::move(m)) < static_cast<int>(candidate.size()) - 1) {
                rest.push_back(id);
                continue;
            }
        }
        seed.push_back(id);
    }
    if (static_cast<int>(seed.size()) < d + 1)
        throw DegenerateError("triangulate: vertex set is not full-dimensional");
    std::sort(seed.begin(), seed.end());

    std::vector<std::vector<int>> simplices{seed};
    // facet -> (#incident simplices, apex point of the first incident simplex)
    std::map<std::vector<int>, std::pair<int, int>> facets;
    auto add_simplex_facets = [&](const std::vector<int>& s) {
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            std::vector<int> f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip) f.push_back(s[i]);
            auto [it, inserted] = facets.emplace(std::move(f), std::make_pair(1, s[skip]));
            if (!inserted) it->second.first++;
        }
    };
    add_simplex_facets(seed);

    for (int p : rest) {
        std::vector<std::vector<int>> visible;
        for (const auto& [f, info] : facets) {
            if (info.first != 1) continue;
            const int side_p = orient_side(pts, f, pts[p]);
            if (side_p == 0) continue;
            const int side_apex = orient_side(pts, f, pts[info.second]);
            assert(side_apex != 0);
            if (side_p != side_apex) visible.push_back(f);
        }
        assert(!visible.empty());
        for (const auto& f : visible) {
            std::vector<int> s = f;
            s.push_back(p);
            std::sort(s.begin(), s.end());
            simplices.push_back(s);
            add_simplex_facets(s);
        }
    }

    std::sort(simplices.begin(), simplices.end());

    ParametricTriangulation tri;
    tri.d = d;
    tri.vertex_points = pts;
    tri.vertices.reserve(nv);
    for (const auto& vb : bases) tri.vertices.push_back(parametric_vertex(vb));
    for (const auto& s : simplices) {
        const int sign = simplex_orientation(pts, s);
        assert(sign != 0);
        tri.simplices.push_back(s);
        tri.orientation_signs.push_back(sign);
    }
    return tri;
}

std::vector<ParametricVertex> ParametricTriangulation::simplex_vertices(std::size_t s) const {
    std::vector<ParametricVertex> out;
    out.reserve(simplices[s].size());
    for (int id : simplices[s]) out.push_back(vertices[id]);
    return out;
}

MPoly parametric_volume(const std::vector<ParametricVertex>& simplex, int sign) {
    const std::size_t d = simplex.empty() ? 0 : simplex[0].coords.size();
    assert(simplex.size() == d + 1);
    std::vector<std::vector<MPoly>> m(d, std::vector<MPoly>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m[i][j] = simplex[i + 1].coords[j] - simplex[0].coords[j];
    MPoly det = mpoly_det(m);
    return det.scaled(Rational(sign) / factorial(static_cast<unsigned>(d)));
}

MPoly parametric_volume(const ParametricTriangulation& tri) {
    MPoly total;
    for (std::size_t s = 0; s < tri.simplices.size(); ++s)
        total += parametric_volume(tri.simplex_vertices(s), tri.orientation_signs[s]);
    return total;
}

}  // namespace parehr
