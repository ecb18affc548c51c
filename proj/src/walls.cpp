#include "toricg2/walls.hpp"

#include "toricg2/errors.hpp"
#include "toricg2/lattice.hpp"
#include "toricg2/linalg.hpp"

#include <algorithm>
#include <set>

namespace toricg2 {

WallRelation wall_relation(const Fan& fan, const Wall& wall) {
    const int d = fan.dim;
    // The d+1 rays involved: tau plus the two opposite rays, in index order.
    std::vector<int> involved = wall.tau;
    involved.push_back(wall.opp1);
    involved.push_back(wall.opp2);
    std::sort(involved.begin(), involved.end());
    require_internal(static_cast<int>(involved.size()) == d + 1,
                     "wall does not involve d+1 rays");

    std::vector<IVec> vecs;
    vecs.reserve(involved.size());
    for (int r : involved) vecs.push_back(fan.rays[r]);
    IVec dep = solve_dependency(vecs);  // primitive, first nonzero > 0

    WallRelation rel;
    rel.wall = wall;
    rel.coeffs.assign(fan.ray_count(), 0);
    for (size_t i = 0; i < involved.size(); ++i) rel.coeffs[involved[i]] = dep[i];

    // Normalize: the opposite rays sit on the same side of the wall's span,
    // so their coefficients share a sign; make it positive.
    const int s1 = sgn(rel.coeffs[wall.opp1]);
    const int s2 = sgn(rel.coeffs[wall.opp2]);
    if (s1 == 0 || s1 != s2)
        throw invalid_fan_error("degenerate wall");
    if (s1 < 0)
        for (Int& c : rel.coeffs) c = -c;
    return rel;
}

std::vector<WallRelation> all_wall_relations(const Fan& fan) {
    std::vector<WallRelation> rels;
    for (const Wall& w : fan_walls(fan)) rels.push_back(wall_relation(fan, w));
    return rels;
}

FanoReport fano_report(const Fan& fan) {
    FanoReport rep;
    rep.fano = true;
    bool first = true;
    for (const WallRelation& rel : all_wall_relations(fan)) {
        const Int s = rel.coeff_sum();
        rep.sums.push_back(s);
        if (first || s < rep.min_sum) {
            rep.min_sum = s;
            rep.min_wall_tau = rel.wall.tau;
            first = false;
        }
        if (s <= 0) rep.fano = false;
    }
    return rep;
}

bool is_fano(const Fan& fan) { return fano_report(fan).fano; }

namespace {

/// 2D coordinates of each wall class inside N_1 = ker(R^T), via an integer
/// kernel basis of the transposed ray matrix.
struct CurveClasses {
    std::vector<QVec> points;  ///< one (alpha, beta) per relation
};

CurveClasses project_classes(const Fan& fan, const std::vector<WallRelation>& rels) {
    const int n = fan.ray_count();
    const int d = fan.dim;
    // Relations live in { c in Z^n : sum_i c_i * ray_i = 0 }  =  ker(R^T),
    // where R is the n x d matrix of rays.  Its integer kernel basis has
    // rho = n - d rows; here rho = 2.
    IMat rt(d, IVec(n));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) rt[i][j] = fan.rays[j][i];
    const IMat basis = integer_kernel_basis(rt);
    require_internal(basis.size() == 2, "curve lattice is not 2-dimensional");

    // Find a coordinate pair where the basis is invertible, then read each
    // relation's coordinates from those two entries.
    int i0 = -1, i1 = -1;
    Int det = 0;
    for (int p = 0; p < n && i0 < 0; ++p)
        for (int q = p + 1; q < n; ++q) {
            det = basis[0][p] * basis[1][q] - basis[0][q] * basis[1][p];
            if (det != 0) {
                i0 = p;
                i1 = q;
                break;
            }
        }
    require_internal(i0 >= 0, "curve lattice basis is degenerate");

    CurveClasses out;
    for (const WallRelation& rel : rels) {
        // Solve (alpha, beta) * basis = rel at coordinates (i0, i1).
        const Rat w0(rel.coeffs[i0]), w1(rel.coeffs[i1]);
        const Rat alpha = (w0 * Rat(basis[1][i1]) - w1 * Rat(basis[1][i0])) / Rat(det);
        const Rat beta = (Rat(basis[0][i0]) * w1 - Rat(basis[0][i1]) * w0) / Rat(det);
        // Verify on all coordinates: the relation must equal the combination.
        for (int j = 0; j < n; ++j)
            require_internal(alpha * Rat(basis[0][j]) + beta * Rat(basis[1][j]) ==
                                 Rat(rel.coeffs[j]),
                             "wall relation lies outside the curve lattice");
        out.points.push_back({alpha, beta});
    }
    return out;
}

Rat cross2(const QVec& a, const QVec& b) { return a[0] * b[1] - a[1] * b[0]; }

} // namespace

Rho2Structure extremal_walls_rho2(const Fan& fan) {
    if (fan.rho() != 2)
        throw unsupported_error("fan does not have Picard number 2");

    const std::vector<WallRelation> rels = all_wall_relations(fan);
    require_internal(!rels.empty(), "fan has no walls");
    const CurveClasses classes = project_classes(fan, rels);
    const size_t nw = rels.size();

    // The wall classes span a strongly convex 2D cone (the Mori cone).
    // Its two boundary rays are the extremal classes.
    auto on_boundary = [&](size_t i, int side) {
        // side +1: every class has cross(p_i, p_j) >= 0;  side -1: <= 0.
        for (size_t j = 0; j < nw; ++j) {
            const Rat cr = cross2(classes.points[i], classes.points[j]);
            if (side > 0 ? cr < 0 : cr > 0) return false;
        }
        return true;
    };

    std::vector<size_t> left, right;  // candidate walls per boundary ray
    for (size_t i = 0; i < nw; ++i) {
        if (on_boundary(i, +1)) left.push_back(i);
        if (on_boundary(i, -1)) right.push_back(i);
    }
    if (left.empty() || right.empty())
        throw invalid_fan_error("wall classes do not span a convex cone");
    // Strong convexity: the two boundaries must be genuinely different rays
    // (otherwise all classes would be collinear) and no two candidates from
    // opposite boundaries may point opposite ways on a line.
    {
        const QVec& pl = classes.points[left.front()];
        const QVec& pr = classes.points[right.front()];
        if (cross2(pl, pr) == 0)
            throw invalid_fan_error("wall classes do not span a 2-dimensional cone");
        for (size_t i : left)
            for (size_t j : left)
                require_internal(cross2(classes.points[i], classes.points[j]) == 0 &&
                                     classes.points[i][0] * classes.points[j][0] +
                                             classes.points[i][1] * classes.points[j][1] >
                                         0,
                                 "boundary wall classes disagree");
        for (size_t i : right)
            for (size_t j : right)
                require_internal(cross2(classes.points[i], classes.points[j]) == 0 &&
                                     classes.points[i][0] * classes.points[j][0] +
                                             classes.points[i][1] * classes.points[j][1] >
                                         0,
                                 "boundary wall classes disagree");
    }

    // Representative wall per extremal class: lexicographically smallest tau.
    auto representative = [&](const std::vector<size_t>& cand) {
        size_t best = cand.front();
        for (size_t i : cand)
            if (rels[i].wall.tau < rels[best].wall.tau) best = i;
        return best;
    };
    const WallRelation rel_a = rels[representative(left)];
    const WallRelation rel_b = rels[representative(right)];

    // Positive supports must partition the rays into the two sides.
    const int n = fan.ray_count();
    auto positive_support = [&](const WallRelation& rel) {
        std::set<int> s;
        for (int r = 0; r < n; ++r)
            if (rel.coeffs[r] > 0) s.insert(r);
        return s;
    };
    const std::set<int> side_a = positive_support(rel_a);
    const std::set<int> side_b = positive_support(rel_b);
    {
        std::vector<int> overlap;
        std::set_intersection(side_a.begin(), side_a.end(), side_b.begin(),
                              side_b.end(), std::back_inserter(overlap));
        if (!overlap.empty() ||
            side_a.size() + side_b.size() != static_cast<size_t>(n))
            throw invalid_fan_error(
                "extremal relations do not split the rays into two sides");
    }

    Rho2Structure out;
    const bool a_is_x = side_a.count(0) > 0;
    out.rel_x = a_is_x ? rel_a : rel_b;
    out.rel_y = a_is_x ? rel_b : rel_a;
    out.x_side.assign(a_is_x ? side_a.begin() : side_b.begin(),
                      a_is_x ? side_a.end() : side_b.end());
    out.y_side.assign(a_is_x ? side_b.begin() : side_a.begin(),
                      a_is_x ? side_b.end() : side_a.end());
    if (out.x_side.size() < 2 || out.y_side.size() < 2)
        throw invalid_fan_error("each side must contain at least two rays");

    // Sign sanity on both relations (fail loudly rather than guess).
    for (int r : out.x_side) {
        require_internal(out.rel_x.coeffs[r] > 0, "x-side coefficient not positive");
        require_internal(out.rel_y.coeffs[r] <= 0, "x-side cross coefficient positive");
    }
    for (int r : out.y_side) {
        require_internal(out.rel_y.coeffs[r] > 0, "y-side coefficient not positive");
        require_internal(out.rel_x.coeffs[r] <= 0, "y-side cross coefficient positive");
    }

    // The distinguished last ray of a side is the unique ray not involved in
    // the other side's representative wall.
    auto absent_ray = [&](const WallRelation& rel) {
        std::set<int> involved(rel.wall.tau.begin(), rel.wall.tau.end());
        involved.insert(rel.wall.opp1);
        involved.insert(rel.wall.opp2);
        int absent = -1;
        for (int r = 0; r < n; ++r)
            if (!involved.count(r)) {
                require_internal(absent < 0, "wall misses more than one ray");
                absent = r;
            }
        require_internal(absent >= 0, "wall misses no ray");
        return absent;
    };
    out.y_last = absent_ray(out.rel_x);
    out.x_last = absent_ray(out.rel_y);
    if (!std::binary_search(out.y_side.begin(), out.y_side.end(), out.y_last) ||
        !std::binary_search(out.x_side.begin(), out.x_side.end(), out.x_last))
        throw invalid_fan_error("distinguished rays land on the wrong side");

    // Chains: remaining rays of each side sorted by ratio, ties by index.
    auto build_chain = [](const std::vector<int>& side, int last, auto num,
                          auto den) {
        std::vector<int> chain;
        for (int r : side)
            if (r != last) chain.push_back(r);
        std::stable_sort(chain.begin(), chain.end(), [&](int p, int q) {
            // num/den ascending; den is positive on the own side.
            const Rat rp = Rat(num(p)) / Rat(den(p));
            const Rat rq = Rat(num(q)) / Rat(den(q));
            if (rp != rq) return rp < rq;
            return p < q;
        });
        return chain;
    };
    out.x_chain = build_chain(out.x_side, out.x_last,
                              [&](int r) { return out.d(r); },
                              [&](int r) { return out.a(r); });
    out.y_chain = build_chain(out.y_side, out.y_last,
                              [&](int r) { return out.c(r); },
                              [&](int r) { return out.b(r); });
    return out;
}

std::string relation_string(const Fan& fan, const WallRelation& rel) {
    auto side = [&](int sign) {
        std::string out;
        for (int r = 0; r < fan.ray_count(); ++r) {
            const Int& c = rel.coeffs[r];
            if (sign_of(c) != sign) continue;
            if (!out.empty()) out += " + ";
            const Int mag = abs(c);
            if (mag != 1) out += to_string(mag) + "*";
            out += "x" + std::to_string(r + 1);
        }
        return out.empty() ? std::string("0") : out;
    };
    return side(1) + " = " + side(-1);
}

} // namespace toricg2
