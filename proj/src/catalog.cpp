#include "toricg2/catalog.hpp"

#include "toricg2/errors.hpp"

#include <algorithm>

namespace toricg2 {

namespace {

IVec unit(int d, int i) {
    IVec v(d, Int(0));
    v[i] = 1;
    return v;
}

Fan finish(Fan fan) {
    std::sort(fan.max_cones.begin(), fan.max_cones.end());
    require_valid(fan);
    return fan;
}

} // namespace

Fan projective_space(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    Fan fan;
    fan.dim = d;
    for (int i = 0; i < d; ++i) fan.rays.push_back(unit(d, i));
    fan.rays.push_back(IVec(d, Int(-1)));
    for (int omit = 0; omit <= d; ++omit) {
        std::vector<int> cone;
        for (int r = 0; r <= d; ++r)
            if (r != omit) cone.push_back(r);
        fan.max_cones.push_back(std::move(cone));
    }
    return finish(std::move(fan));
}

Fan hirzebruch(const Int& a) {
    if (a < 0) throw std::invalid_argument("parameter must be nonnegative");
    Fan fan;
    fan.dim = 2;
    fan.rays = {IVec{1, 0}, IVec{0, 1}, IVec{-1, a}, IVec{0, -1}};
    fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return finish(std::move(fan));
}

Fan weighted_p2_112() {
    Fan fan;
    fan.dim = 2;
    fan.rays = {IVec{0, 1}, IVec{1, 0}, IVec{-1, -2}};
    fan.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    return finish(std::move(fan));
}

Fan product_p1_p1() {
    Fan fan;
    fan.dim = 2;
    fan.rays = {IVec{1, 0}, IVec{-1, 0}, IVec{0, 1}, IVec{0, -1}};
    fan.max_cones = {{0, 2}, {1, 2}, {1, 3}, {0, 3}};
    return finish(std::move(fan));
}

Fan blowup_p2(int k) {
    if (k < 0 || k > 3)
        throw std::invalid_argument("blow-up count must be between 0 and 3");
    // Cyclically ordered boundary rays of P^2, then subdivide k corners.
    std::vector<IVec> cycle = {IVec{1, 0}, IVec{0, 1}, IVec{-1, -1}};
    const std::vector<IVec> inserts = {IVec{1, 1}, IVec{0, -1}, IVec{-1, 0}};
    std::vector<IVec> order = {IVec{1, 0}, IVec{0, 1}, IVec{-1, -1}};
    for (int i = 0; i < k; ++i) order.push_back(inserts[i]);
    for (int i = 0; i < k; ++i) {
        const IVec& p = inserts[i];
        for (size_t j = 0; j < cycle.size(); ++j) {
            const IVec& u = cycle[j];
            const IVec& w = cycle[(j + 1) % cycle.size()];
            if (u[0] + w[0] == p[0] && u[1] + w[1] == p[1]) {
                cycle.insert(cycle.begin() + static_cast<long>(j) + 1, p);
                break;
            }
        }
    }
    require_internal(cycle.size() == 3 + static_cast<size_t>(k),
                     "blow-up ray was not between its corner rays");

    Fan fan;
    fan.dim = 2;
    fan.rays = order;
    auto index_of = [&](const IVec& v) {
        for (size_t i = 0; i < order.size(); ++i)
            if (order[i] == v) return static_cast<int>(i);
        throw internal_error("cycle ray missing from ray order");
    };
    for (size_t j = 0; j < cycle.size(); ++j) {
        std::vector<int> cone{index_of(cycle[j]),
                              index_of(cycle[(j + 1) % cycle.size()])};
        std::sort(cone.begin(), cone.end());
        fan.max_cones.push_back(std::move(cone));
    }
    return finish(std::move(fan));
}

Fan terminal_fano_4fold() {
    Fan fan;
    fan.dim = 4;
    fan.rays = {unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3),
                IVec{-1, -2, -1, 0}, IVec{0, -1, -2, -1}};
    // Maximal cones omit one of {x1, x2, x5} and one of {x3, x4, x6};
    // the cone omitting x5 and x6 is the positive orthant.
    for (int ox : {0, 1, 4})
        for (int oy : {2, 3, 5}) {
            std::vector<int> cone;
            for (int r = 0; r < 6; ++r)
                if (r != ox && r != oy) cone.push_back(r);
            fan.max_cones.push_back(std::move(cone));
        }
    return finish(std::move(fan));
}

Fan terminal_fano_dfold(int d) {
    if (d < 4) throw std::invalid_argument("dimension must be at least 4");
    Fan fan;
    fan.dim = d;
    for (int i = 0; i < d - 2; ++i) fan.rays.push_back(unit(d, i));
    IVec xdm1(d, Int(0));
    for (int i = 0; i < d - 2; ++i) xdm1[i] = -1;
    xdm1[d - 2] = -(d - 2);
    fan.rays.push_back(xdm1);              // x_{d-1}
    fan.rays.push_back(unit(d, d - 2));    // x_d
    IVec y1(d, Int(0));
    y1[d - 2] = -1;
    y1[d - 1] = -1;
    fan.rays.push_back(y1);                // y_1
    fan.rays.push_back(unit(d, d - 1));    // y_2
    // Omit one of the d x-rays and one of the two y-rays: 2d maximal cones.
    for (int ox = 0; ox < d; ++ox)
        for (int oy = d; oy < d + 2; ++oy) {
            std::vector<int> cone;
            for (int r = 0; r < d + 2; ++r)
                if (r != ox && r != oy) cone.push_back(r);
            fan.max_cones.push_back(std::move(cone));
        }
    return finish(std::move(fan));
}

Fan gorenstein_fano_3fold() {
    Fan fan;
    fan.dim = 3;
    fan.rays = {IVec{1, 0, 0}, IVec{0, 1, 0}, IVec{0, 0, 1}, IVec{0, -2, -1},
                IVec{-1, -1, 0}};
    // Maximal cones omit one of {x1, x5} and one of {x2, x3, x4}.
    for (int ox : {0, 4})
        for (int oy : {1, 2, 3}) {
            std::vector<int> cone;
            for (int r = 0; r < 5; ++r)
                if (r != ox && r != oy) cone.push_back(r);
            fan.max_cones.push_back(std::move(cone));
        }
    return finish(std::move(fan));
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"projective-space", "projective d-space (parameter: dimension d >= 1)", true},
        {"hirzebruch", "Hirzebruch surface F_a (parameter: a >= 0)", true},
        {"weighted-p2-112", "weighted projective plane P(1,1,2)", false},
        {"p1xp1", "product of two projective lines", false},
        {"blowup-p2", "P^2 blown up in k torus-fixed points (parameter: 0 <= k <= 3)", true},
        {"terminal-fano-4fold", "terminal Fano fourfold with six rays, rho = 2", false},
        {"terminal-fano-dfold",
         "terminal Fano d-fold family, rho = 2 (parameter: dimension d >= 4)", true},
        {"gorenstein-fano-3fold", "Gorenstein Fano threefold with five rays, rho = 2",
         false},
    };
    return entries;
}

Fan catalog_build(const std::string& name, std::optional<long> param) {
    const CatalogEntry* entry = nullptr;
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) entry = &e;
    if (entry == nullptr)
        throw std::invalid_argument("unknown catalog fan: " + name);
    if (entry->takes_parameter && !param)
        throw std::invalid_argument("catalog fan " + name + " needs a parameter");
    if (!entry->takes_parameter && param)
        throw std::invalid_argument("catalog fan " + name + " takes no parameter");

    if (name == "projective-space") return projective_space(static_cast<int>(*param));
    if (name == "hirzebruch") return hirzebruch(Int(*param));
    if (name == "weighted-p2-112") return weighted_p2_112();
    if (name == "p1xp1") return product_p1_p1();
    if (name == "blowup-p2") return blowup_p2(static_cast<int>(*param));
    if (name == "terminal-fano-4fold") return terminal_fano_4fold();
    if (name == "terminal-fano-dfold") return terminal_fano_dfold(static_cast<int>(*param));
    if (name == "gorenstein-fano-3fold") return gorenstein_fano_3fold();
    throw internal_error("catalog entry without builder");
}

} // namespace toricg2
