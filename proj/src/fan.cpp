#include "toricg2/fan.hpp"

#include "toricg2/errors.hpp"
#include "toricg2/lattice.hpp"
#include "toricg2/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace toricg2 {

namespace {

std::string cone_str(const std::vector<int>& c) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
    return os.str();
}

/// Exact test: is `x` in the cone spanned by the given (independent) rays?
bool in_cone(const Fan& fan, const std::vector<int>& cone, const IVec& x) {
    const size_t d = fan.rays[0].size();
    QMat a(d, QVec(cone.size()));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < cone.size(); ++j)
            a[i][j] = Rat(fan.rays[cone[j]][i]);
    QVec b(d);
    for (size_t i = 0; i < d; ++i) b[i] = Rat(x[i]);
    const LinearSolution sol = solve_linear(std::move(a), std::move(b));
    if (!sol.consistent) return false;
    for (const Rat& l : sol.particular)
        if (l < 0) return false;
    // Free variables are set to 0 >= 0; for full-rank cone matrices the
    // solution is unique anyway.
    return true;
}

/**
 * Is there a rational functional that vanishes on `common`, is >= 1 on the
 * rays of cone1 outside it and <= -1 on the rays of cone2 outside it?
 * Existence certifies that the two maximal cones meet exactly in the face
 * spanned by their common rays.  Exact Fourier-Motzkin elimination.
 */
bool strictly_separable(const Fan& fan, const std::vector<int>& cone1,
                        const std::vector<int>& cone2) {
    const int d = fan.dim;
    std::vector<int> common;
    std::set_intersection(cone1.begin(), cone1.end(), cone2.begin(), cone2.end(),
                          std::back_inserter(common));

    // Parametrize {m : <m, c> = 0 for c in common} as m = z * K with K the
    // rational kernel basis of the common-ray matrix.  With no common rays the
    // constraint space is all of Q^d (a zero-row matrix would lose the column
    // count), so use the standard basis directly.
    QMat k;
    if (common.empty()) {
        k.assign(d, QVec(d, Rat(0)));
        for (int i = 0; i < d; ++i) k[i][i] = 1;
    } else {
        QMat cm(common.size(), QVec(d));
        for (size_t i = 0; i < common.size(); ++i)
            for (int j = 0; j < d; ++j) cm[i][j] = Rat(fan.rays[common[i]][j]);
        k = solve_linear(std::move(cm), QVec(common.size(), 0)).kernel;
    }
    const size_t nv = k.size();

    // One inequality row per non-common ray: coeffs . z >= 1.
    struct Row {
        QVec c;
        Rat rhs;
    };
    std::vector<Row> rows;
    auto add_rows = [&](const std::vector<int>& cone, int sign) {
        for (int r : cone) {
            if (std::binary_search(common.begin(), common.end(), r)) continue;
            Row row;
            row.c.assign(nv, 0);
            for (size_t t = 0; t < nv; ++t)
                for (int j = 0; j < d; ++j)
                    row.c[t] += k[t][j] * Rat(fan.rays[r][j]) * sign;
            row.rhs = 1;
            rows.push_back(std::move(row));
        }
    };
    add_rows(cone1, +1);
    add_rows(cone2, -1);

    auto normalize = [](Row& r) {
        // Scale by the positive lcm/gcd so rows dedup reliably.
        Int den = 1;
        for (const Rat& x : r.c) den = lcm(den, x.get_den());
        den = lcm(den, r.rhs.get_den());
        Int g = 0;
        for (const Rat& x : r.c) g = gcd(g, Int(x.get_num() * (den / x.get_den())));
        g = gcd(g, Int(r.rhs.get_num() * (den / r.rhs.get_den())));
        if (g == 0) return;
        const Rat f = Rat(den) / Rat(abs(g));
        for (Rat& x : r.c) x *= f;
        r.rhs *= f;
    };

    for (size_t var = 0; var < nv; ++var) {
        std::vector<Row> pos, neg, zero;
        for (Row& r : rows) {
            const int s = sgn(r.c[var]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(std::move(r));
        }
        std::vector<Row> next = std::move(zero);
        for (const Row& p : pos) {
            for (const Row& q : neg) {
                Row r;
                r.c.assign(nv, 0);
                const Rat fp = -q.c[var];  // > 0
                const Rat fq = p.c[var];   // > 0
                for (size_t t = 0; t < nv; ++t) r.c[t] = fp * p.c[t] + fq * q.c[t];
                r.rhs = fp * p.rhs + fq * q.rhs;
                normalize(r);
                next.push_back(std::move(r));
            }
        }
        // Deduplicate to keep Fourier-Motzkin growth in check.
        std::sort(next.begin(), next.end(), [](const Row& a, const Row& b) {
            if (a.c != b.c) return a.c < b.c;
            return a.rhs < b.rhs;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Row& a, const Row& b) {
                                   return a.c == b.c && a.rhs == b.rhs;
                               }),
                   next.end());
        rows = std::move(next);
    }

    // All variables eliminated: rows read "0 >= rhs".
    for (const Row& r : rows)
        if (r.rhs > 0) return false;
    return true;
}

} // namespace

ValidationReport validate_fan(const Fan& fan, std::optional<bool> deep_opt) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) { rep.errors.push_back(msg); };

    const int d = fan.dim;
    if (d < 1) {
        fail("dimension must be at least 1");
        return rep;
    }
    const int n = fan.ray_count();
    if (n == 0) {
        fail("fan has no rays");
        return rep;
    }
    for (int i = 0; i < n; ++i) {
        const IVec& v = fan.rays[i];
        if (static_cast<int>(v.size()) != d) {
            fail("ray " + std::to_string(i) + " has wrong dimension");
            return rep;
        }
        const Int g = content(v);
        if (g == 0)
            fail("ray " + std::to_string(i) + " is the zero vector");
        else if (g != 1)
            fail("ray " + std::to_string(i) + " is not primitive");
    }
    for (int i = 0; i < n && rep.errors.empty(); ++i)
        for (int j = i + 1; j < n; ++j)
            if (fan.rays[i] == fan.rays[j])
                fail("rays " + std::to_string(i) + " and " + std::to_string(j) +
                     " coincide");
    if (!rep.errors.empty()) return rep;

    if (fan.max_cones.empty()) {
        fail("fan has no maximal cones");
        return rep;
    }
    std::set<std::vector<int>> seen;
    std::vector<bool> used(n, false);
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        std::vector<int> cone = fan.max_cones[c];
        if (static_cast<int>(cone.size()) != d) {
            fail("maximal cone " + std::to_string(c) + " does not have " +
                 std::to_string(d) + " rays");
            return rep;
        }
        std::sort(cone.begin(), cone.end());
        if (cone != fan.max_cones[c])
            fail("maximal cone " + std::to_string(c) + " is not sorted");
        for (int r : cone) {
            if (r < 0 || r >= n) {
                fail("maximal cone " + std::to_string(c) + " has ray index out of range");
                return rep;
            }
            used[r] = true;
        }
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
            fail("maximal cone " + std::to_string(c) + " repeats a ray");
            return rep;
        }
        if (!seen.insert(cone).second)
            fail("maximal cone " + cone_str(cone) + " appears twice");
        IMat m(d, IVec(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m[i][j] = fan.rays[cone[i]][j];
        if (int_det(std::move(m)) == 0)
            fail("maximal cone " + cone_str(cone) + " is not full-dimensional");
    }
    for (int r = 0; r < n; ++r)
        if (!used[r]) fail("ray " + std::to_string(r) + " lies in no maximal cone");
    if (!rep.errors.empty()) return rep;

    // Wall condition: each facet of a maximal cone is a facet of exactly two.
    std::map<std::vector<int>, int> facet_count;
    for (const auto& cone : fan.max_cones) {
        for (int k = 0; k < d; ++k) {
            std::vector<int> facet;
            for (int i = 0; i < d; ++i)
                if (i != k) facet.push_back(cone[i]);
            ++facet_count[facet];
        }
    }
    for (const auto& [facet, count] : facet_count)
        if (count != 2)
            fail("facet " + cone_str(facet) + " lies in " + std::to_string(count) +
                 " maximal cones instead of 2");
    if (!rep.errors.empty()) return rep;

    // Completeness: every sampled direction must lie in some maximal cone.
    // The sample is deterministic; membership tests are exact.
    std::mt19937 eng(0x5eedu);
    int checked = 0;
    while (checked < 32) {
        IVec x(d);
        bool zero = true;
        for (int i = 0; i < d; ++i) {
            x[i] = Int(static_cast<long>(eng() % 2001) - 1000);
            if (x[i] != 0) zero = false;
        }
        if (zero) continue;
        ++checked;
        bool covered = false;
        for (const auto& cone : fan.max_cones)
            if (in_cone(fan, cone, x)) {
                covered = true;
                break;
            }
        if (!covered) {
            fail("direction not covered by any maximal cone (fan is not complete)");
            return rep;
        }
    }

    const bool deep = deep_opt.value_or(d <= 5);
    if (deep) {
        rep.deep = true;
        for (size_t i = 0; i < fan.max_cones.size(); ++i)
            for (size_t j = i + 1; j < fan.max_cones.size(); ++j)
                if (!strictly_separable(fan, fan.max_cones[i], fan.max_cones[j]))
                    fail("maximal cones " + cone_str(fan.max_cones[i]) + " and " +
                         cone_str(fan.max_cones[j]) + " do not meet in a common face");
    }

    rep.ok = rep.errors.empty();
    return rep;
}

void require_valid(const Fan& fan, std::optional<bool> deep) {
    const ValidationReport rep = validate_fan(fan, deep);
    if (!rep.ok) throw invalid_fan_error(rep.errors.front());
}

std::vector<Wall> fan_walls(const Fan& fan) {
    const int d = fan.dim;
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (int k = 0; k < d; ++k) {
            std::vector<int> facet;
            for (int i = 0; i < d; ++i)
                if (i != k) facet.push_back(cone[i]);
            facets[facet].emplace_back(static_cast<int>(c), cone[k]);
        }
    }
    std::vector<Wall> walls;
    walls.reserve(facets.size());
    for (const auto& [tau, owners] : facets) {
        if (owners.size() != 2)
            throw invalid_fan_error("facet " + cone_str(tau) +
                                    " lies in " + std::to_string(owners.size()) +
                                    " maximal cones instead of 2");
        Wall w;
        w.tau = tau;
        auto [ca, oa] = owners[0];
        auto [cb, ob] = owners[1];
        if (ca > cb) {
            std::swap(ca, cb);
            std::swap(oa, ob);
        }
        w.cone1 = ca;
        w.cone2 = cb;
        w.opp1 = oa;
        w.opp2 = ob;
        walls.push_back(std::move(w));
    }
    return walls;  // std::map iteration is already lexicographic in tau
}

Int cone_multiplicity(const Fan& fan, const std::vector<int>& cone_rays) {
    if (cone_rays.empty()) return 1;
    IMat rows;
    rows.reserve(cone_rays.size());
    for (int r : cone_rays) {
        if (r < 0 || r >= fan.ray_count())
            throw std::invalid_argument("cone ray index out of range");
        rows.push_back(fan.rays[r]);
    }
    return gcd_of_maximal_minors(rows);
}

StarSurface star_surface(const Fan& fan, const std::vector<int>& tau) {
    const int d = fan.dim;
    std::vector<int> t = tau;
    std::sort(t.begin(), t.end());
    if (static_cast<int>(t.size()) != d - 2)
        throw std::invalid_argument("tau must have exactly dim-2 rays");
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
        throw std::invalid_argument("tau repeats a ray");
    for (int r : t)
        if (r < 0 || r >= fan.ray_count())
            throw std::invalid_argument("tau ray index out of range");

    // tau must be a cone of the fan, i.e. a face of some maximal cone.
    bool is_face = false;
    for (const auto& cone : fan.max_cones)
        if (std::includes(cone.begin(), cone.end(), t.begin(), t.end())) {
            is_face = true;
            break;
        }
    if (!is_face) throw std::invalid_argument("tau is not a cone of the fan");

    StarSurface star;
    star.tau = t;

    if (t.empty()) {
        // d = 2: the star of the zero cone is the fan itself.
        star.quotient = {{Int(1), Int(0)}, {Int(0), Int(1)}};
    } else {
        IMat rows;
        for (int r : t) rows.push_back(fan.rays[r]);
        star.quotient = integer_kernel_basis(rows);
        require_internal(star.quotient.size() == 2,
                         "star quotient is not 2-dimensional");
    }

    // Adjacent rays and the 2-cones of the star, read off the maximal cones.
    std::set<int> adjacent;
    std::set<std::pair<int, int>> star_cones;
    for (const auto& cone : fan.max_cones) {
        if (!std::includes(cone.begin(), cone.end(), t.begin(), t.end())) continue;
        std::vector<int> rest;
        std::set_difference(cone.begin(), cone.end(), t.begin(), t.end(),
                            std::back_inserter(rest));
        require_internal(rest.size() == 2, "maximal cone minus tau is not a pair");
        adjacent.insert(rest[0]);
        adjacent.insert(rest[1]);
        star_cones.insert({rest[0], rest[1]});
    }
    require_internal(adjacent.size() >= 3, "star of tau has fewer than 3 rays");

    auto image = [&](int r) {
        IVec q(2, 0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < d; ++j) q[i] += star.quotient[i][j] * fan.rays[r][j];
        return q;
    };

    struct Node {
        int ray;
        IVec q;
    };
    std::vector<Node> nodes;
    for (int r : adjacent) {
        Node nd{r, image(r)};
        require_internal(nd.q[0] != 0 || nd.q[1] != 0,
                         "adjacent ray projects to zero in the star");
        nodes.push_back(std::move(nd));
    }

    // Exact counterclockwise angular order: split the plane into the upper
    // half (y > 0, or y = 0 and x > 0) and lower half, then compare by cross
    // product within each half.
    auto half = [](const IVec& q) {
        return (q[1] > 0 || (q[1] == 0 && q[0] > 0)) ? 0 : 1;
    };
    // Force evaluation inside the lambda: returning the lazy gmp expression
    // would leave it referencing dead temporaries.
    auto cross = [](const IVec& a, const IVec& b) { return Int(a[0] * b[1] - a[1] * b[0]); };
    std::sort(nodes.begin(), nodes.end(), [&](const Node& a, const Node& b) {
        const int ha = half(a.q), hb = half(b.q);
        if (ha != hb) return ha < hb;
        const Int cr = cross(a.q, b.q);
        require_internal(cr != 0, "distinct star rays project to the same direction");
        return cr > 0;
    });

    // Rotate so the smallest ray index comes first.
    size_t start = 0;
    for (size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i].ray < nodes[start].ray) start = i;
    std::rotate(nodes.begin(), nodes.begin() + start, nodes.end());

    // The cyclic order must reproduce the star's 2-cones exactly.
    std::set<std::pair<int, int>> consecutive;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const int a = nodes[i].ray;
        const int b = nodes[(i + 1) % nodes.size()].ray;
        consecutive.insert({std::min(a, b), std::max(a, b)});
        const Int cr = cross(nodes[i].q, nodes[(i + 1) % nodes.size()].q);
        if (cr <= 0)
            throw invalid_fan_error("star of tau is not a complete surface fan");
    }
    if (consecutive != star_cones)
        throw invalid_fan_error("star of tau is not a complete surface fan");

    for (const Node& nd : nodes) {
        star.rays.push_back(nd.ray);
        star.images.push_back(nd.q);
    }
    return star;
}

namespace {

Int json_to_int(const nlohmann::json& j, const char* what) {
    if (j.is_number_integer()) {
        return Int(static_cast<long>(j.get<long long>()));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw parse_error(std::string(what) + ": '" + s + "' is not an integer");
        }
    }
    throw parse_error(std::string(what) + " must be an integer or integer string");
}

} // namespace

Fan fan_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("fan file must be a JSON object");
    if (!j.contains("format") || !j["format"].is_string() ||
        j["format"].get<std::string>() != "fan/1")
        throw parse_error("fan file must declare \"format\": \"fan/1\"");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw parse_error("fan file must give an integer \"dim\"");
    if (!j.contains("rays") || !j["rays"].is_array())
        throw parse_error("fan file must give a \"rays\" array");
    if (!j.contains("max_cones") || !j["max_cones"].is_array())
        throw parse_error("fan file must give a \"max_cones\" array");

    Fan fan;
    fan.dim = j["dim"].get<int>();
    if (fan.dim < 1) throw parse_error("\"dim\" must be positive");
    for (const auto& jr : j["rays"]) {
        if (!jr.is_array() || static_cast<int>(jr.size()) != fan.dim)
            throw parse_error("each ray must be an array of dim coordinates");
        IVec v;
        for (const auto& jc : jr) v.push_back(json_to_int(jc, "ray coordinate"));
        fan.rays.push_back(std::move(v));
    }
    for (const auto& jc : j["max_cones"]) {
        if (!jc.is_array()) throw parse_error("each maximal cone must be an array");
        std::vector<int> cone;
        for (const auto& ji : jc) {
            if (!ji.is_number_integer())
                throw parse_error("cone entries must be ray indices");
            const long long v = ji.get<long long>();
            if (v < 0 || v >= static_cast<long long>(fan.rays.size()))
                throw parse_error("cone ray index out of range");
            cone.push_back(static_cast<int>(v));
        }
        std::sort(cone.begin(), cone.end());
        fan.max_cones.push_back(std::move(cone));
    }
    return fan;
}

std::string fan_to_json(const Fan& fan) {
    nlohmann::ordered_json j;
    j["format"] = "fan/1";
    j["dim"] = fan.dim;
    auto rays = nlohmann::ordered_json::array();
    for (const IVec& v : fan.rays) {
        auto jr = nlohmann::ordered_json::array();
        for (const Int& x : v) {
            if (x.fits_slong_p())
                jr.push_back(static_cast<long long>(x.get_si()));
            else
                jr.push_back(x.get_str());  // arbitrary precision as string
        }
        rays.push_back(std::move(jr));
    }
    j["rays"] = std::move(rays);
    std::vector<std::vector<int>> cones = fan.max_cones;
    for (auto& c : cones) std::sort(c.begin(), c.end());
    std::sort(cones.begin(), cones.end());
    j["max_cones"] = cones;
    return j.dump(2) + "\n";
}

} // namespace toricg2
