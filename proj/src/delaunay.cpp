#include "m3c/delaunay.hpp"

#include "m3c/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace m3c {

double orient2d(Point a, Point b, Point c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double incircle(Point a, Point b, Point c, Point d)
{
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double ad = adx * adx + ady * ady;
    const double bd = bdx * bdx + bdy * bdy;
    const double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

namespace {

constexpr std::size_t kGhost = static_cast<std::size_t>(-1);

// Counter-clockwise triangle; a ghost triangle (u, v, kGhost) stands for the open half-plane
// to the left of u -> v, outside the current hull edge v -> u.
using Triangle = std::array<std::size_t, 3>;

double extent(const std::vector<Point>& pts)
{
    double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
    for (const auto& p : pts) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    return std::max({hi_x - lo_x, hi_y - lo_y, 1e-300});
}

bool degenerate(const std::vector<Point>& pts)
{
    const double s = extent(pts);
    const double orient_eps = 1e-12 * s * s;
    const double circle_eps = 1e-12 * s * s * s * s;
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                const double o = orient2d(pts[a], pts[b], pts[c]);
                if (std::abs(o) <= orient_eps)
                    return true;
                for (std::size_t d = c + 1; d < n; ++d)
                    if (std::abs(incircle(pts[a], pts[b], pts[c], pts[d])) <= circle_eps)
                        return true;
            }
    return false;
}

bool in_conflict(const Triangle& t, const std::vector<Point>& pts, Point p)
{
    if (t[2] == kGhost) {
        const Point u = pts[t[0]];
        const Point v = pts[t[1]];
        const double o = orient2d(u, v, p);
        if (o != 0.0)
            return o > 0.0;
        // Collinear with the hull edge: conflicting only strictly inside the segment.
        const double dot = (p.x - u.x) * (v.x - u.x) + (p.y - u.y) * (v.y - u.y);
        const double len = (v.x - u.x) * (v.x - u.x) + (v.y - u.y) * (v.y - u.y);
        return dot > 0.0 && dot < len;
    }
    return incircle(pts[t[0]], pts[t[1]], pts[t[2]], p) > 0.0;
}

std::vector<Triangle> triangulate(const std::vector<Point>& pts)
{
    // Points are inserted in lexicographic order so relabelled copies of a point set produce
    // the same triangulation.
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(pts[a].x, pts[a].y) < std::tie(pts[b].x, pts[b].y);
    });

    Triangle first{order[0], order[1], order[2]};
    if (orient2d(pts[first[0]], pts[first[1]], pts[first[2]]) < 0.0)
        std::swap(first[1], first[2]);
    std::vector<Triangle> tris{first,
                               {first[1], first[0], kGhost},
                               {first[2], first[1], kGhost},
                               {first[0], first[2], kGhost}};

    for (std::size_t idx = 3; idx < order.size(); ++idx) {
        const std::size_t p = order[idx];
        // Directed boundary edges of the cavity; an edge shared by two removed triangles
        // appears in both directions and cancels.
        std::map<std::pair<std::size_t, std::size_t>, int> boundary;
        std::vector<Triangle> kept;
        kept.reserve(tris.size() + 4);
        for (const auto& t : tris) {
            if (!in_conflict(t, pts, pts[p])) {
                kept.push_back(t);
                continue;
            }
            for (int e = 0; e < 3; ++e) {
                const std::pair<std::size_t, std::size_t> fwd{t[e], t[(e + 1) % 3]};
                const std::pair<std::size_t, std::size_t> rev{fwd.second, fwd.first};
                if (auto it = boundary.find(rev); it != boundary.end())
                    boundary.erase(it);
                else
                    boundary.emplace(fwd, 0);
            }
        }
        for (const auto& [edge, unused] : boundary) {
            const auto [u, v] = edge;
            // Keep the ghost vertex in the last slot.
            if (u == kGhost)
                kept.push_back({v, p, kGhost});
            else if (v == kGhost)
                kept.push_back({p, u, kGhost});
            else
                kept.push_back({u, v, p});
        }
        tris = std::move(kept);
    }
    return tris;
}

} // namespace

std::vector<Edge> delaunay(const std::vector<Point>& input)
{
    const std::size_t n = input.size();
    {
        std::set<std::pair<double, double>> seen;
        for (const auto& p : input)
            if (!seen.emplace(p.x, p.y).second)
                throw ContractViolation("delaunay: duplicate point");
    }
    if (n < 2)
        return {};
    if (n == 2)
        return {{0, 1}};

    std::vector<Point> pts = input;
    std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
    std::uniform_real_distribution<double> jitter(-kDelaunayJitter, kDelaunayJitter);
    for (int attempt = 0; degenerate(pts) && attempt < 64; ++attempt) {
        pts = input;
        for (auto& p : pts) {
            p.x += jitter(rng);
            p.y += jitter(rng);
        }
    }

    std::set<Edge> edges;
    for (const auto& t : triangulate(pts))
        for (int e = 0; e < 3; ++e) {
            const std::size_t a = t[e];
            const std::size_t b = t[(e + 1) % 3];
            if (a == kGhost || b == kGhost)
                continue;
            edges.emplace(std::min(a, b), std::max(a, b));
        }
    return {edges.begin(), edges.end()};
}

} // namespace m3c
