#include "m3c/pairwise.hpp"

#include "m3c/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace m3c {

namespace {

// y = K x on the factored affinity.
void apply_affinity(const AffinityMatrix& k, const Matrix& x, Matrix& y)
{
    const Matrix& node = k.node();
    for (std::size_t i = 0; i < x.data().size(); ++i)
        y.data()[i] = node.data()[i] * x.data()[i];

    const Matrix& edge = k.edge();
    const auto& ei = k.edges_i();
    const auto& ej = k.edges_j();
    for (std::size_t e = 0; e < ei.size(); ++e) {
        const auto [a, b] = ei[e];
        for (std::size_t f = 0; f < ej.size(); ++f) {
            const double w = edge(e, f);
            if (w == 0.0)
                continue;
            const auto [c, d] = ej[f];
            y(a, c) += w * x(b, d);
            y(b, d) += w * x(a, c);
            y(a, d) += w * x(b, c);
            y(b, c) += w * x(a, d);
        }
    }
}

// Alternating row/column scaling towards uniform marginals of total mass min(rows, cols).
void sinkhorn(Matrix& m, int iters)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const double mass = static_cast<double>(std::min(rows, cols));
    const double row_target = mass / static_cast<double>(rows);
    const double col_target = mass / static_cast<double>(cols);
    for (int it = 0; it < iters; ++it) {
        for (std::size_t r = 0; r < rows; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < cols; ++c)
                s += m(r, c);
            if (s > 0.0)
                for (std::size_t c = 0; c < cols; ++c)
                    m(r, c) *= row_target / s;
        }
        for (std::size_t c = 0; c < cols; ++c) {
            double s = 0.0;
            for (std::size_t r = 0; r < rows; ++r)
                s += m(r, c);
            if (s > 0.0)
                for (std::size_t r = 0; r < rows; ++r)
                    m(r, c) *= col_target / s;
        }
    }
}

double l1(const Matrix& m)
{
    double s = 0.0;
    for (double v : m.data())
        s += std::abs(v);
    return s;
}

} // namespace

void RrwmParams::validate() const
{
    if (!(jump_prob > 0.0 && jump_prob < 1.0))
        throw ConfigError("rrwm: jump_prob must lie in (0, 1)");
    if (!(inflation > 0.0))
        throw ConfigError("rrwm: inflation must be positive");
    if (sinkhorn_iters < 1 || max_iters < 1)
        throw ConfigError("rrwm: iteration counts must be positive");
    if (!(tol > 0.0))
        throw ConfigError("rrwm: tol must be positive");
}

Matrix rrwm(const AffinityMatrix& k, const RrwmParams& params)
{
    params.validate();
    const std::size_t rows = k.rows();
    const std::size_t cols = k.cols();
    Matrix x(rows, cols, 1.0 / static_cast<double>(rows * cols));
    Matrix walk(rows, cols);
    Matrix jump(rows, cols);

    for (int it = 0; it < params.max_iters; ++it) {
        apply_affinity(k, x, walk);
        const double walk_mass = l1(walk);
        if (walk_mass > 0.0)
            for (double& v : walk.data())
                v /= walk_mass;

        const double peak = *std::max_element(walk.data().begin(), walk.data().end());
        for (std::size_t i = 0; i < walk.data().size(); ++i)
            jump.data()[i] = peak > 0.0 ? std::exp(params.inflation * walk.data()[i] / peak) : 1.0;
        sinkhorn(jump, params.sinkhorn_iters);

        Matrix next(rows, cols);
        for (std::size_t i = 0; i < next.data().size(); ++i)
            next.data()[i] =
                params.jump_prob * jump.data()[i] + (1.0 - params.jump_prob) * walk.data()[i];
        const double mass = l1(next);
        for (double& v : next.data())
            v /= mass;

        double change = 0.0;
        for (std::size_t i = 0; i < next.data().size(); ++i)
            change += std::abs(next.data()[i] - x.data()[i]);
        x = std::move(next);
        if (change < params.tol)
            break;
    }
    return x;
}

Assignment hungarian(const Matrix& score)
{
    const bool flip = score.rows() > score.cols();
    const Matrix& s = flip ? score.transposed() : score;
    const std::size_t n = s.rows();
    const std::size_t m = s.cols();
    if (n == 0)
        return Assignment(score.rows(), score.cols());

    // Shortest augmenting paths with potentials on cost = -score; 1-based, column 0 is virtual.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
    for (std::size_t row = 1; row <= n; ++row) {
        owner[0] = row;
        std::size_t col0 = 0;
        std::vector<double> minv(m + 1, inf);
        std::vector<bool> used(m + 1, false);
        do {
            used[col0] = true;
            const std::size_t r0 = owner[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t c = 1; c <= m; ++c) {
                if (used[c])
                    continue;
                const double cur = -s(r0 - 1, c - 1) - u[r0] - v[c];
                if (cur < minv[c]) {
                    minv[c] = cur;
                    way[c] = col0;
                }
                if (minv[c] < delta) {
                    delta = minv[c];
                    col1 = c;
                }
            }
            for (std::size_t c = 0; c <= m; ++c) {
                if (used[c]) {
                    u[owner[c]] += delta;
                    v[c] -= delta;
                } else {
                    minv[c] -= delta;
                }
            }
            col0 = col1;
        } while (owner[col0] != 0);
        do {
            const std::size_t col1 = way[col0];
            owner[col0] = owner[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    Assignment out(score.rows(), score.cols());
    for (std::size_t c = 1; c <= m; ++c) {
        if (owner[c] == 0)
            continue;
        if (flip)
            out.set(c - 1, owner[c] - 1);
        else
            out.set(owner[c] - 1, c - 1);
    }
    return out;
}

Assignment solve_pairwise(const PointGraph& gi, const PointGraph& gj, const AffinityMatrix& k,
                          const RrwmParams& params)
{
    if (k.rows() != gi.size() || k.cols() != gj.size())
        throw ContractViolation("solve_pairwise: affinity shape does not match graphs");
    return hungarian(rrwm(k, params));
}

} // namespace m3c
