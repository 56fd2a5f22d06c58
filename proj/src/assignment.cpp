#include "m3c/assignment.hpp"

#include "m3c/error.hpp"

#include <string>

namespace m3c {

Assignment::Assignment(std::size_t rows, std::size_t cols) : cols_(cols), map_(rows) {}

Assignment::Assignment(std::size_t rows, std::size_t cols, const std::vector<Match>& matches)
    : Assignment(rows, cols)
{
    for (const auto& [r, c] : matches) {
        if (r >= rows)
            throw ContractViolation("assignment row " + std::to_string(r) + " out of range");
        if (map_[r])
            throw ContractViolation("assignment row " + std::to_string(r) + " mapped twice");
        map_[r] = c;
    }
}

Assignment Assignment::identity(std::size_t n)
{
    Assignment x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        x.map_[i] = i;
    return x;
}

void Assignment::set(std::size_t row, std::size_t col)
{
    if (row >= rows())
        throw ContractViolation("assignment row " + std::to_string(row) + " out of range");
    map_[row] = col;
}

void Assignment::clear(std::size_t row)
{
    if (row >= rows())
        throw ContractViolation("assignment row " + std::to_string(row) + " out of range");
    map_[row].reset();
}

std::size_t Assignment::match_count() const
{
    std::size_t n = 0;
    for (const auto& m : map_)
        n += m.has_value();
    return n;
}

std::vector<Assignment::Match> Assignment::matches() const
{
    std::vector<Match> out;
    out.reserve(map_.size());
    for (std::size_t r = 0; r < map_.size(); ++r)
        if (map_[r])
            out.emplace_back(r, *map_[r]);
    return out;
}

Assignment compose(const Assignment& ik, const Assignment& kj)
{
    if (ik.cols() != kj.rows())
        throw ContractViolation("compose: inner dimensions differ (" + std::to_string(ik.cols()) +
                                " vs " + std::to_string(kj.rows()) + ")");
    Assignment out(ik.rows(), kj.cols());
    for (std::size_t r = 0; r < ik.rows(); ++r) {
        const auto mid = ik[r];
        if (!mid || *mid >= kj.rows())
            continue;
        if (const auto c = kj[*mid])
            out.set(r, *c);
    }
    return out;
}

Assignment transpose(const Assignment& x)
{
    Assignment out(x.cols(), x.rows());
    for (const auto& [r, c] : x.matches())
        out.set(c, r);
    return out;
}

bool validate(const Assignment& x)
{
    std::vector<bool> used(x.cols(), false);
    for (const auto& [r, c] : x.matches()) {
        if (c >= x.cols() || used[c])
            return false;
        used[c] = true;
    }
    return true;
}

} // namespace m3c
