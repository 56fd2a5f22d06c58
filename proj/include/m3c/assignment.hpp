#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace m3c {

/// A partial node correspondence between a graph with `rows` nodes and one with `cols` nodes.
///
/// Stored as a row -> column map; an unmatched row is an empty slot. Column injectivity is not
/// enforced on construction so that `validate` can diagnose arbitrary inputs; every operation
/// producing an Assignment from valid inputs yields a valid one.
class Assignment {
public:
    using Match = std::pair<std::size_t, std::size_t>;

    Assignment() = default;
    Assignment(std::size_t rows, std::size_t cols);
    /// Throws ContractViolation if a row index is out of range or a row appears twice.
    Assignment(std::size_t rows, std::size_t cols, const std::vector<Match>& matches);

    static Assignment identity(std::size_t n);

    std::size_t rows() const { return map_.size(); }
    std::size_t cols() const { return cols_; }

    std::optional<std::size_t> operator[](std::size_t row) const { return map_[row]; }
    void set(std::size_t row, std::size_t col);
    void clear(std::size_t row);

    std::size_t match_count() const;
    /// Matches in increasing row order.
    std::vector<Match> matches() const;

    bool operator==(const Assignment&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<std::optional<std::size_t>> map_;
};

/// Maps r -> c iff `ik` maps r -> m and `kj` maps m -> c. Requires ik.cols() == kj.rows().
Assignment compose(const Assignment& ik, const Assignment& kj);

Assignment transpose(const Assignment& x);

/// True iff every column is in range and used at most once.
bool validate(const Assignment& x);

} // namespace m3c
