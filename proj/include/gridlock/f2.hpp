#pragma once

// Sparse exact linear algebra over the two-element field.

#include <gridlock/error.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gridlock {

/// Sorted, duplicate-free list of support indices of an F2 vector.
using SparseVec = std::vector<std::uint32_t>;

/// a <- a + b.
inline void add_into(SparseVec& a, const SparseVec& b, SparseVec& scratch)
{
    scratch.clear();
    scratch.reserve(a.size() + b.size());
    auto i = a.cbegin();
    auto j = b.cbegin();
    while (i != a.cend() && j != b.cend()) {
        if (*i < *j)
            scratch.push_back(*i++);
        else if (*j < *i)
            scratch.push_back(*j++);
        else {
            ++i;
            ++j;
        }
    }
    scratch.insert(scratch.end(), i, a.cend());
    scratch.insert(scratch.end(), j, b.cend());
    a.swap(scratch);
}

inline void add_into(SparseVec& a, const SparseVec& b)
{
    SparseVec scratch;
    add_into(a, b, scratch);
}

/// Sorts and cancels repeated indices in pairs.
inline SparseVec reduce_mod2(std::vector<std::uint32_t> v)
{
    std::sort(v.begin(), v.end());
    SparseVec out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(v[i]);
        i = j;
    }
    return out;
}

/// Column-major sparse matrix. Column j lists the rows holding a 1.
class F2Matrix
{
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows)
        , cols_(cols)
        , columns_(cols)
    {
    }

    /// Entries are (row, col) pairs; repeated positions cancel in pairs.
    static F2Matrix from_entries(std::size_t rows, std::size_t cols,
                                 std::span<const std::pair<std::size_t, std::size_t>> entries)
    {
        F2Matrix m(rows, cols);
        std::vector<std::vector<std::uint32_t>> raw(cols);
        for (const auto& [r, c] : entries) {
            if (r >= rows || c >= cols)
                throw Error(ErrorKind::DimMismatch, "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                                        ") outside " + std::to_string(rows) + "x" +
                                                        std::to_string(cols));
            raw[c].push_back(static_cast<std::uint32_t>(r));
        }
        for (std::size_t c = 0; c < cols; ++c)
            m.columns_[c] = reduce_mod2(std::move(raw[c]));
        return m;
    }

    static F2Matrix from_entries(std::size_t rows, std::size_t cols,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& entries)
    {
        return from_entries(rows, cols, std::span<const std::pair<std::size_t, std::size_t>>(entries));
    }

    static F2Matrix from_columns(std::size_t rows, std::vector<SparseVec> columns)
    {
        F2Matrix m;
        m.rows_ = rows;
        m.cols_ = columns.size();
        for (auto& col : columns) {
            for (auto r : col)
                if (r >= rows)
                    throw Error(ErrorKind::DimMismatch, "row index out of range");
            if (!std::is_sorted(col.begin(), col.end()) || std::adjacent_find(col.begin(), col.end()) != col.end())
                col = reduce_mod2(std::move(col));
        }
        m.columns_ = std::move(columns);
        return m;
    }

    static F2Matrix identity(std::size_t n)
    {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.columns_[i] = {static_cast<std::uint32_t>(i)};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const SparseVec& column(std::size_t c) const { return columns_[c]; }
    const std::vector<SparseVec>& columns() const noexcept { return columns_; }

    std::size_t nnz() const
    {
        std::size_t total = 0;
        for (const auto& c : columns_)
            total += c.size();
        return total;
    }

    bool is_zero() const
    {
        return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
    }

    bool get(std::size_t r, std::size_t c) const
    {
        const auto& col = columns_[c];
        return std::binary_search(col.begin(), col.end(), static_cast<std::uint32_t>(r));
    }

    /// (row, col) pairs in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> entries() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        out.reserve(nnz());
        for (std::size_t c = 0; c < cols_; ++c)
            for (auto r : columns_[c])
                out.emplace_back(r, c);
        std::sort(out.begin(), out.end());
        return out;
    }

    F2Matrix transpose() const
    {
        F2Matrix t(cols_, rows_);
        for (std::size_t c = 0; c < cols_; ++c)
            for (auto r : columns_[c])
                t.columns_[r].push_back(static_cast<std::uint32_t>(c));
        return t;
    }

    /// A x for a sparse vector x indexed by columns.
    SparseVec apply(const SparseVec& x) const
    {
        std::vector<std::uint32_t> acc;
        for (auto c : x) {
            if (c >= cols_)
                throw Error(ErrorKind::DimMismatch, "vector index out of range");
            acc.insert(acc.end(), columns_[c].begin(), columns_[c].end());
        }
        return reduce_mod2(std::move(acc));
    }

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error(ErrorKind::DimMismatch, "product of " + std::to_string(a.rows_) + "x" +
                                                    std::to_string(a.cols_) + " and " + std::to_string(b.rows_) +
                                                    "x" + std::to_string(b.cols_));
        F2Matrix m(a.rows_, b.cols_);
        for (std::size_t c = 0; c < b.cols_; ++c)
            m.columns_[c] = a.apply(b.columns_[c]);
        return m;
    }

    friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorKind::DimMismatch, "sum of differently sized matrices");
        F2Matrix m = a;
        for (std::size_t c = 0; c < a.cols_; ++c)
            add_into(m.columns_[c], b.columns_[c]);
        return m;
    }

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> columns_;
};

namespace detail {

// Dense elimination on packed 64-bit row blocks.
inline std::size_t dense_rank(const F2Matrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t c = 0; c < cols; ++c)
        for (auto r : m.column(c))
            bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows && !(bits[pivot * words + w] & mask))
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(bits.begin() + pivot * words, bits.begin() + (pivot + 1) * words,
                             bits.begin() + rank * words);
        const std::uint64_t* prow = bits.data() + rank * words;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t* row = bits.data() + r * words;
            if (row[w] & mask)
                for (std::size_t k = w; k < words; ++k)
                    row[k] ^= prow[k];
        }
        ++rank;
    }
    return rank;
}

// Column reduction keyed on the largest row index. Columns are visited in
// order of increasing fill, ties by index, which keeps results reproducible.
inline std::size_t sparse_rank(const F2Matrix& m)
{
    std::vector<std::size_t> order(m.cols());
    for (std::size_t c = 0; c < order.size(); ++c)
        order[c] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&m](std::size_t a, std::size_t b) { return m.column(a).size() < m.column(b).size(); });

    std::unordered_map<std::uint32_t, SparseVec> pivots;
    SparseVec scratch;
    std::size_t rank = 0;
    for (std::size_t c : order) {
        SparseVec col = m.column(c);
        while (!col.empty()) {
            auto it = pivots.find(col.back());
            if (it == pivots.end())
                break;
            add_into(col, it->second, scratch);
        }
        if (!col.empty()) {
            const auto low = col.back();
            pivots.emplace(low, std::move(col));
            ++rank;
        }
    }
    return rank;
}

} // namespace detail

inline std::size_t rank(const F2Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    constexpr std::size_t dense_limit = std::size_t{1} << 26;
    if (m.rows() * m.cols() <= dense_limit)
        return detail::dense_rank(m);
    return detail::sparse_rank(m);
}

/// Some x with A x = b, or nothing when b is outside the column space.
inline std::optional<SparseVec> solve(const F2Matrix& a, const SparseVec& b)
{
    for (auto r : b)
        if (r >= a.rows())
            throw Error(ErrorKind::DimMismatch, "right-hand side index out of range");

    struct Pivot
    {
        SparseVec reduced;
        SparseVec combo; // columns of A summing to `reduced`
    };
    std::unordered_map<std::uint32_t, Pivot> pivots;
    SparseVec scratch;

    for (std::size_t c = 0; c < a.cols(); ++c) {
        Pivot p{a.column(c), {static_cast<std::uint32_t>(c)}};
        while (!p.reduced.empty()) {
            auto it = pivots.find(p.reduced.back());
            if (it == pivots.end())
                break;
            add_into(p.reduced, it->second.reduced, scratch);
            add_into(p.combo, it->second.combo, scratch);
        }
        if (!p.reduced.empty()) {
            const auto low = p.reduced.back();
            pivots.emplace(low, std::move(p));
        }
    }

    SparseVec rest = b, x;
    while (!rest.empty()) {
        auto it = pivots.find(rest.back());
        if (it == pivots.end())
            return std::nullopt;
        add_into(rest, it->second.reduced, scratch);
        add_into(x, it->second.combo, scratch);
    }
    return x;
}

/// Dense-vector form of solve; b and the result hold one 0/1 byte per index.
inline std::optional<std::vector<std::uint8_t>> solve(const F2Matrix& a, std::span<const std::uint8_t> b)
{
    if (b.size() != a.rows())
        throw Error(ErrorKind::DimMismatch, "right-hand side has length " + std::to_string(b.size()) +
                                                ", matrix has " + std::to_string(a.rows()) + " rows");
    SparseVec sb;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] & 1)
            sb.push_back(static_cast<std::uint32_t>(i));
    auto x = solve(a, sb);
    if (!x)
        return std::nullopt;
    std::vector<std::uint8_t> dense(a.cols(), 0);
    for (auto c : *x)
        dense[c] = 1;
    return dense;
}

/// dim ker(d_out) - rank(d_in) for C_{k+1} --d_in--> C_k --d_out--> C_{k-1}.
inline std::size_t homology_dims(const F2Matrix& d_in, const F2Matrix& d_out)
{
    if (d_in.rows() != d_out.cols())
        throw Error(ErrorKind::DimMismatch, "d_in has " + std::to_string(d_in.rows()) + " rows but d_out has " +
                                                std::to_string(d_out.cols()) + " columns");
    if (!(d_out * d_in).is_zero())
        throw Error(ErrorKind::NotAComplex, "composite of consecutive differentials is nonzero");
    const std::size_t kernel = d_out.cols() - rank(d_out);
    return kernel - rank(d_in);
}

} // namespace gridlock
