#pragma once

// Toroidal grid diagrams, grid moves and classical Legendrian invariants.
//
// Conventions (public API is 1-indexed, storage is 0-indexed):
//   rows run bottom-to-top, columns left-to-right;
//   x_list[i] is the column of the X marking in row i, o_list[i] likewise for O;
//   the knot is oriented from X to O along columns and from O to X along rows.
//
// The Legendrian front of a grid is obtained by rotating it 45 degrees
// clockwise: SW corners (segments leaving up and right) become left cusps,
// NE corners (segments leaving down and left) become right cusps, NW and SE
// corners are smoothed, and at every crossing the strand coming from a row
// passes in front (it has the smaller front slope).

#include <gridlock/error.hpp>

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gridlock {

class GridDiagram
{
public:
    GridDiagram() = default;

    int size() const noexcept { return static_cast<int>(x_.size()); }

    // 0-indexed accessors.
    int x_col(int row) const { return x_[row]; }
    int o_col(int row) const { return o_[row]; }
    int x_row(int col) const { return x_inv_[col]; }
    int o_row(int col) const { return o_inv_[col]; }

    const std::vector<int>& x_cols() const noexcept { return x_; }
    const std::vector<int>& o_cols() const noexcept { return o_; }

    // 1-indexed lists as they appear in the grid file format.
    std::vector<int> x_list() const { return one_based(x_); }
    std::vector<int> o_list() const { return one_based(o_); }

    const std::string& name() const noexcept { return name_; }
    GridDiagram with_name(std::string name) const
    {
        GridDiagram g = *this;
        g.name_ = std::move(name);
        return g;
    }

    // Equality ignores the name.
    friend bool operator==(const GridDiagram& a, const GridDiagram& b)
    {
        return a.x_ == b.x_ && a.o_ == b.o_;
    }

    friend GridDiagram validate(int n, std::span<const int> x_list, std::span<const int> o_list);
    friend GridDiagram from_zero_based(std::vector<int> x, std::vector<int> o);

private:
    static std::vector<int> one_based(const std::vector<int>& v)
    {
        std::vector<int> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = v[i] + 1;
        return out;
    }

    std::vector<int> x_, o_, x_inv_, o_inv_;
    std::string name_;
};

/// Builds a grid from 1-indexed marking lists, checking every invariant.
inline GridDiagram validate(int n, std::span<const int> x_list, std::span<const int> o_list)
{
    if (n < 2)
        throw Error(ErrorKind::SizeTooSmall, "grid size " + std::to_string(n) + " is below 2");
    if (static_cast<int>(x_list.size()) != n || static_cast<int>(o_list.size()) != n)
        throw Error(ErrorKind::NotAPermutation, "marking lists must have length n = " + std::to_string(n));

    auto check_perm = [n](std::span<const int> list, const char* which) {
        std::vector<int> seen(n, -1);
        for (int i = 0; i < n; ++i) {
            const int v = list[i];
            if (v < 1 || v > n)
                throw Error(ErrorKind::NotAPermutation,
                            std::string(which) + " row " + std::to_string(i + 1) + ": column " +
                                std::to_string(v) + " out of range 1.." + std::to_string(n));
            if (seen[v - 1] >= 0)
                throw Error(ErrorKind::NotAPermutation,
                            std::string(which) + " rows " + std::to_string(seen[v - 1] + 1) + " and " +
                                std::to_string(i + 1) + " both use column " + std::to_string(v));
            seen[v - 1] = i;
        }
    };
    check_perm(x_list, "X");
    check_perm(o_list, "O");
    for (int i = 0; i < n; ++i)
        if (x_list[i] == o_list[i])
            throw Error(ErrorKind::SharedCell,
                        "row " + std::to_string(i + 1) + ": X and O share column " + std::to_string(x_list[i]));

    GridDiagram g;
    g.x_.resize(n);
    g.o_.resize(n);
    g.x_inv_.resize(n);
    g.o_inv_.resize(n);
    for (int i = 0; i < n; ++i) {
        g.x_[i] = x_list[i] - 1;
        g.o_[i] = o_list[i] - 1;
        g.x_inv_[g.x_[i]] = i;
        g.o_inv_[g.o_[i]] = i;
    }
    return g;
}

inline GridDiagram validate(int n, const std::vector<int>& x_list, const std::vector<int>& o_list)
{
    return validate(n, std::span<const int>(x_list), std::span<const int>(o_list));
}

inline GridDiagram from_zero_based(std::vector<int> x, std::vector<int> o)
{
    for (auto& v : x)
        ++v;
    for (auto& v : o)
        ++v;
    return validate(static_cast<int>(x.size()), x, o);
}

/// Number of link components: cycles of row -> row of the O in the X's column.
inline int trace_components(const GridDiagram& g)
{
    const int n = g.size();
    std::vector<char> seen(n, 0);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        ++components;
        for (int row = start; !seen[row]; row = g.o_row(g.x_col(row)))
            seen[row] = 1;
    }
    return components;
}

struct ClassicalInvariants
{
    int tb = 0;
    int r = 0;
    int components = 1;

    friend bool operator==(const ClassicalInvariants&, const ClassicalInvariants&) = default;
};

/// Front data read off the grid corners; exposed for diagnostics.
struct FrontCounts
{
    int writhe = 0;
    int up_cusps = 0;
    int down_cusps = 0;
};

inline FrontCounts front_counts(const GridDiagram& g)
{
    const int n = g.size();
    FrontCounts f;

    // Crossings: column c crosses row r when c lies strictly inside the row's
    // horizontal span and r strictly inside the column's vertical span. The
    // row strand is in front, so the sign is (row direction) * (column direction).
    for (int r = 0; r < n; ++r) {
        const int xc = g.x_col(r), oc = g.o_col(r);
        const int lo = std::min(xc, oc), hi = std::max(xc, oc);
        const int row_dir = xc > oc ? 1 : -1; // O -> X
        for (int c = lo + 1; c < hi; ++c) {
            const int xr = g.x_row(c), orow = g.o_row(c);
            if (std::min(xr, orow) < r && r < std::max(xr, orow)) {
                const int col_dir = orow > xr ? 1 : -1; // X -> O
                f.writhe += row_dir * col_dir;
            }
        }
    }

    // Cusps sit at SW and NE corners. At an X the knot arrives along the row,
    // at an O along the column; the cusp is traversed downward exactly when the
    // incoming strand moves down in the rotated picture.
    for (int r = 0; r < n; ++r) {
        for (int is_x = 0; is_x < 2; ++is_x) {
            const int c = is_x ? g.x_col(r) : g.o_col(r);
            const int other_col = is_x ? g.o_col(r) : g.x_col(r);
            const int other_row = is_x ? g.o_row(c) : g.x_row(c);
            const bool goes_right = other_col > c;
            const bool goes_up = other_row > r;
            const bool sw = goes_up && goes_right;
            const bool ne = !goes_up && !goes_right;
            if (!sw && !ne)
                continue;
            bool down;
            if (is_x)
                down = ne; // arriving along the row from the left
            else
                down = sw; // arriving along the column from above
            if (down)
                ++f.down_cusps;
            else
                ++f.up_cusps;
        }
    }
    return f;
}

/// tb = writhe - cusps/2, r = (down cusps - up cusps)/2 of the rotated front.
inline ClassicalInvariants classical_invariants(const GridDiagram& g)
{
    const int comps = trace_components(g);
    if (comps != 1)
        throw Error(ErrorKind::MultiComponent,
                    "classical invariants need a knot, grid has " + std::to_string(comps) + " components");
    const FrontCounts f = front_counts(g);
    ClassicalInvariants ci;
    ci.tb = f.writhe - (f.up_cusps + f.down_cusps) / 2;
    ci.r = (f.down_cusps - f.up_cusps) / 2;
    ci.components = 1;
    return ci;
}

enum class Corner { NW, NE, SW, SE };

inline const char* to_string(Corner c)
{
    switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
    }
    return "?";
}

inline constexpr Corner all_corners[] = {Corner::NW, Corner::NE, Corner::SW, Corner::SE};

/// X-stabilization at the X marking of `row` (1-indexed). The X cell becomes a
/// 2x2 block holding two X's on one diagonal, an O, and an empty cell at the
/// corner named by `corner`; the O sits diagonally opposite the empty cell.
inline GridDiagram stabilize(const GridDiagram& g, int row, Corner corner)
{
    const int n = g.size();
    if (row < 1 || row > n)
        throw Error(ErrorKind::BadIndex, "row " + std::to_string(row) + " outside 1.." + std::to_string(n));
    const int r = row - 1;
    const int c = g.x_col(r);

    const bool empty_east = corner == Corner::NE || corner == Corner::SE;
    const bool empty_north = corner == Corner::NW || corner == Corner::NE;
    const int col_o = empty_east ? c + 1 : c; // column keeping the old column O
    const int row_o = empty_north ? r + 1 : r; // row keeping the old row O
    const int col_other = empty_east ? c : c + 1;
    const int row_other = empty_north ? r : r + 1;

    auto shift_row = [r](int rr) { return rr < r ? rr : rr + 1; };
    auto shift_col = [c, col_o](int cc) { return cc < c ? cc : (cc > c ? cc + 1 : col_o); };

    std::vector<int> x(n + 1), o(n + 1);
    for (int rr = 0; rr < n; ++rr) {
        if (rr == r)
            continue;
        x[shift_row(rr)] = shift_col(g.x_col(rr));
        o[shift_row(rr)] = shift_col(g.o_col(rr));
    }
    x[row_o] = col_other;
    o[row_o] = shift_col(g.o_col(r));
    x[row_other] = col_o;
    o[row_other] = col_other;
    return from_zero_based(std::move(x), std::move(o)).with_name(g.name());
}

/// 1-indexed cell of the O created by stabilize(g, row, corner).
inline std::pair<int, int> stabilization_corner_cell(const GridDiagram& g, int row, Corner corner)
{
    const int r = row - 1;
    const int c = g.x_col(r);
    const bool empty_east = corner == Corner::NE || corner == Corner::SE;
    const bool empty_north = corner == Corner::NW || corner == Corner::NE;
    return {(empty_north ? r : r + 1) + 1, (empty_east ? c : c + 1) + 1};
}

/// Inverse of a stabilization. (row, col) is the 1-indexed cell of a marking
/// whose row partner and column partner are both adjacent to it.
inline GridDiagram destabilize(const GridDiagram& g, int row, int col)
{
    const int n = g.size();
    if (n < 3)
        throw Error(ErrorKind::NotADestabilization, "grid too small to destabilize");
    if (row < 1 || row > n || col < 1 || col > n)
        throw Error(ErrorKind::BadIndex, "cell outside the grid");
    const int j = row - 1, k = col - 1;
    int row_partner_col, col_partner_row;
    if (g.x_col(j) == k) {
        row_partner_col = g.o_col(j);
        col_partner_row = g.o_row(k);
    } else if (g.o_col(j) == k) {
        row_partner_col = g.x_col(j);
        col_partner_row = g.x_row(k);
    } else {
        throw Error(ErrorKind::NotADestabilization, "no marking in the given cell");
    }
    if (std::abs(row_partner_col - k) != 1 || std::abs(col_partner_row - j) != 1)
        throw Error(ErrorKind::NotADestabilization, "marking partners are not adjacent");

    // Delete row j and column k; the row partner moves into the column partner's row.
    auto drop_col = [k](int cc) { return cc < k ? cc : cc - 1; };
    auto drop_row = [j](int rr) { return rr < j ? rr : rr - 1; };
    const bool marked_x = g.x_col(j) == k;
    std::vector<int> x(n - 1), o(n - 1);
    for (int rr = 0; rr < n; ++rr) {
        if (rr == j)
            continue;
        const int nr = drop_row(rr);
        if (rr == col_partner_row) {
            // this row loses its marking in column k and gains the row partner
            if (marked_x) {
                x[nr] = drop_col(g.x_col(rr));
                o[nr] = drop_col(row_partner_col);
            } else {
                o[nr] = drop_col(g.o_col(rr));
                x[nr] = drop_col(row_partner_col);
            }
        } else {
            x[nr] = drop_col(g.x_col(rr));
            o[nr] = drop_col(g.o_col(rr));
        }
    }
    try {
        return from_zero_based(std::move(x), std::move(o)).with_name(g.name());
    } catch (const Error& e) {
        throw Error(ErrorKind::NotADestabilization, e.what());
    }
}

/// True when the vertical segments of columns c and c+1 (0-indexed) are
/// disjoint or strictly nested.
inline bool columns_commute(const GridDiagram& g, int c)
{
    const int a0 = std::min(g.x_row(c), g.o_row(c)), a1 = std::max(g.x_row(c), g.o_row(c));
    const int b0 = std::min(g.x_row(c + 1), g.o_row(c + 1)), b1 = std::max(g.x_row(c + 1), g.o_row(c + 1));
    if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1)
        return false;
    const bool disjoint = a1 < b0 || b1 < a0;
    const bool nested = (a0 < b0 && b1 < a1) || (b0 < a0 && a1 < b1);
    return disjoint || nested;
}

/// Swaps columns `column_index` and `column_index + 1` (1-indexed).
inline GridDiagram commute(const GridDiagram& g, int column_index)
{
    const int n = g.size();
    if (column_index < 1 || column_index >= n)
        throw Error(ErrorKind::BadIndex, "column " + std::to_string(column_index) + " outside 1.." +
                                             std::to_string(n - 1));
    const int c = column_index - 1;
    if (!columns_commute(g, c))
        throw Error(ErrorKind::Interleaved,
                    "columns " + std::to_string(column_index) + " and " + std::to_string(column_index + 1) +
                        " interleave");
    std::vector<int> x = g.x_cols(), o = g.o_cols();
    auto swap_col = [c](int v) { return v == c ? c + 1 : (v == c + 1 ? c : v); };
    for (int r = 0; r < n; ++r) {
        x[r] = swap_col(x[r]);
        o[r] = swap_col(o[r]);
    }
    return from_zero_based(std::move(x), std::move(o)).with_name(g.name());
}

/// Reflection in a vertical line (column c -> n+1-c); presents the mirror.
inline GridDiagram mirror(const GridDiagram& g)
{
    const int n = g.size();
    std::vector<int> x(n), o(n);
    for (int r = 0; r < n; ++r) {
        x[r] = n - 1 - g.x_col(r);
        o[r] = n - 1 - g.o_col(r);
    }
    return from_zero_based(std::move(x), std::move(o)).with_name(g.name());
}

/// Exchanges X and O; presents the orientation reverse.
inline GridDiagram reverse(const GridDiagram& g)
{
    return from_zero_based(g.o_cols(), g.x_cols()).with_name(g.name());
}

/// Stable 64-bit FNV-1a hash of the marking data.
inline std::uint64_t grid_hash(const GridDiagram& g)
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
        h ^= static_cast<std::uint64_t>(v & 0xff);
        h *= 1099511628211ull;
    };
    mix(g.size());
    for (int v : g.x_cols())
        mix(v);
    for (int v : g.o_cols())
        mix(v);
    return h;
}

} // namespace gridlock
