#pragma once

// Independent checks used by the unit and acceptance tests.

#include <gridlock/gridlock.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------- front

struct Front
{
    int writhe = 0;
    int up = 0, down = 0;
    int tb() const { return writhe - (up + down) / 2; }
    int r() const { return (down - up) / 2; }
};

// Draws the knot inside the square (vertical segments X -> O, horizontal
// segments O -> X), rotates by 45 degrees clockwise so the front coordinate
// is X = x + y, Z = y - x, and reads cusps and crossings off the picture.
// Horizontal strands have slope -1 in the front and lie in front.
inline Front front_oracle(const gridlock::GridDiagram& g)
{
    const int n = g.size();
    struct Seg
    {
        int x0, y0, x1, y1; // from (x0, y0) to (x1, y1), cell centres
    };
    std::vector<Seg> vert, horiz;
    for (int c = 0; c < n; ++c)
        vert.push_back({c, g.x_row(c), c, g.o_row(c)});
    for (int r = 0; r < n; ++r)
        horiz.push_back({g.o_col(r), r, g.x_col(r), r});

    Front f;
    auto between = [](int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); };
    for (const auto& h : horiz)
        for (const auto& v : vert)
            if (between(v.x0, h.x0, h.x1) && between(h.y0, v.y0, v.y1)) {
                const int ox = h.x1 > h.x0 ? 1 : -1; // over strand direction (ox, 0)
                const int uy = v.y1 > v.y0 ? 1 : -1; // under strand direction (0, uy)
                f.writhe += ox * uy > 0 ? 1 : -1;    // sign of cross(over, under)
            }

    // Each marking joins the incoming segment to the outgoing one.
    auto corner = [&](int dx_in, int dy_in, int dx_out, int dy_out) {
        const int X_in = dx_in + dy_in, X_out = dx_out + dy_out;
        if ((X_in > 0) == (X_out > 0))
            return; // front coordinate keeps moving the same way: no cusp
        const int Z_in = dy_in - dx_in;
        if (Z_in < 0)
            ++f.down;
        else
            ++f.up;
    };
    for (int r = 0; r < n; ++r) {
        // At X in row r: horizontal arrives, vertical leaves.
        const auto& h = horiz[r];
        const int c = g.x_col(r);
        const auto& v = vert[c];
        corner(h.x1 > h.x0 ? 1 : -1, 0, 0, v.y1 > v.y0 ? 1 : -1);
    }
    for (int r = 0; r < n; ++r) {
        // At O in row r: vertical arrives, horizontal leaves.
        const int c = g.o_col(r);
        const auto& v = vert[c];
        const auto& h = horiz[r];
        corner(0, v.y1 > v.y0 ? 1 : -1, h.x1 > h.x0 ? 1 : -1, 0);
    }
    return f;
}

// ---------------------------------------------------------------- dense F2

using Row = std::vector<std::uint8_t>;

inline std::size_t dense_rank(std::vector<Row> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && !m[piv][c])
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != rank && m[r][c])
                for (std::size_t k = 0; k < cols; ++k)
                    m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

// Basis of {v : M v = 0} for M given by rows over `cols` unknowns.
inline std::vector<Row> nullspace(std::vector<Row> m, std::size_t cols)
{
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && !m[piv][c])
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != rank && m[r][c])
                for (std::size_t k = 0; k < cols; ++k)
                    m[r][k] ^= m[rank][k];
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_col)
        is_pivot[c] = 1;
    std::vector<Row> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Row v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (m[i][f])
                v[pivot_col[i]] = 1;
        basis.push_back(v);
    }
    return basis;
}

// ---------------------------------------------------------------- filtered complex

// Dense total differential of a fully enumerated filtered complex.
struct Dense
{
    std::vector<int> maslov, alex;
    std::vector<Row> d; // d[target][source]
    std::size_t size() const { return maslov.size(); }
};

inline Dense dense_total(const gridlock::BigradedComplex& c)
{
    Dense D;
    for (const auto& s : c.states) {
        D.maslov.push_back(s.maslov);
        D.alex.push_back(s.alexander);
    }
    D.d.assign(c.states.size(), Row(c.states.size(), 0));
    const auto cols = c.total_columns();
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto i : cols[j])
            D.d[i][j] = 1;
    return D;
}

// Indices in degree m with Alexander grading in [lo, hi].
inline std::vector<std::size_t> select(const Dense& D, int m, int lo, int hi)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < D.size(); ++i)
        if (D.maslov[i] == m && D.alex[i] >= lo && D.alex[i] <= hi)
            out.push_back(i);
    return out;
}

// Vectors y supported on `dom` whose boundary vanishes at every index of
// degree m - 1 with Alexander grading > floor_level, as global vectors.
inline std::vector<Row> cycles_mod(const Dense& D, const std::vector<std::size_t>& dom, int m, int floor_level)
{
    std::vector<Row> eqs;
    for (std::size_t t = 0; t < D.size(); ++t) {
        if (D.maslov[t] != m - 1 || D.alex[t] <= floor_level)
            continue;
        Row e;
        for (auto s : dom)
            e.push_back(D.d[t][s]);
        eqs.push_back(e);
    }
    if (eqs.empty())
        eqs.push_back(Row(dom.size(), 0));
    std::vector<Row> out;
    for (const auto& v : nullspace(eqs, dom.size())) {
        Row g(D.size(), 0);
        for (std::size_t k = 0; k < dom.size(); ++k)
            g[dom[k]] = v[k];
        out.push_back(g);
    }
    return out;
}

inline Row boundary_of(const Dense& D, const Row& v)
{
    Row out(D.size(), 0);
    for (std::size_t s = 0; s < D.size(); ++s)
        if (v[s])
            for (std::size_t t = 0; t < D.size(); ++t)
                out[t] ^= D.d[t][s];
    return out;
}

// dim E_r at (m, p) from
//   Z_r^p = {x in F_p : dx in F_{p-r}},
//   E_r^p = Z_r^p / (Z_{r-1}^{p-1} + d Z_{r-1}^{p+r-1}).
inline std::size_t page_dim(const Dense& D, int r, int m, int p, int lo, int hi)
{
    const auto z = cycles_mod(D, select(D, m, lo, p), m, p - r);
    const auto z_lower = cycles_mod(D, select(D, m, lo, p - 1), m, p - 1 - (r - 1));
    std::vector<Row> b;
    for (const auto& y : cycles_mod(D, select(D, m + 1, lo, p + r - 1), m + 1, p))
        b.push_back(boundary_of(D, y));
    std::vector<Row> denom = z_lower;
    denom.insert(denom.end(), b.begin(), b.end());
    std::vector<Row> all = denom;
    all.insert(all.end(), z.begin(), z.end());
    // denom is contained in Z_r^p, so dim E = rank(all) - rank(denom).
    return dense_rank(all) - dense_rank(denom);
}

// ---------------------------------------------------------------- class fate

// For the single state x (global index) at level a:
//   survives(k): some l in levels a-k+1 .. a-1 has d(x + l) in F_{a-k};
//   zero(k):     some w in levels a .. a+k-1 has d w = x modulo F_{a-1}.
struct ClassOracle
{
    const Dense& D;
    std::size_t x;

    int m() const { return D.maslov[x]; }
    int a() const { return D.alex[x]; }

    bool survives(int k) const
    {
        const auto dom = select(D, m(), a() - k + 1, a() - 1);
        const Row dx = boundary_of(D, unit());
        // Solve sum_l d(e_l) = dx on targets above a - k.
        std::vector<std::size_t> targets;
        for (std::size_t t = 0; t < D.size(); ++t)
            if (D.maslov[t] == m() - 1 && D.alex[t] > a() - k)
                targets.push_back(t);
        return solvable(dom, targets, dx);
    }

    bool zero(int k) const
    {
        const auto dom = select(D, m() + 1, a(), a() + k - 1);
        std::vector<std::size_t> targets;
        for (std::size_t t = 0; t < D.size(); ++t)
            if (D.maslov[t] == m() && D.alex[t] >= a())
                targets.push_back(t);
        return solvable(dom, targets, unit());
    }

    // Status of d_k on the class, from the definitions above.
    gridlock::Status delta(int k) const
    {
        for (int j = 1; j <= k; ++j)
            if (survives(j) && zero(j))
                return gridlock::Status::Vanishes;
        if (!survives(k))
            return gridlock::Status::Undefined;
        return survives(k + 1) ? gridlock::Status::Vanishes : gridlock::Status::Nonvanishing;
    }

private:
    Row unit() const
    {
        Row e(D.size(), 0);
        e[x] = 1;
        return e;
    }

    bool solvable(const std::vector<std::size_t>& dom, const std::vector<std::size_t>& targets, const Row& rhs) const
    {
        std::vector<Row> plain, augmented;
        for (auto t : targets) {
            Row e;
            for (auto s : dom)
                e.push_back(D.d[t][s]);
            plain.push_back(e);
            e.push_back(rhs[t]);
            augmented.push_back(e);
        }
        if (targets.empty())
            return true;
        return dense_rank(plain) == dense_rank(augmented);
    }
};

// ---------------------------------------------------------------- random grids

inline gridlock::GridDiagram random_grid(std::mt19937_64& rng, int n, bool knot_only)
{
    for (;;) {
        std::vector<int> x(n), o(n);
        std::iota(x.begin(), x.end(), 1);
        std::iota(o.begin(), o.end(), 1);
        std::shuffle(x.begin(), x.end(), rng);
        std::shuffle(o.begin(), o.end(), rng);
        bool shared = false;
        for (int i = 0; i < n; ++i)
            shared = shared || x[i] == o[i];
        if (shared)
            continue;
        auto g = gridlock::validate(n, x, o);
        if (knot_only && gridlock::trace_components(g) != 1)
            continue;
        return g;
    }
}

} // namespace oracle
