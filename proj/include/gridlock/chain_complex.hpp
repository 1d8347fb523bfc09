#pragma once

// Grid states, their bigradings, and the rectangle-counting differentials.
//
// A state is a permutation: perm[i] is the height of the state point on the
// vertical grid line x = i (0-indexed lattice coordinates on the torus).
// Markings sit at cell centres (c + 1/2, r + 1/2).

#include <gridlock/error.hpp>
#include <gridlock/f2.hpp>
#include <gridlock/grid.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace gridlock {

inline constexpr std::uint64_t default_budget = 100'000'000;
inline constexpr int max_complex_size = 16;

struct Bigrading
{
    int maslov = 0;
    int alexander = 0;

    friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

struct GridState
{
    std::vector<int> perm;
    int maslov = 0;
    int alexander = 0;

    Bigrading bigrading() const { return {maslov, alexander}; }
    friend bool operator==(const GridState&, const GridState&) = default;
};

using BigradedDims = std::map<Bigrading, std::size_t>;

struct AlexanderWindow
{
    int lo = 0;
    int hi = 0;

    bool contains(int a) const noexcept { return lo <= a && a <= hi; }
    friend bool operator==(const AlexanderWindow&, const AlexanderWindow&) = default;
};

inline std::size_t total_dimension(const BigradedDims& d)
{
    std::size_t t = 0;
    for (const auto& [k, v] : d)
        t += v;
    return t;
}

/// Corner-count grading formulas, precomputed per lattice point:
///   M_O(x) = J(x,x) - 2 J(x,O) + J(O,O) + 1,  M_X likewise,
///   A(x)   = (M_O(x) - M_X(x) - (n-1)) / 2,
/// with J the symmetrised count of strictly north-east pairs.
class GradingContext
{
public:
    explicit GradingContext(const GridDiagram& g)
        : n_(g.size())
        , o_count_(n_ * n_, 0)
        , x_count_(n_ * n_, 0)
    {
        const int comps = trace_components(g);
        if (comps != 1)
            throw Error(ErrorKind::MultiComponent,
                        "gradings need a knot, grid has " + std::to_string(comps) + " components");
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                int co = 0, cx = 0;
                for (int r = 0; r < n_; ++r) {
                    co += ne_or_sw(a, b, g.o_col(r), r);
                    cx += ne_or_sw(a, b, g.x_col(r), r);
                }
                o_count_[a * n_ + b] = co;
                x_count_[a * n_ + b] = cx;
            }
        }
        for (int r1 = 0; r1 < n_; ++r1) {
            for (int r2 = 0; r2 < n_; ++r2) {
                if (g.o_col(r1) < g.o_col(r2) && r1 < r2)
                    ++oo_;
                if (g.x_col(r1) < g.x_col(r2) && r1 < r2)
                    ++xx_;
            }
        }
        alexander2_base_ = oo_ - xx_ - (n_ - 1);
    }

    int size() const noexcept { return n_; }

    int maslov(std::span<const int> perm) const
    {
        int noninv = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (perm[i] < perm[j])
                    ++noninv;
        int co = 0;
        for (int i = 0; i < n_; ++i)
            co += o_count_[i * n_ + perm[i]];
        return noninv - co + oo_ + 1;
    }

    /// Contribution of the point (i, y) to twice the Alexander grading, negated.
    int alexander2_weight(int i, int y) const { return o_count_[i * n_ + y] - x_count_[i * n_ + y]; }
    int alexander2_base() const noexcept { return alexander2_base_; }

    int alexander(std::span<const int> perm) const
    {
        int a2 = alexander2_base_;
        for (int i = 0; i < n_; ++i)
            a2 -= alexander2_weight(i, perm[i]);
        return a2 / 2;
    }

    Bigrading gradings(std::span<const int> perm) const { return {maslov(perm), alexander(perm)}; }

    GridState make_state(std::vector<int> perm) const
    {
        const Bigrading b = gradings(perm);
        return GridState{std::move(perm), b.maslov, b.alexander};
    }

private:
    // Marking at the centre of cell (c, r) against the lattice point (a, b):
    // 1 if strictly north-east or strictly south-west of it.
    static int ne_or_sw(int a, int b, int c, int r)
    {
        const bool ne = c >= a && r >= b;
        const bool sw = c < a && r < b;
        return (ne || sw) ? 1 : 0;
    }

    int n_;
    std::vector<int> o_count_, x_count_;
    int oo_ = 0, xx_ = 0;
    int alexander2_base_ = 0;
};

inline Bigrading gradings(const GridDiagram& g, std::span<const int> perm)
{
    return GradingContext(g).gradings(perm);
}

inline std::uint64_t pack_perm(std::span<const int> perm)
{
    std::uint64_t key = 0;
    for (int v : perm)
        key = (key << 4) | static_cast<std::uint64_t>(v);
    return key;
}

/// Exact minimum and maximum Alexander grading over all states (subset DP).
inline AlexanderWindow alexander_range(const GridDiagram& g)
{
    const GradingContext ctx(g);
    const int n = g.size();
    if (n > 22)
        throw Error(ErrorKind::BudgetExceeded, "Alexander range DP limited to n <= 22");
    const std::size_t full = std::size_t{1} << n;
    constexpr int inf = std::numeric_limits<int>::max() / 2;
    std::vector<int> lo(full, inf), hi(full, -inf);
    lo[0] = hi[0] = 0;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (lo[mask] == inf)
            continue;
        const int i = std::popcount(mask);
        if (i == n)
            continue;
        for (int y = 0; y < n; ++y) {
            if (mask & (std::size_t{1} << y))
                continue;
            const std::size_t next = mask | (std::size_t{1} << y);
            const int w = ctx.alexander2_weight(i, y);
            lo[next] = std::min(lo[next], lo[mask] + w);
            hi[next] = std::max(hi[next], hi[mask] + w);
        }
    }
    // A = (base - sum) / 2, so the extremes swap.
    return {(ctx.alexander2_base() - hi[full - 1]) / 2, (ctx.alexander2_base() - lo[full - 1]) / 2};
}

struct EnumerateOptions
{
    std::optional<AlexanderWindow> window;
    /// Inclusive Maslov range applied to the emitted states.
    std::optional<std::pair<int, int>> maslov_range;
    std::uint64_t budget = default_budget;
};

/// All states (lexicographic by perm) whose gradings pass the filters. With a
/// window, branches whose partial Alexander sum cannot reach it are pruned.
inline std::vector<GridState> enumerate_states(const GridDiagram& g, const EnumerateOptions& opt)
{
    const GradingContext ctx(g);
    const int n = g.size();
    if (n > max_complex_size)
        throw Error(ErrorKind::BudgetExceeded, "grid size " + std::to_string(n) + " exceeds " +
                                                   std::to_string(max_complex_size));
    if (!opt.window) {
        std::uint64_t fact = 1;
        for (int k = 2; k <= n; ++k) {
            fact *= static_cast<std::uint64_t>(k);
            if (fact > opt.budget)
                throw Error(ErrorKind::BudgetExceeded,
                            std::to_string(n) + "! states exceed budget " + std::to_string(opt.budget));
        }
    }

    // sum of weights must lie in [need_lo, need_hi]
    int need_lo = std::numeric_limits<int>::min() / 2, need_hi = std::numeric_limits<int>::max() / 2;
    if (opt.window) {
        need_lo = ctx.alexander2_base() - 2 * opt.window->hi;
        need_hi = ctx.alexander2_base() - 2 * opt.window->lo;
    }

    std::vector<GridState> out;
    std::vector<int> perm(n, -1);
    std::uint32_t used = 0;

    std::function<void(int, int)> dfs = [&](int i, int partial) {
        if (i == n) {
            if (partial < need_lo || partial > need_hi)
                return;
            const int m = ctx.maslov(perm);
            if (opt.maslov_range && (m < opt.maslov_range->first || m > opt.maslov_range->second))
                return;
            if (out.size() >= opt.budget)
                throw Error(ErrorKind::BudgetExceeded,
                            "state count exceeds budget " + std::to_string(opt.budget));
            out.push_back(GridState{perm, m, (ctx.alexander2_base() - partial) / 2});
            return;
        }
        if (opt.window) {
            int rest_lo = 0, rest_hi = 0;
            for (int k = i; k < n; ++k) {
                int mn = std::numeric_limits<int>::max(), mx = std::numeric_limits<int>::min();
                for (int y = 0; y < n; ++y) {
                    if (used & (1u << y))
                        continue;
                    const int w = ctx.alexander2_weight(k, y);
                    mn = std::min(mn, w);
                    mx = std::max(mx, w);
                }
                rest_lo += mn;
                rest_hi += mx;
            }
            if (partial + rest_hi < need_lo || partial + rest_lo > need_hi)
                return;
        }
        for (int y = 0; y < n; ++y) {
            if (used & (1u << y))
                continue;
            used |= 1u << y;
            perm[i] = y;
            dfs(i + 1, partial + ctx.alexander2_weight(i, y));
            used &= ~(1u << y);
        }
    };
    dfs(0, 0);
    return out;
}

inline std::vector<GridState> enumerate_states(const GridDiagram& g,
                                               std::optional<AlexanderWindow> window = std::nullopt,
                                               std::uint64_t budget = default_budget)
{
    EnumerateOptions opt;
    opt.window = window;
    opt.budget = budget;
    return enumerate_states(g, opt);
}

enum class ComplexKind { Tilde, Filtered };

struct DifferentialKey
{
    Bigrading source;
    int weight = 0;

    friend auto operator<=>(const DifferentialKey&, const DifferentialKey&) = default;
};

/// States bucketed by bigrading with sparse differentials between buckets.
/// differentials[{b, w}] maps bucket b to bucket (b.maslov - 1, b.alexander - w);
/// rows index the target bucket, columns the source bucket.
class BigradedComplex
{
public:
    int grid_size = 0;
    ComplexKind kind = ComplexKind::Tilde;
    std::optional<AlexanderWindow> window;

    /// Sorted by (maslov, alexander, perm); every bucket is a contiguous range.
    std::vector<GridState> states;
    std::map<Bigrading, std::pair<std::size_t, std::size_t>> bucket_ranges;
    std::map<DifferentialKey, F2Matrix> differentials;

    std::span<const GridState> bucket(const Bigrading& b) const
    {
        auto it = bucket_ranges.find(b);
        if (it == bucket_ranges.end())
            return {};
        return std::span<const GridState>(states).subspan(it->second.first, it->second.second - it->second.first);
    }

    std::size_t bucket_size(const Bigrading& b) const { return bucket(b).size(); }

    std::size_t offset(const Bigrading& b) const { return bucket_ranges.at(b).first; }

    std::optional<std::size_t> index_of(std::span<const int> perm) const
    {
        auto it = index_.find(pack_perm(perm));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// Differential out of bucket b at X-weight w; an empty matrix of the
    /// right shape when no entries exist.
    F2Matrix differential(const Bigrading& b, int weight = 0) const
    {
        auto it = differentials.find({b, weight});
        if (it != differentials.end())
            return it->second;
        return F2Matrix(bucket_size({b.maslov - 1, b.alexander - weight}), bucket_size(b));
    }

    int max_weight() const
    {
        int w = 0;
        for (const auto& [k, m] : differentials)
            w = std::max(w, k.weight);
        return w;
    }

    /// Total differential as columns over global state indices.
    std::vector<SparseVec> total_columns() const
    {
        std::vector<std::vector<std::uint32_t>> cols(states.size());
        for (const auto& [key, m] : differentials) {
            const std::size_t src = offset(key.source);
            const std::size_t tgt = offset({key.source.maslov - 1, key.source.alexander - key.weight});
            for (std::size_t c = 0; c < m.cols(); ++c)
                for (auto r : m.column(c))
                    cols[src + c].push_back(static_cast<std::uint32_t>(tgt + r));
        }
        std::vector<SparseVec> out(states.size());
        for (std::size_t i = 0; i < cols.size(); ++i)
            out[i] = reduce_mod2(std::move(cols[i]));
        return out;
    }

    void rebuild_index()
    {
        index_.clear();
        index_.reserve(states.size());
        for (std::size_t i = 0; i < states.size(); ++i)
            index_.emplace(pack_perm(states[i].perm), i);
    }

private:
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

namespace detail {

// X and O counts of every rectangle on the torus, keyed by lower-left cell,
// width and height (both 1..n-1).
class RectangleTable
{
public:
    explicit RectangleTable(const GridDiagram& g)
        : n_(g.size())
        , counts_(static_cast<std::size_t>(n_) * n_ * n_ * n_)
    {
        for (int c0 = 0; c0 < n_; ++c0)
            for (int w = 1; w < n_; ++w)
                for (int r0 = 0; r0 < n_; ++r0)
                    for (int h = 1; h < n_; ++h) {
                        std::uint8_t xs = 0, os = 0;
                        for (int r = 0; r < n_; ++r) {
                            if ((r - r0 + n_) % n_ >= h)
                                continue;
                            if ((g.x_col(r) - c0 + n_) % n_ < w)
                                ++xs;
                            if ((g.o_col(r) - c0 + n_) % n_ < w)
                                ++os;
                        }
                        counts_[key(c0, w, r0, h)] = {xs, os};
                    }
    }

    std::pair<std::uint8_t, std::uint8_t> at(int c0, int w, int r0, int h) const { return counts_[key(c0, w, r0, h)]; }

private:
    std::size_t key(int c0, int w, int r0, int h) const
    {
        return ((static_cast<std::size_t>(c0) * n_ + w) * n_ + r0) * n_ + h;
    }

    int n_;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> counts_;
};

struct Arrow
{
    std::uint32_t source;
    std::uint32_t target;
    std::uint8_t weight;

    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

inline bool inside_open_arc(int v, int start, int len, int n)
{
    const int d = (v - start + n) % n;
    return d > 0 && d < len;
}

// Rectangles out of states [begin, end). Both candidate rectangles of every
// transposition are tested; arrows from one source are counted mod 2 before
// they are appended.
inline void collect_arrows(const BigradedComplex& c, const RectangleTable& rects, ComplexKind kind,
                           std::size_t begin, std::size_t end, std::vector<Arrow>& out)
{
    const int n = c.grid_size;
    std::vector<int> y(n);
    std::vector<Arrow> local;
    for (std::size_t s = begin; s < end; ++s) {
        const auto& p = c.states[s].perm;
        local.clear();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int which = 0; which < 2; ++which) {
                    // which == 0: columns i..j, lower-left corner (i, p[i]).
                    // which == 1: columns j..i+n, lower-left corner (j, p[j]).
                    const int c0 = which == 0 ? i : j;
                    const int width = which == 0 ? j - i : n - (j - i);
                    const int r0 = which == 0 ? p[i] : p[j];
                    const int r1 = which == 0 ? p[j] : p[i];
                    const int height = (r1 - r0 + n) % n;
                    const auto [xs, os] = rects.at(c0, width, r0, height);
                    if (os != 0)
                        continue;
                    if (kind == ComplexKind::Tilde && xs != 0)
                        continue;
                    bool empty = true;
                    for (int k = 0; k < n && empty; ++k) {
                        if (k == i || k == j)
                            continue;
                        if (inside_open_arc(k, c0, width, n) && inside_open_arc(p[k], r0, height, n))
                            empty = false;
                    }
                    if (!empty)
                        continue;
                    std::copy(p.begin(), p.end(), y.begin());
                    std::swap(y[i], y[j]);
                    auto t = c.index_of(y);
                    if (!t)
                        continue; // outside the enumerated window
                    const auto& src = c.states[s];
                    const auto& tgt = c.states[*t];
                    if (tgt.maslov != src.maslov - 1 || tgt.alexander != src.alexander - xs)
                        throw std::logic_error("rectangle connects states with inconsistent gradings");
                    local.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(*t), static_cast<std::uint8_t>(xs)});
                }
            }
        }
        std::sort(local.begin(), local.end());
        for (std::size_t a = 0; a < local.size();) {
            std::size_t b = a;
            while (b < local.size() && local[b] == local[a])
                ++b;
            if ((b - a) % 2 == 1)
                out.push_back(local[a]);
            a = b;
        }
    }
}

inline BigradedComplex build_complex(const GridDiagram& g, std::vector<GridState> states, ComplexKind kind,
                                     std::optional<AlexanderWindow> window, int threads)
{
    const int n = g.size();
    if (n > max_complex_size)
        throw Error(ErrorKind::BudgetExceeded, "grid size exceeds " + std::to_string(max_complex_size));
    BigradedComplex c;
    c.grid_size = n;
    c.kind = kind;
    c.window = window;
    std::stable_sort(states.begin(), states.end(), [](const GridState& a, const GridState& b) {
        return std::tie(a.maslov, a.alexander) < std::tie(b.maslov, b.alexander);
    });
    c.states = std::move(states);
    for (std::size_t i = 0; i < c.states.size();) {
        std::size_t j = i;
        const Bigrading b = c.states[i].bigrading();
        while (j < c.states.size() && c.states[j].bigrading() == b)
            ++j;
        c.bucket_ranges.emplace(b, std::make_pair(i, j));
        i = j;
    }
    c.rebuild_index();

    const RectangleTable rects(g);
    threads = std::max(1, threads);
    const std::size_t total = c.states.size();
    const std::size_t chunk = (total + threads - 1) / threads;
    std::vector<std::vector<Arrow>> parts(threads);
    if (threads == 1 || total < 1024) {
        collect_arrows(c, rects, kind, 0, total, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            const std::size_t b = std::min(total, t * chunk), e = std::min(total, (t + 1) * chunk);
            pool.emplace_back([&, b, e, t] { collect_arrows(c, rects, kind, b, e, parts[t]); });
        }
        for (auto& th : pool)
            th.join();
    }
    // One matrix per (source bucket, weight), filled column by column.
    std::map<DifferentialKey, std::vector<SparseVec>> columns;
    for (auto& part : parts) {
        for (const auto& a : part) {
            const Bigrading sb = c.states[a.source].bigrading();
            const Bigrading tb = c.states[a.target].bigrading();
            auto& cols = columns[{sb, a.weight}];
            if (cols.empty())
                cols.resize(c.bucket_size(sb));
            cols[a.source - c.offset(sb)].push_back(static_cast<std::uint32_t>(a.target - c.offset(tb)));
        }
        std::vector<Arrow>().swap(part);
    }
    for (auto& [key, cols] : columns) {
        const Bigrading tb{key.source.maslov - 1, key.source.alexander - key.weight};
        for (auto& col : cols)
            std::sort(col.begin(), col.end());
        c.differentials.emplace(key, F2Matrix::from_columns(c.bucket_size(tb), std::move(cols)));
    }
    return c;
}

} // namespace detail

/// Differential counting empty rectangles that contain no X and no O.
inline BigradedComplex tilde_differential(const GridDiagram& g, std::vector<GridState> states,
                                          std::optional<AlexanderWindow> window = std::nullopt, int threads = 1)
{
    return detail::build_complex(g, std::move(states), ComplexKind::Tilde, window, threads);
}

/// Differential counting empty rectangles with no O; a rectangle holding w
/// X's lowers the Alexander grading by w.
inline BigradedComplex filtered_differential(const GridDiagram& g, std::vector<GridState> states,
                                             std::optional<AlexanderWindow> window = std::nullopt, int threads = 1)
{
    return detail::build_complex(g, std::move(states), ComplexKind::Filtered, window, threads);
}

/// Checks that the differential squares to zero. Windows must cover every
/// Alexander grading a state can have.
inline bool certify_d_squared(const BigradedComplex& c, const GridDiagram& g)
{
    if (c.window) {
        const AlexanderWindow full = alexander_range(g);
        if (c.window->lo > full.lo || c.window->hi < full.hi)
            throw Error(ErrorKind::WindowTooNarrow, "window [" + std::to_string(c.window->lo) + ", " +
                                                        std::to_string(c.window->hi) +
                                                        "] does not cover the Alexander range [" +
                                                        std::to_string(full.lo) + ", " + std::to_string(full.hi) + "]");
    }
    const auto cols = c.total_columns();
    std::vector<std::uint32_t> acc;
    for (const auto& col : cols) {
        acc.clear();
        for (auto t : col)
            acc.insert(acc.end(), cols[t].begin(), cols[t].end());
        if (!reduce_mod2(acc).empty())
            return false;
    }
    return true;
}

/// Homology of the weight-0 part, bucket by bucket.
inline BigradedDims tilde_homology_dims(const BigradedComplex& c)
{
    BigradedDims dims;
    for (const auto& [b, range] : c.bucket_ranges) {
        const std::size_t size = range.second - range.first;
        const std::size_t out_rank = rank(c.differential(b, 0));
        const Bigrading above{b.maslov + 1, b.alexander};
        const std::size_t in_rank = c.bucket_size(above) ? rank(c.differential(above, 0)) : 0;
        const std::size_t d = size - out_rank - in_rank;
        if (d > 0)
            dims[b] = d;
    }
    return dims;
}

namespace detail {

inline std::vector<std::size_t> binomial_row(int m)
{
    std::vector<std::size_t> row(m + 1, 1);
    for (int k = 1; k < m; ++k)
        row[k] = row[k - 1] * (m - k + 1) / k;
    return row;
}

} // namespace detail

/// Undoes tilde = hat (x) V^(n-1), V spanned by bigradings (0,0) and (-1,-1):
///   tilde(d, s) = sum_k C(n-1, k) hat(d + k, s + k).
/// With a floor, the input is only known at Alexander gradings >= floor (a
/// window reaching the top grading) and the output is restricted likewise.
inline BigradedDims hat_dims_from_tilde(const BigradedDims& tilde, int n, std::optional<int> floor = std::nullopt)
{
    const auto binom = detail::binomial_row(n - 1);
    std::map<Bigrading, long long> hat;
    // Highest Alexander grading first; every correction term sits above.
    std::vector<Bigrading> keys;
    for (const auto& [b, d] : tilde)
        keys.push_back(b);
    std::sort(keys.begin(), keys.end(), [](const Bigrading& a, const Bigrading& b) {
        return std::tie(b.alexander, b.maslov) < std::tie(a.alexander, a.maslov);
    });
    for (const auto& b : keys) {
        long long v = static_cast<long long>(tilde.at(b));
        for (int k = 1; k < n; ++k) {
            auto it = hat.find({b.maslov + k, b.alexander + k});
            if (it != hat.end())
                v -= static_cast<long long>(binom[k]) * it->second;
        }
        if (v < 0)
            throw Error(ErrorKind::NotDeconvolvable, "negative dimension at (" + std::to_string(b.maslov) + ", " +
                                                         std::to_string(b.alexander) + ")");
        if (v > 0)
            hat[b] = v;
    }
    // The reconstruction must not spill below the given support.
    std::map<Bigrading, long long> back;
    for (const auto& [b, v] : hat)
        for (int k = 0; k < n; ++k)
            back[{b.maslov - k, b.alexander - k}] += static_cast<long long>(binom[k]) * v;
    for (const auto& [b, v] : back) {
        if (floor && b.alexander < *floor)
            continue;
        auto it = tilde.find(b);
        const long long want = it == tilde.end() ? 0 : static_cast<long long>(it->second);
        if (v != want)
            throw Error(ErrorKind::NotDeconvolvable, "tilde dimensions are not a V-tensor power at (" +
                                                         std::to_string(b.maslov) + ", " +
                                                         std::to_string(b.alexander) + ")");
    }
    BigradedDims out;
    for (const auto& [b, v] : hat)
        out[b] = static_cast<std::size_t>(v);
    return out;
}

/// hat(d, s) convolved back to tilde dimensions.
inline BigradedDims tilde_dims_from_hat(const BigradedDims& hat, int n)
{
    const auto binom = detail::binomial_row(n - 1);
    BigradedDims out;
    for (const auto& [b, v] : hat)
        for (int k = 0; k < n; ++k)
            out[{b.maslov - k, b.alexander - k}] += binom[k] * v;
    return out;
}

struct HatHomology
{
    BigradedDims tilde;
    BigradedDims hat;
    std::size_t tilde_rank = 0;
};

/// Full pipeline: enumerate, build the tilde complex, deconvolve.
inline HatHomology hat_homology(const GridDiagram& g, std::uint64_t budget = default_budget, int threads = 1)
{
    auto states = enumerate_states(g, std::nullopt, budget);
    const auto c = tilde_differential(g, std::move(states), std::nullopt, threads);
    HatHomology h;
    h.tilde = tilde_homology_dims(c);
    h.tilde_rank = total_dimension(h.tilde);
    h.hat = hat_dims_from_tilde(h.tilde, g.size());
    return h;
}

} // namespace gridlock
