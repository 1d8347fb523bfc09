#pragma once

// Spectral sequence of the Alexander-filtered complex.
//
// Column reduction in filtration order (Alexander ascending inside each
// Maslov degree) produces a filtered basis in which the differential is a
// partial matching: a death element j maps to a birth element i, and the gap
// A(j) - A(i) is the page on which that differential acts. Elements that are
// unpaired, or paired with gap >= k, span E_k; pairs with gap exactly k form
// d_k. Each basis element keeps its chain in the original state basis (the
// transcript), whose largest index is the element's own index.

#include <gridlock/chain_complex.hpp>
#include <gridlock/error.hpp>
#include <gridlock/f2.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace gridlock {

enum class PairRole : std::uint8_t { Unknown, Unpaired, Birth, Death };

struct FilteredReduction
{
    std::vector<PairRole> role;
    std::vector<std::int64_t> partner; // -1 when unpaired or unknown
    std::vector<int> gap;
    std::vector<SparseVec> representative;
    /// Inclusive Maslov range whose roles are final.
    int maslov_lo = 0;
    int maslov_hi = -1;

    bool covers(int maslov) const noexcept { return maslov_lo <= maslov && maslov <= maslov_hi; }
};

namespace detail {

inline bool squares_to_zero(const std::vector<SparseVec>& cols)
{
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

inline std::pair<int, int> maslov_extent(const BigradedComplex& c)
{
    if (c.states.empty())
        return {0, -1};
    return {c.states.front().maslov, c.states.back().maslov};
}

} // namespace detail

/// Pairs every state in Maslov degrees [lo, hi] (default: all degrees).
/// Degrees are processed top-down so columns already known to be births are
/// skipped.
inline FilteredReduction reduce_filtered(const BigradedComplex& c,
                                         std::optional<std::pair<int, int>> maslov_range = std::nullopt)
{
    const auto cols = c.total_columns();
    if (!detail::squares_to_zero(cols))
        throw Error(ErrorKind::NotAComplex, "total differential does not square to zero");

    const std::size_t total = c.states.size();
    FilteredReduction fr;
    fr.role.assign(total, PairRole::Unknown);
    fr.partner.assign(total, -1);
    fr.gap.assign(total, 0);
    fr.representative.assign(total, {});

    auto [lo, hi] = maslov_range ? *maslov_range : detail::maslov_extent(c);
    fr.maslov_lo = lo;
    fr.maslov_hi = hi;
    if (total == 0 || lo > hi)
        return fr;

    // Global index range of each Maslov degree.
    auto degree_range = [&c](int m) {
        auto first = std::lower_bound(c.states.begin(), c.states.end(), m,
                                      [](const GridState& s, int v) { return s.maslov < v; });
        auto last = std::upper_bound(c.states.begin(), c.states.end(), m,
                                     [](int v, const GridState& s) { return v < s.maslov; });
        return std::make_pair(static_cast<std::size_t>(first - c.states.begin()),
                              static_cast<std::size_t>(last - c.states.begin()));
    };

    SparseVec scratch;
    for (int m = hi + 1; m >= lo; --m) {
        const auto [begin, end] = degree_range(m);
        const bool final_degree = m <= hi;
        std::unordered_map<std::uint32_t, std::uint32_t> pivot_of; // low row -> column
        std::vector<SparseVec> reduced(end - begin), combo(end - begin);
        for (std::size_t j = begin; j < end; ++j) {
            if (fr.role[j] == PairRole::Birth)
                continue; // cleared
            SparseVec col = cols[j];
            SparseVec v = {static_cast<std::uint32_t>(j)};
            while (!col.empty()) {
                auto it = pivot_of.find(col.back());
                if (it == pivot_of.end())
                    break;
                add_into(col, reduced[it->second - begin], scratch);
                add_into(v, combo[it->second - begin], scratch);
            }
            if (!col.empty()) {
                const std::uint32_t low = col.back();
                pivot_of.emplace(low, static_cast<std::uint32_t>(j));
                const int g = c.states[j].alexander - c.states[low].alexander;
                fr.role[low] = PairRole::Birth;
                fr.partner[low] = static_cast<std::int64_t>(j);
                fr.gap[low] = g;
                fr.representative[low] = col;
                if (final_degree) {
                    fr.role[j] = PairRole::Death;
                    fr.partner[j] = low;
                    fr.gap[j] = g;
                    fr.representative[j] = v;
                }
            } else if (final_degree) {
                fr.role[j] = PairRole::Unpaired;
                fr.representative[j] = v;
            }
            reduced[j - begin] = std::move(col);
            combo[j - begin] = std::move(v);
        }
    }
    // Births recorded in degree lo - 1 belong to an incomplete degree.
    for (std::size_t i = 0; i < total; ++i)
        if (!fr.covers(c.states[i].maslov)) {
            fr.role[i] = PairRole::Unknown;
            fr.partner[i] = -1;
            fr.representative[i].clear();
        }
    return fr;
}

/// One page of the spectral sequence.
struct PageData
{
    int k = 1;
    /// Lead indices of a basis of E_k, per bigrading.
    std::map<Bigrading, std::vector<std::size_t>> surviving_basis;
    /// d_k as (source lead, target lead) pairs.
    std::vector<std::pair<std::size_t, std::size_t>> d;

    BigradedDims dims() const
    {
        BigradedDims out;
        for (const auto& [b, v] : surviving_basis)
            if (!v.empty())
                out[b] = v.size();
        return out;
    }
};

struct PageReduction
{
    FilteredReduction reduction;
    std::vector<PageData> pages; // k = 1 .. k_max
    BigradedDims infinity;
};

inline bool survives_to(const FilteredReduction& fr, std::size_t i, int k)
{
    return fr.role[i] == PairRole::Unpaired || (fr.role[i] != PairRole::Unknown && fr.gap[i] >= k);
}

inline PageReduction reduce_pages(const BigradedComplex& c, int k_max)
{
    PageReduction out;
    out.reduction = reduce_filtered(c);
    const auto& fr = out.reduction;
    for (int k = 1; k <= k_max; ++k) {
        PageData page;
        page.k = k;
        for (std::size_t i = 0; i < c.states.size(); ++i) {
            if (!survives_to(fr, i, k))
                continue;
            page.surviving_basis[c.states[i].bigrading()].push_back(i);
            if (fr.role[i] == PairRole::Death && fr.gap[i] == k)
                page.d.emplace_back(i, static_cast<std::size_t>(fr.partner[i]));
        }
        out.pages.push_back(std::move(page));
    }
    for (std::size_t i = 0; i < c.states.size(); ++i)
        if (fr.role[i] == PairRole::Unpaired)
            ++out.infinity[c.states[i].bigrading()];
    return out;
}

/// Status of a map applied to a class.
enum class Status { Vanishes, Nonvanishing, Unknown, Undefined };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::Vanishes: return "vanishes";
    case Status::Nonvanishing: return "nonvanishing";
    case Status::Unknown: return "unknown";
    case Status::Undefined: return "undefined";
    }
    return "?";
}

/// Fate of one homogeneous chain through the pages.
struct ClassTrace
{
    /// Basis elements at the chain's top Alexander level in its expansion.
    std::vector<std::size_t> top_terms;
    bool nonzero_on_e1 = false;
    /// Smallest gap of a death element among the top terms (the page whose
    /// differential first moves the class); nullopt when it never moves.
    std::optional<int> supporting_page;

    bool zero_on_page(const FilteredReduction& fr, int k) const
    {
        return std::all_of(top_terms.begin(), top_terms.end(), [&fr, k](std::size_t b) {
            return fr.role[b] == PairRole::Birth && fr.gap[b] < k;
        });
    }

    /// Whether d_k kills the class: Undefined when the class already
    /// supported a nonzero d_j for some j < k.
    Status delta(int k) const
    {
        if (!nonzero_on_e1)
            return Status::Vanishes;
        if (!supporting_page || k < *supporting_page)
            return Status::Vanishes;
        if (k == *supporting_page)
            return Status::Nonvanishing;
        return Status::Undefined;
    }
};

/// Expands x (global state indices, one Maslov degree, a cycle of the
/// associated graded) in the reduction basis and reads off its fate.
inline ClassTrace trace_class(const FilteredReduction& fr, const BigradedComplex& c, SparseVec x)
{
    ClassTrace t;
    if (x.empty())
        return t;
    std::sort(x.begin(), x.end());
    const int maslov = c.states[x.front()].maslov;
    int top = std::numeric_limits<int>::min();
    for (auto i : x) {
        if (c.states[i].maslov != maslov)
            throw Error(ErrorKind::DimMismatch, "chain is not homogeneous in Maslov grading");
        top = std::max(top, c.states[i].alexander);
    }
    if (!fr.covers(maslov))
        throw Error(ErrorKind::DimMismatch, "reduction does not cover Maslov degree " + std::to_string(maslov));

    SparseVec scratch, cur = std::move(x);
    while (!cur.empty()) {
        const auto lead = cur.back();
        if (c.states[lead].alexander == top)
            t.top_terms.push_back(lead);
        add_into(cur, fr.representative[lead], scratch);
    }
    std::sort(t.top_terms.begin(), t.top_terms.end());
    for (auto b : t.top_terms) {
        if (fr.role[b] == PairRole::Death) {
            if (fr.gap[b] == 0)
                throw Error(ErrorKind::NotAComplex, "chain is not a cycle of the associated graded complex");
            t.supporting_page = t.supporting_page ? std::min(*t.supporting_page, fr.gap[b]) : fr.gap[b];
        }
        if (!(fr.role[b] == PairRole::Birth && fr.gap[b] == 0))
            t.nonzero_on_e1 = true;
    }
    return t;
}

} // namespace gridlock
