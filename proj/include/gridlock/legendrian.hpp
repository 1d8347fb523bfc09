#pragma once

// Canonical cycles x+ / x- of a grid, their vanishing and delta_k statuses,
// and the concordance obstruction built from them.

#include <gridlock/chain_complex.hpp>
#include <gridlock/error.hpp>
#include <gridlock/f2.hpp>
#include <gridlock/grid.hpp>
#include <gridlock/pages.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridlock {

enum class Which { Plus, Minus };

inline const char* to_string(Which w) { return w == Which::Plus ? "plus" : "minus"; }

/// x+ puts a point on the upper-right corner of every X, x- on the
/// lower-left corner.
inline std::pair<GridState, GridState> canonical_cycles(const GridDiagram& g)
{
    if (trace_components(g) != 1)
        throw Error(ErrorKind::MultiComponent, "canonical cycles need a knot");
    const int n = g.size();
    std::vector<int> plus(n), minus(n);
    for (int r = 0; r < n; ++r) {
        const int c = g.x_col(r);
        plus[(c + 1) % n] = (r + 1) % n;
        minus[c] = r;
    }
    const GradingContext ctx(g);
    return {ctx.make_state(std::move(plus)), ctx.make_state(std::move(minus))};
}

struct InvariantOptions
{
    int k_max = 3;
    std::uint64_t budget = default_budget;
    int threads = 1;
    /// Alexander window radius around the class; k_max + 1 when unset.
    std::optional<int> radius;
};

struct InvariantClass
{
    Which which = Which::Plus;
    GridState cycle;
    Status vanishing = Status::Unknown;
    /// Whether d_k kills the class, k = 1..k_max.
    std::map<int, Status> delta_vanishing;

    std::string grid_ref;
    std::uint64_t grid_hash = 0;
    int grid_size = 0;
    AlexanderWindow window;
    std::uint64_t budget = default_budget;
    std::size_t window_states = 0;
    std::string note;

    Bigrading bigrading() const { return cycle.bigrading(); }
};

inline InvariantClass invariant_class(const GridDiagram& g, Which which, const InvariantOptions& opt = {})
{
    const auto [plus, minus] = canonical_cycles(g);
    InvariantClass ic;
    ic.which = which;
    ic.cycle = which == Which::Plus ? plus : minus;
    ic.grid_ref = g.name();
    ic.grid_hash = grid_hash(g);
    ic.grid_size = g.size();
    ic.budget = opt.budget;
    for (int k = 1; k <= opt.k_max; ++k)
        ic.delta_vanishing[k] = Status::Unknown;

    const int m = ic.cycle.maslov, a = ic.cycle.alexander;
    const int radius = opt.radius.value_or(opt.k_max + 1);
    ic.window = {a - radius, a + radius};

    std::vector<GridState> states;
    try {
        EnumerateOptions eo;
        eo.window = ic.window;
        eo.maslov_range = std::pair{m - 1, m + 1};
        eo.budget = opt.budget;
        states = enumerate_states(g, eo);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded)
            throw;
        ic.note = e.what();
        return ic;
    }
    ic.window_states = states.size();

    const auto c = filtered_differential(g, std::move(states), ic.window, opt.threads);
    const auto x = c.index_of(ic.cycle.perm);
    if (!x)
        throw std::logic_error("canonical cycle missing from its own window");
    const auto cols = c.total_columns();
    for (auto t : cols[*x])
        if (c.states[t].alexander == a)
            throw std::logic_error("canonical cycle is not a tilde cycle");

    // Boundary test in the tilde complex.
    const Bigrading b = ic.cycle.bigrading();
    const Bigrading above{m + 1, a};
    bool boundary = false;
    if (c.bucket_size(above)) {
        SparseVec rhs = {static_cast<std::uint32_t>(*x - c.offset(b))};
        boundary = solve(c.differential(above, 0), rhs).has_value();
    }
    ic.vanishing = boundary ? Status::Vanishes : Status::Nonvanishing;

    const auto fr = reduce_filtered(c, std::pair{m, m});
    const auto trace = trace_class(fr, c, {static_cast<std::uint32_t>(*x)});
    if (trace.zero_on_page(fr, 1) != boundary)
        throw std::logic_error("page reduction disagrees with the tilde boundary test");
    for (int k = 1; k <= opt.k_max; ++k)
        ic.delta_vanishing[k] = trace.delta(k);
    return ic;
}

enum class VerdictKind { ClassicallyObstructed, ObstructedRegular, ObstructedDecomposable, NoObstructionFound };

inline const char* to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::ClassicallyObstructed: return "ClassicallyObstructed";
    case VerdictKind::ObstructedRegular: return "ObstructedRegular";
    case VerdictKind::ObstructedDecomposable: return "ObstructedDecomposable";
    case VerdictKind::NoObstructionFound: return "NoObstructionFound";
    }
    return "?";
}

/// What the verdict needs to know about one Legendrian knot.
struct LegendrianSummary
{
    std::string id;
    ClassicalInvariants classical;
    Status theta = Status::Unknown;
    std::map<int, Status> delta;
};

inline LegendrianSummary summarize(std::string id, const ClassicalInvariants& ci, const InvariantClass& ic)
{
    return {std::move(id), ci, ic.vanishing, ic.delta_vanishing};
}

struct Verdict
{
    VerdictKind kind = VerdictKind::NoObstructionFound;
    int k = 0; // page for ObstructedDecomposable
    std::string from, to;
    std::vector<std::string> evidence;
};

/// Obstructions to a Lagrangian concordance from source (bottom) to target
/// (top). A NoObstructionFound verdict says nothing about existence.
inline Verdict concordance_obstruction(const LegendrianSummary& source, const LegendrianSummary& target, int k_max)
{
    Verdict v;
    v.from = source.id;
    v.to = target.id;
    const auto& cs = source.classical;
    const auto& ct = target.classical;
    auto pair_str = [](const ClassicalInvariants& c) {
        return "(tb, r) = (" + std::to_string(c.tb) + ", " + std::to_string(c.r) + ")";
    };
    if (cs.tb != ct.tb || cs.r != ct.r) {
        v.kind = VerdictKind::ClassicallyObstructed;
        v.evidence.push_back("source " + pair_str(cs) + ", target " + pair_str(ct));
        if (cs.r != ct.r)
            v.evidence.push_back("rotation numbers differ");
        if (cs.tb != ct.tb)
            v.evidence.push_back("tb difference " + std::to_string(ct.tb - cs.tb) +
                                 " would need Euler characteristic " + std::to_string(cs.tb - ct.tb) +
                                 ", a cylinder has 0");
        return v;
    }
    v.evidence.push_back("classical invariants agree: " + pair_str(cs));

    bool indeterminate = false;

    if (target.theta == Status::Vanishes && source.theta == Status::Nonvanishing) {
        v.kind = VerdictKind::ObstructedRegular;
        v.evidence.push_back("theta(target) = 0 while theta(source) != 0");
        return v;
    }
    if (target.theta == Status::Unknown || source.theta == Status::Unknown)
        indeterminate = true;
    v.evidence.push_back(std::string("theta: source ") + to_string(source.theta) + ", target " +
                         to_string(target.theta));

    auto status_at = [](const LegendrianSummary& s, int k) {
        auto it = s.delta.find(k);
        return it == s.delta.end() ? Status::Unknown : it->second;
    };
    for (int k = 1; k <= k_max; ++k) {
        const Status st = status_at(target, k), ss = status_at(source, k);
        if (st == Status::Vanishes && ss == Status::Nonvanishing) {
            v.kind = VerdictKind::ObstructedDecomposable;
            v.k = k;
            v.evidence.push_back("delta_" + std::to_string(k) + "(theta(target)) = 0 while delta_" +
                                 std::to_string(k) + "(theta(source)) != 0");
            return v;
        }
        if (st == Status::Unknown || ss == Status::Unknown)
            indeterminate = true;
        v.evidence.push_back("delta_" + std::to_string(k) + ": source " + to_string(ss) + ", target " +
                             to_string(st));
    }
    if (indeterminate)
        throw Error(ErrorKind::IncomparableUnknowns,
                    "no definite obstruction and some statuses are unknown (budget exceeded)");
    v.kind = VerdictKind::NoObstructionFound;
    v.evidence.push_back("no test fired up to k = " + std::to_string(k_max));
    return v;
}

} // namespace gridlock
