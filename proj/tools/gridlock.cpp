// gridlock command-line interface.
//
// Exit codes: 0 computed, 1 invalid input, 2 IO, 3 budget exceeded or
// undecidable within budget.

#include <gridlock/gridlock.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#ifndef GRIDLOCK_DEFAULT_CATALOG
#define GRIDLOCK_DEFAULT_CATALOG "catalog/catalog.json"
#endif

namespace {

using namespace gridlock;

enum Exit : int { Computed = 0, InvalidInput = 1, IOFailure = 2, OverBudget = 3 };

struct Common
{
    std::uint64_t budget = default_budget;
    int threads = 0;
    int kmax = 3;
    std::string out;
    bool reproducible = false;
    std::string which = "plus";

    int thread_count() const
    {
        if (threads > 0)
            return threads;
        return std::max(1u, std::thread::hardware_concurrency());
    }
};

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::IO: return IOFailure;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::WindowTooNarrow:
    case ErrorKind::IncomparableUnknowns: return OverBudget;
    default: return InvalidInput;
    }
}

void emit_json(const Common& c, json j)
{
    if (!c.reproducible) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["generated_at"] = buf;
    }
    if (c.out.empty())
        return;
    std::ofstream f(c.out);
    if (!f)
        throw Error(ErrorKind::IO, "cannot write " + c.out);
    f << j.dump(2) << '\n';
}

std::optional<AlexanderWindow> parse_window(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    int lo = 0, hi = 0;
    char colon = 0, tail = 0;
    std::istringstream in(s);
    if (!(in >> lo >> colon >> hi) || colon != ':' || (in >> tail) || lo > hi)
        throw Error(ErrorKind::ParseError, "--window expects A:B with A <= B, got \"" + s + "\"");
    return AlexanderWindow{lo, hi};
}

int cmd_validate(const std::string& path)
{
    const auto g = load_grid(path);
    const int comps = trace_components(g);
    std::cout << "valid " << g.size() << "x" << g.size() << " grid, " << comps
              << (comps == 1 ? " component" : " components") << '\n';
    if (comps == 1) {
        const auto ci = classical_invariants(g);
        std::cout << "tb = " << ci.tb << ", r = " << ci.r << '\n';
    }
    return Computed;
}

int cmd_homology(const std::string& path, const std::string& window_arg, const Common& c)
{
    const auto g = load_grid(path);
    const auto window = parse_window(window_arg);
    json j;
    j["grid"] = grid_to_json(g);
    j["grid_hash"] = hex64(grid_hash(g));

    EnumerateOptions eo;
    eo.window = window;
    eo.budget = c.budget;
    std::vector<GridState> states;
    try {
        states = enumerate_states(g, eo);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded)
            throw;
        j["status"] = "budget exceeded";
        j["error"] = e.what();
        std::cout << e.what() << '\n';
        emit_json(c, j);
        return OverBudget;
    }
    const auto cx = tilde_differential(g, std::move(states), window, c.thread_count());
    const auto tilde = tilde_homology_dims(cx);
    j["states"] = cx.states.size();
    j["tilde"] = dims_to_json(tilde);
    j["tilde_rank"] = total_dimension(tilde);
    if (window) {
        j["window"] = {window->lo, window->hi};
        const auto full = alexander_range(g);
        if (window->hi < full.hi) {
            // Deconvolution runs from the top Alexander grading down.
            j["status"] = "window too narrow";
            std::cout << "tilde homology in window:\n" << dims_table(tilde) << "window top " << window->hi
                      << " is below the top Alexander grading " << full.hi << "; hat dimensions not certified\n";
            emit_json(c, j);
            return OverBudget;
        }
    }
    const BigradedDims hat =
        hat_dims_from_tilde(tilde, g.size(), window ? std::optional<int>(window->lo) : std::nullopt);
    j["hat"] = dims_to_json(hat);
    j["status"] = "computed";
    std::cout << dims_table(hat) << "total hat rank " << total_dimension(hat) << ", tilde rank "
              << total_dimension(tilde) << " (" << cx.states.size() << " states)\n";
    emit_json(c, j);
    return Computed;
}

std::vector<Which> which_list(const std::string& w)
{
    if (w == "plus")
        return {Which::Plus};
    if (w == "minus")
        return {Which::Minus};
    if (w == "both")
        return {Which::Plus, Which::Minus};
    throw Error(ErrorKind::ParseError, "--which expects plus, minus or both");
}

InvariantOptions invariant_options(const Common& c)
{
    InvariantOptions o;
    o.k_max = c.kmax;
    o.budget = c.budget;
    o.threads = c.thread_count();
    return o;
}

void print_class(const InvariantClass& ic)
{
    std::cout << "x" << (ic.which == Which::Plus ? "+" : "-") << " at (M, A) = (" << ic.cycle.maslov << ", "
              << ic.cycle.alexander << "): " << to_string(ic.vanishing);
    for (const auto& [k, s] : ic.delta_vanishing)
        std::cout << ", d" << k << " " << to_string(s);
    std::cout << '\n';
    if (!ic.note.empty())
        std::cout << "  " << ic.note << '\n';
}

int cmd_invariants(const std::string& path, const Common& c)
{
    const auto g = load_grid(path);
    const auto ci = classical_invariants(g);
    json j;
    j["grid"] = grid_to_json(g);
    j["classical"] = {{"tb", ci.tb}, {"r", ci.r}};
    j["classes"] = json::array();
    std::cout << "tb = " << ci.tb << ", r = " << ci.r << '\n';
    bool unknown = false;
    for (auto w : which_list(c.which)) {
        const auto ic = invariant_class(g, w, invariant_options(c));
        unknown = unknown || ic.vanishing == Status::Unknown;
        print_class(ic);
        j["classes"].push_back(invariant_to_json(ic));
    }
    std::cout << "classes live in the homology of the grid complex, which is knot Floer homology of the "
                 "mirror (the reversed ambient orientation)\n";
    emit_json(c, j);
    return unknown ? OverBudget : Computed;
}

int cmd_obstruct(const std::string& src_path, const std::string& tgt_path, const Common& c)
{
    const auto gs = load_grid(src_path);
    const auto gt = load_grid(tgt_path);
    const auto cs = classical_invariants(gs);
    const auto ct = classical_invariants(gt);
    const auto w = which_list(c.which);
    if (w.size() != 1)
        throw Error(ErrorKind::ParseError, "obstruct uses a single class; pass --which plus or --which minus");
    const auto opt = invariant_options(c);
    auto name_of = [](const GridDiagram& g, const std::string& p) {
        return g.name().empty() ? std::filesystem::path(p).filename().string() : g.name();
    };
    const auto is = invariant_class(gs, w[0], opt);
    const auto it = invariant_class(gt, w[0], opt);

    json j;
    j["source"] = {{"grid", grid_to_json(gs)}, {"classical", {{"tb", cs.tb}, {"r", cs.r}}},
                   {"class", invariant_to_json(is)}};
    j["target"] = {{"grid", grid_to_json(gt)}, {"classical", {{"tb", ct.tb}, {"r", ct.r}}},
                   {"class", invariant_to_json(it)}};
    j["k_max"] = c.kmax;
    try {
        const auto v = concordance_obstruction(summarize(name_of(gs, src_path), cs, is),
                                               summarize(name_of(gt, tgt_path), ct, it), c.kmax);
        j["verdict"] = verdict_to_json(v);
        std::cout << to_string(v.kind);
        if (v.kind == VerdictKind::ObstructedDecomposable)
            std::cout << " (k = " << v.k << ")";
        std::cout << ": " << v.from << " -> " << v.to << '\n';
        switch (v.kind) {
        case VerdictKind::ClassicallyObstructed:
            std::cout << "A Lagrangian concordance preserves r and tb; these differ.\n";
            break;
        case VerdictKind::ObstructedRegular:
            std::cout << "Vanishing criterion: the target's invariant is zero and the source's is not, so there is "
                         "no regular Lagrangian concordance.\n";
            break;
        case VerdictKind::ObstructedDecomposable:
            std::cout << "Refined criterion: d" << v.k
                      << " kills the target's invariant but not the source's, so there is no decomposable "
                         "Lagrangian concordance.\n";
            break;
        case VerdictKind::NoObstructionFound:
            std::cout << "No test fired. This is not a claim that a concordance exists.\n";
            break;
        }
        for (const auto& e : v.evidence)
            std::cout << "  " << e << '\n';
        emit_json(c, j);
        return Computed;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::IncomparableUnknowns)
            throw;
        j["verdict"] = {{"kind", "IncomparableUnknowns"}, {"error", e.what()}};
        std::cout << e.what() << '\n';
        emit_json(c, j);
        return OverBudget;
    }
}

int cmd_script_check(const std::string& path, const Common& c)
{
    const auto s = parse_script(read_file(path));
    json j;
    const int chi = euler_characteristic(s);
    j["moves"] = s.moves.size();
    j["euler_characteristic"] = chi;
    json ledger = json::array();
    for (const auto& comp : replay(s))
        ledger.push_back({{"id", comp.id}, {"tb", comp.tb}, {"r", comp.r}});
    j["end_ledger"] = ledger;
    std::cout << s.moves.size() << " moves, chi = " << chi << '\n';
    if (s.start.size() == 1 && s.end.size() == 1) {
        const auto rep = check_concordance(s);
        j["concordance"] = {{"pass", rep.pass}, {"violations", rep.violations}};
        std::cout << (rep.pass ? "PASS" : "FAIL") << '\n';
        for (const auto& v : rep.violations)
            std::cout << "  " << v << '\n';
    } else {
        j["concordance"] = nullptr;
        std::cout << "not a concordance: " << s.start.size() << " starting and " << s.end.size()
                  << " final components\n";
    }
    emit_json(c, j);
    return Computed;
}

int cmd_catalog(const std::string& action, const std::string& name, const Common& c)
{
    const auto path = catalog_path(GRIDLOCK_DEFAULT_CATALOG);
    const auto entries = load_catalog(path);
    json j;
    j["catalog"] = path.string();
    if (action == "list") {
        j["entries"] = json::array();
        for (const auto& e : entries) {
            std::cout << e.name;
            if (e.grid)
                std::cout << "  (" << e.grid->size() << "x" << e.grid->size() << ")";
            else
                std::cout << "  (no grid yet)";
            if (!e.description.empty())
                std::cout << "  " << e.description;
            std::cout << '\n';
            j["entries"].push_back(e.name);
        }
        emit_json(c, j);
        return Computed;
    }
    if (action != "show")
        throw Error(ErrorKind::ParseError, "catalog action must be list or show");
    for (const auto& e : entries) {
        if (e.name != name)
            continue;
        std::cout << e.name << '\n';
        if (!e.description.empty())
            std::cout << "  " << e.description << '\n';
        if (e.grid)
            std::cout << "  grid: " << grid_to_json(*e.grid).dump() << '\n';
        else
            std::cout << "  grid: none (to be transcribed)\n";
        for (const auto& [key, value] : e.expected.items())
            std::cout << "  " << key << " = " << value["value"].dump() << "  [" << value["provenance"].get<std::string>()
                      << "]\n";
        j["entry"] = {{"name", e.name}, {"grid", e.grid ? grid_to_json(*e.grid) : json(nullptr)},
                      {"expected", e.expected}};
        emit_json(c, j);
        return Computed;
    }
    throw Error(ErrorKind::ParseError, "no catalog entry named \"" + name + "\"");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grid homology, Legendrian invariants and concordance obstructions"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&common](CLI::App* sub, bool compute) {
        sub->add_option("--out", common.out, "write JSON here");
        sub->add_flag("--reproducible", common.reproducible, "omit the timestamp from JSON");
        if (compute) {
            sub->add_option("--budget", common.budget, "state enumeration cap")->default_val(default_budget);
            sub->add_option("--threads", common.threads, "worker threads (0 = all cores)");
        }
    };

    std::string path, path2, window, action, name;
    std::string which_inv = "both", which_ob = "plus";

    auto* v = app.add_subcommand("validate", "check a grid file");
    v->add_option("grid", path, "grid JSON")->required();
    add_common(v, false);

    auto* h = app.add_subcommand("homology", "bigraded hat knot Floer homology");
    h->add_option("grid", path, "grid JSON")->required();
    h->add_option("--window", window, "Alexander window A:B");
    add_common(h, true);

    auto* inv = app.add_subcommand("invariants", "canonical classes and their delta_k statuses");
    inv->add_option("grid", path, "grid JSON")->required();
    inv->add_option("--kmax", common.kmax, "highest page")->default_val(3)->check(CLI::Range(1, 64));
    inv->add_option("--which", which_inv, "plus, minus or both")->capture_default_str();
    add_common(inv, true);

    auto* ob = app.add_subcommand("obstruct", "concordance obstruction from source to target");
    ob->add_option("source", path, "grid of the bottom knot")->required();
    ob->add_option("target", path2, "grid of the top knot")->required();
    ob->add_option("--kmax", common.kmax, "highest page")->default_val(3)->check(CLI::Range(1, 64));
    ob->add_option("--which", which_ob, "plus or minus")->capture_default_str();
    add_common(ob, true);

    auto* sc = app.add_subcommand("script-check", "replay a move script and test it as a concordance");
    sc->add_option("script", path, "script file")->required();
    add_common(sc, false);

    auto* cat = app.add_subcommand("catalog", "list or show catalog entries");
    cat->add_option("action", action, "list or show")->required()->check(CLI::IsMember({"list", "show"}));
    cat->add_option("name", name, "entry name for show");
    add_common(cat, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : InvalidInput;
    }

    try {
        if (*v)
            return cmd_validate(path);
        if (*h)
            return cmd_homology(path, window, common);
        if (*inv) {
            common.which = which_inv;
            return cmd_invariants(path, common);
        }
        if (*ob) {
            common.which = which_ob;
            return cmd_obstruct(path, path2, common);
        }
        if (*sc)
            return cmd_script_check(path, common);
        if (*cat)
            return cmd_catalog(action, name, common);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
    return InvalidInput;
}
