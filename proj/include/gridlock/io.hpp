#pragma once

// JSON forms of grids, dimension tables, invariant classes and verdicts, and
// the grid catalog.

#include <gridlock/chain_complex.hpp>
#include <gridlock/error.hpp>
#include <gridlock/grid.hpp>
#include <gridlock/legendrian.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gridlock {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string line_col(const std::string& text, std::size_t offset)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

// Position of a top-level key, for messages about its value.
inline std::string key_position(const std::string& text, const std::string& key)
{
    const auto at = text.find("\"" + key + "\"");
    return at == std::string::npos ? std::string("?") : line_col(text, at);
}

} // namespace detail

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IO, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json grid_to_json(const GridDiagram& g)
{
    json j;
    j["n"] = g.size();
    j["x"] = g.x_list();
    j["o"] = g.o_list();
    if (!g.name().empty())
        j["name"] = g.name();
    return j;
}

/// Strict reader: exactly the keys n, x, o and optionally name.
inline GridDiagram grid_from_json(const json& j, const std::string& text = {})
{
    auto where = [&text](const std::string& key) {
        return text.empty() ? std::string() : " at " + detail::key_position(text, key);
    };
    if (!j.is_object())
        throw Error(ErrorKind::ParseError, "grid must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "n" && key != "x" && key != "o" && key != "name")
            throw Error(ErrorKind::ParseError, "unexpected key \"" + key + "\"" + where(key));
    for (const char* key : {"n", "x", "o"})
        if (!j.contains(key))
            throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
    if (!j["n"].is_number_integer())
        throw Error(ErrorKind::ParseError, "\"n\" must be an integer" + where("n"));
    const auto n = j["n"].get<long long>();
    if (n < 2)
        throw Error(ErrorKind::SizeTooSmall, "grid size " + std::to_string(n) + " is below 2" + where("n"));
    if (n > 64)
        throw Error(ErrorKind::ParseError, "grid size " + std::to_string(n) + " is too large" + where("n"));

    auto read_list = [&](const char* key) {
        const auto& a = j[key];
        if (!a.is_array())
            throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be an array" + where(key));
        if (static_cast<long long>(a.size()) != n)
            throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" has " + std::to_string(a.size()) +
                                                   " entries, expected " + std::to_string(n) + where(key));
        std::vector<int> out;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_number_integer())
                throw Error(ErrorKind::ParseError, std::string("\"") + key + "\"[" + std::to_string(i) +
                                                       "] is not an integer" + where(key));
            out.push_back(a[i].get<int>());
        }
        return out;
    };
    const auto x = read_list("x");
    const auto o = read_list("o");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw Error(ErrorKind::ParseError, "\"name\" must be a string" + where("name"));
        name = j["name"].get<std::string>();
    }
    return validate(static_cast<int>(n), x, o).with_name(std::move(name));
}

inline GridDiagram parse_grid(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "JSON syntax error at " + detail::line_col(text, e.byte ? e.byte - 1 : 0) +
                                               ": " + e.what());
    }
    return grid_from_json(j, text);
}

inline GridDiagram load_grid(const std::filesystem::path& path) { return parse_grid(read_file(path)); }

inline std::string bigrading_key(const Bigrading& b)
{
    return "(" + std::to_string(b.maslov) + "," + std::to_string(b.alexander) + ")";
}

inline Bigrading parse_bigrading_key(const std::string& key)
{
    int d = 0, s = 0;
    char tail = 0;
    if (std::sscanf(key.c_str(), "(%d,%d)%c", &d, &s, &tail) != 2 || bigrading_key({d, s}) != key)
        throw Error(ErrorKind::ParseError, "bad bigrading key \"" + key + "\"");
    return {d, s};
}

inline json dims_to_json(const BigradedDims& dims)
{
    json j = json::object();
    // Highest Alexander grading first, then Maslov descending.
    std::vector<std::pair<Bigrading, std::size_t>> rows(dims.begin(), dims.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(b.first.alexander, b.first.maslov) < std::tie(a.first.alexander, a.first.maslov);
    });
    for (const auto& [b, d] : rows)
        j[bigrading_key(b)] = d;
    return j;
}

inline BigradedDims dims_from_json(const json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::ParseError, "dimension table must be an object");
    BigradedDims out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0))
            throw Error(ErrorKind::ParseError, "dimension at " + key + " must be a nonnegative integer");
        if (value.get<std::size_t>() > 0)
            out[parse_bigrading_key(key)] = value.get<std::size_t>();
    }
    return out;
}

/// Aligned text table, one bigrading per line.
inline std::string dims_table(const BigradedDims& dims)
{
    std::ostringstream os;
    os << std::setw(8) << "maslov" << std::setw(11) << "alexander" << std::setw(6) << "dim" << '\n';
    std::vector<std::pair<Bigrading, std::size_t>> rows(dims.begin(), dims.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(b.first.alexander, b.first.maslov) < std::tie(a.first.alexander, a.first.maslov);
    });
    for (const auto& [b, d] : rows)
        os << std::setw(8) << b.maslov << std::setw(11) << b.alexander << std::setw(6) << d << '\n';
    return os.str();
}

inline std::string hex64(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

inline json invariant_to_json(const InvariantClass& ic)
{
    json j;
    j["which"] = to_string(ic.which);
    j["cycle"] = [&] {
        std::vector<int> p;
        for (int v : ic.cycle.perm)
            p.push_back(v + 1);
        return p;
    }();
    j["bigrading"] = {{"maslov", ic.cycle.maslov}, {"alexander", ic.cycle.alexander}};
    j["vanishing"] = to_string(ic.vanishing);
    json d = json::object();
    for (const auto& [k, s] : ic.delta_vanishing)
        d[std::to_string(k)] = to_string(s);
    j["delta_vanishing"] = d;
    j["provenance"] = {{"grid", ic.grid_ref},
                       {"grid_hash", hex64(ic.grid_hash)},
                       {"grid_size", ic.grid_size},
                       {"window", {ic.window.lo, ic.window.hi}},
                       {"budget", ic.budget},
                       {"window_states", ic.window_states}};
    if (!ic.note.empty())
        j["note"] = ic.note;
    return j;
}

inline json verdict_to_json(const Verdict& v)
{
    json j;
    j["kind"] = to_string(v.kind);
    if (v.kind == VerdictKind::ObstructedDecomposable)
        j["k"] = v.k;
    j["direction"] = {{"from", v.from}, {"to", v.to}};
    j["evidence"] = v.evidence;
    return j;
}

/// Expected values attached to a catalog entry; every value carries its
/// provenance ("published" or "derived").
struct CatalogEntry
{
    std::string name;
    std::optional<GridDiagram> grid;
    std::string description;
    json expected = json::object();
};

inline std::vector<CatalogEntry> parse_catalog(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "catalog JSON syntax error at " +
                                               detail::line_col(text, e.byte ? e.byte - 1 : 0) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw Error(ErrorKind::ParseError, "catalog must be an object with an \"entries\" array");
    std::vector<CatalogEntry> out;
    for (const auto& e : j["entries"]) {
        CatalogEntry ce;
        if (!e.contains("name") || !e["name"].is_string())
            throw Error(ErrorKind::ParseError, "catalog entry without a name");
        ce.name = e["name"].get<std::string>();
        if (e.contains("grid") && !e["grid"].is_null()) {
            json g = e["grid"];
            if (!g.contains("name"))
                g["name"] = ce.name;
            ce.grid = grid_from_json(g);
        }
        if (e.contains("description"))
            ce.description = e["description"].get<std::string>();
        if (e.contains("expected"))
            ce.expected = e["expected"];
        for (const auto& [key, value] : ce.expected.items())
            if (!value.is_object() || !value.contains("value") || !value.contains("provenance"))
                throw Error(ErrorKind::ParseError,
                            "expected value \"" + key + "\" of " + ce.name + " needs value and provenance");
        out.push_back(std::move(ce));
    }
    return out;
}

/// GRIDLOCK_CATALOG overrides the given default path.
inline std::filesystem::path catalog_path(const std::filesystem::path& fallback)
{
    if (const char* env = std::getenv("GRIDLOCK_CATALOG"); env && *env)
        return env;
    return fallback;
}

inline std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path)
{
    return parse_catalog(read_file(path));
}

} // namespace gridlock
