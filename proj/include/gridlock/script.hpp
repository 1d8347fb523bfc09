#pragma once

// Move scripts for decomposable cobordisms between Legendrian links.
//
//   # comment
//   start K1 tb=-1 r=0
//   Birth -> K2 tb=-1 r=0
//   Saddle K1 K2 -> K3 tb=-1 r=0
//   R2 K3
//   end K3 tb=-1 r=0
//
// One header line per starting component, one footer line per final
// component. Reidemeister moves keep tb and r; components created by Birth or
// Saddle carry their declared tb and r. The declared footer must equal the
// replayed ledger.

#include <gridlock/error.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gridlock {

enum class MoveKind { R1, R1p, R2, R2p, R3, Saddle, Birth };

inline const char* to_string(MoveKind k)
{
    switch (k) {
    case MoveKind::R1: return "R1";
    case MoveKind::R1p: return "R1'";
    case MoveKind::R2: return "R2";
    case MoveKind::R2p: return "R2'";
    case MoveKind::R3: return "R3";
    case MoveKind::Saddle: return "Saddle";
    case MoveKind::Birth: return "Birth";
    }
    return "?";
}

inline std::optional<MoveKind> move_kind_from(std::string_view s)
{
    for (auto k : {MoveKind::R1, MoveKind::R1p, MoveKind::R2, MoveKind::R2p, MoveKind::R3, MoveKind::Saddle,
                   MoveKind::Birth})
        if (s == to_string(k))
            return k;
    return std::nullopt;
}

inline bool is_reidemeister(MoveKind k) { return k != MoveKind::Saddle && k != MoveKind::Birth; }

struct ComponentState
{
    std::string id;
    int tb = 0;
    int r = 0;

    friend bool operator==(const ComponentState&, const ComponentState&) = default;
};

struct Move
{
    MoveKind kind = MoveKind::R1;
    std::vector<std::string> operands;
    std::vector<ComponentState> outputs;

    int delta_components() const
    {
        return static_cast<int>(is_reidemeister(kind) ? 0 : outputs.size()) -
               static_cast<int>(is_reidemeister(kind) ? 0 : operands.size());
    }

    friend bool operator==(const Move&, const Move&) = default;
};

struct MoveScript
{
    std::vector<ComponentState> start;
    std::vector<Move> moves;
    std::vector<ComponentState> end;

    friend bool operator==(const MoveScript&, const MoveScript&) = default;
};

namespace detail {

struct Token
{
    std::string_view text;
    int col = 1;
};

inline std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size() || line[i] == '#')
            break;
        const std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
            ++i;
        out.push_back({line.substr(begin, i - begin), static_cast<int>(begin) + 1});
    }
    return out;
}

inline bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

[[noreturn]] inline void fail(ErrorKind kind, int line, int col, const std::string& what)
{
    throw Error(kind, std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

// Reads "id tb=.. r=.." groups from tokens[i..].
inline std::vector<ComponentState> read_components(const std::vector<Token>& toks, std::size_t i, int line)
{
    std::vector<ComponentState> out;
    while (i < toks.size()) {
        const auto& t = toks[i];
        if (!is_identifier(t.text))
            fail(ErrorKind::SyntaxError, line, t.col, "expected component name, found \"" + std::string(t.text) + "\"");
        ComponentState c{std::string(t.text), 0, 0};
        bool have_tb = false, have_r = false;
        ++i;
        while (i < toks.size() && toks[i].text.find('=') != std::string_view::npos) {
            const auto& a = toks[i];
            const auto eq = a.text.find('=');
            const auto key = a.text.substr(0, eq);
            const auto val = a.text.substr(eq + 1);
            int v = 0;
            auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
            if (ec != std::errc() || p != val.data() + val.size())
                fail(ErrorKind::SyntaxError, line, a.col + static_cast<int>(eq) + 1,
                     "expected an integer, found \"" + std::string(val) + "\"");
            if (key == "tb" && !have_tb) {
                c.tb = v;
                have_tb = true;
            } else if (key == "r" && !have_r) {
                c.r = v;
                have_r = true;
            } else {
                fail(ErrorKind::SyntaxError, line, a.col, "unexpected attribute \"" + std::string(key) + "\"");
            }
            ++i;
        }
        if (!have_tb || !have_r)
            fail(ErrorKind::SyntaxError, line, t.col, "component " + c.id + " needs tb= and r=");
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace detail

/// Parses and replays a script; positions are reported as line:col.
inline MoveScript parse_script(std::string_view text)
{
    using detail::fail;
    MoveScript s;
    enum class Phase { Start, Moves, End } phase = Phase::Start;
    std::map<std::string, ComponentState> live;
    std::set<std::string> used;
    int line_no = 0, last_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto toks = detail::tokenize(line);
        if (toks.empty())
            continue;
        last_line = line_no;
        const auto head = toks[0].text;

        if (head == "start") {
            if (phase != Phase::Start)
                fail(ErrorKind::SyntaxError, line_no, toks[0].col, "start line after moves");
            if (toks.size() < 2)
                fail(ErrorKind::SyntaxError, line_no, toks[0].col, "start needs a component");
            for (auto& c : detail::read_components(toks, 1, line_no)) {
                if (!used.insert(c.id).second)
                    fail(ErrorKind::SyntaxError, line_no, toks[1].col, "component " + c.id + " declared twice");
                live[c.id] = c;
                s.start.push_back(std::move(c));
            }
            continue;
        }
        if (head == "end") {
            phase = Phase::End;
            if (toks.size() < 2)
                fail(ErrorKind::SyntaxError, line_no, toks[0].col, "end needs a component");
            for (auto& c : detail::read_components(toks, 1, line_no))
                s.end.push_back(std::move(c));
            continue;
        }
        if (phase == Phase::End)
            fail(ErrorKind::SyntaxError, line_no, toks[0].col, "move after end line");
        const auto kind = move_kind_from(head);
        if (!kind)
            fail(ErrorKind::UnknownMove, line_no, toks[0].col, "unknown move \"" + std::string(head) + "\"");
        if (s.start.empty())
            fail(ErrorKind::SyntaxError, line_no, toks[0].col, "move before any start line");
        phase = Phase::Moves;

        Move m;
        m.kind = *kind;
        std::size_t i = 1;
        for (; i < toks.size() && toks[i].text != "->"; ++i) {
            const auto& t = toks[i];
            if (!detail::is_identifier(t.text))
                fail(ErrorKind::SyntaxError, line_no, t.col, "expected component name, found \"" + std::string(t.text) + "\"");
            const std::string id(t.text);
            if (!live.contains(id))
                fail(ErrorKind::UndeclaredComponent, line_no, t.col, "component " + id + " is not present");
            if (std::find(m.operands.begin(), m.operands.end(), id) != m.operands.end())
                fail(ErrorKind::SyntaxError, line_no, t.col, "component " + id + " repeated");
            m.operands.push_back(id);
        }
        const bool arrow = i < toks.size();
        if (arrow) {
            if (is_reidemeister(m.kind))
                fail(ErrorKind::SyntaxError, line_no, toks[i].col, "Reidemeister moves create no components");
            if (i + 1 >= toks.size())
                fail(ErrorKind::SyntaxError, line_no, toks[i].col, "\"->\" needs components");
            m.outputs = detail::read_components(toks, i + 1, line_no);
        }

        const int col = toks[0].col;
        const auto n_in = m.operands.size(), n_out = m.outputs.size();
        switch (m.kind) {
        case MoveKind::R1:
        case MoveKind::R1p:
            if (n_in != 1)
                fail(ErrorKind::SyntaxError, line_no, col, std::string(head) + " acts on one component");
            break;
        case MoveKind::R2:
        case MoveKind::R2p:
            if (n_in < 1 || n_in > 2)
                fail(ErrorKind::SyntaxError, line_no, col, std::string(head) + " acts on one or two components");
            break;
        case MoveKind::R3:
            if (n_in < 1 || n_in > 3)
                fail(ErrorKind::SyntaxError, line_no, col, "R3 acts on one to three components");
            break;
        case MoveKind::Saddle:
            if (!((n_in == 2 && n_out == 1) || (n_in == 1 && n_out == 2)))
                fail(ErrorKind::SyntaxError, line_no, col, "Saddle merges two components or splits one");
            break;
        case MoveKind::Birth:
            if (n_in != 0 || n_out != 1)
                fail(ErrorKind::SyntaxError, line_no, col, "Birth creates exactly one component");
            break;
        }
        for (const auto& id : m.operands)
            if (!is_reidemeister(m.kind))
                live.erase(id);
        for (const auto& c : m.outputs) {
            if (!used.insert(c.id).second)
                fail(ErrorKind::SyntaxError, line_no, col, "component name " + c.id + " already used");
            live[c.id] = c;
        }
        s.moves.push_back(std::move(m));
    }

    if (s.start.empty())
        fail(ErrorKind::SyntaxError, std::max(last_line, 1), 1, "missing start line");
    if (s.end.empty())
        fail(ErrorKind::SyntaxError, std::max(last_line, 1), 1, "missing end line");

    std::map<std::string, ComponentState> declared;
    for (const auto& c : s.end)
        if (!declared.emplace(c.id, c).second)
            fail(ErrorKind::LedgerMismatch, last_line, 1, "component " + c.id + " listed twice at end");
    for (const auto& [id, c] : declared) {
        auto it = live.find(id);
        if (it == live.end())
            fail(ErrorKind::LedgerMismatch, last_line, 1, "end lists " + id + ", which is not present");
        if (it->second.tb != c.tb || it->second.r != c.r)
            fail(ErrorKind::LedgerMismatch, last_line, 1,
                 "end declares " + id + " tb=" + std::to_string(c.tb) + " r=" + std::to_string(c.r) +
                     " but the ledger has tb=" + std::to_string(it->second.tb) + " r=" + std::to_string(it->second.r));
    }
    for (const auto& [id, c] : live)
        if (!declared.contains(id))
            fail(ErrorKind::LedgerMismatch, last_line, 1, "component " + id + " is missing from end");
    return s;
}

inline std::string print_components(const char* head, const std::vector<ComponentState>& cs)
{
    std::string out;
    for (const auto& c : cs)
        out += std::string(head) + " " + c.id + " tb=" + std::to_string(c.tb) + " r=" + std::to_string(c.r) + "\n";
    return out;
}

/// Canonical text: no comments, single spaces.
inline std::string print_script(const MoveScript& s)
{
    std::string out = print_components("start", s.start);
    for (const auto& m : s.moves) {
        out += to_string(m.kind);
        for (const auto& id : m.operands)
            out += " " + id;
        if (!m.outputs.empty()) {
            out += " ->";
            for (const auto& c : m.outputs)
                out += " " + c.id + " tb=" + std::to_string(c.tb) + " r=" + std::to_string(c.r);
        }
        out += "\n";
    }
    return out + print_components("end", s.end);
}

/// Ledger after every move, sorted by id.
inline std::vector<ComponentState> replay(const MoveScript& s)
{
    std::map<std::string, ComponentState> live;
    for (const auto& c : s.start)
        live[c.id] = c;
    for (const auto& m : s.moves) {
        if (is_reidemeister(m.kind))
            continue;
        for (const auto& id : m.operands)
            live.erase(id);
        for (const auto& c : m.outputs)
            live[c.id] = c;
    }
    std::vector<ComponentState> out;
    for (auto& [id, c] : live)
        out.push_back(c);
    return out;
}

inline int euler_characteristic(const MoveScript& s)
{
    int chi = 0;
    for (const auto& m : s.moves) {
        if (m.kind == MoveKind::Birth)
            ++chi;
        else if (m.kind == MoveKind::Saddle)
            --chi;
    }
    return chi;
}

struct ConcordanceReport
{
    bool pass = false;
    int chi = 0;
    std::vector<std::string> violations;
};

/// A concordance is a cylinder: one component in, one out, chi = 0, and the
/// classical invariants agree at both ends.
inline ConcordanceReport check_concordance(const MoveScript& s)
{
    if (s.start.size() != 1 || s.end.size() != 1)
        throw Error(ErrorKind::MultiEnd, "a concordance has one starting and one final component (found " +
                                             std::to_string(s.start.size()) + " and " +
                                             std::to_string(s.end.size()) + ")");
    ConcordanceReport rep;
    rep.chi = euler_characteristic(s);
    const auto& a = s.start.front();
    const auto& b = s.end.front();
    if (rep.chi != 0)
        rep.violations.push_back("Euler characteristic is " + std::to_string(rep.chi) + ", not 0");
    if (b.r != a.r)
        rep.violations.push_back("rotation number changes from " + std::to_string(a.r) + " to " + std::to_string(b.r));
    if (b.tb - a.tb != -rep.chi)
        rep.violations.push_back("tb changes by " + std::to_string(b.tb - a.tb) + " but -chi is " +
                                 std::to_string(-rep.chi));
    else if (rep.chi == 0 && b.tb != a.tb)
        rep.violations.push_back("tb changes from " + std::to_string(a.tb) + " to " + std::to_string(b.tb));
    rep.pass = rep.violations.empty();
    return rep;
}

/// s1 followed by s2. A single-component seam may use different names; the
/// second script is renamed to fit, and its fresh names are made unique.
inline MoveScript compose(const MoveScript& s1, const MoveScript& s2)
{
    std::map<std::string, std::string> rename;
    if (s1.end.size() == 1 && s2.start.size() == 1) {
        const auto& a = s1.end.front();
        const auto& b = s2.start.front();
        if (a.tb != b.tb || a.r != b.r)
            throw Error(ErrorKind::EndpointMismatch, "seam mismatch: " + a.id + " tb=" + std::to_string(a.tb) +
                                                         " r=" + std::to_string(a.r) + " vs " + b.id + " tb=" +
                                                         std::to_string(b.tb) + " r=" + std::to_string(b.r));
        rename[b.id] = a.id;
    } else {
        std::map<std::string, ComponentState> lhs, rhs;
        for (const auto& c : s1.end)
            lhs[c.id] = c;
        for (const auto& c : s2.start)
            rhs[c.id] = c;
        if (lhs != rhs)
            throw Error(ErrorKind::EndpointMismatch, "the end of the first script is not the start of the second");
        for (const auto& [id, c] : rhs)
            rename[id] = id;
    }

    std::set<std::string> taken;
    for (const auto& c : s1.start)
        taken.insert(c.id);
    for (const auto& m : s1.moves)
        for (const auto& c : m.outputs)
            taken.insert(c.id);
    std::set<std::string> fresh_in_s2;
    for (const auto& m : s2.moves)
        for (const auto& c : m.outputs)
            fresh_in_s2.insert(c.id);
    for (const auto& id : fresh_in_s2) {
        std::string name = id;
        for (int k = 2; taken.contains(name) || (name != id && fresh_in_s2.contains(name)); ++k)
            name = id + "_" + std::to_string(k);
        taken.insert(name);
        rename[id] = name;
    }
    auto mapped = [&rename](const std::string& id) {
        auto it = rename.find(id);
        return it == rename.end() ? id : it->second;
    };

    MoveScript out;
    out.start = s1.start;
    out.moves = s1.moves;
    for (auto m : s2.moves) {
        for (auto& id : m.operands)
            id = mapped(id);
        for (auto& c : m.outputs)
            c.id = mapped(c.id);
        out.moves.push_back(std::move(m));
    }
    for (auto c : s2.end) {
        c.id = mapped(c.id);
        out.end.push_back(std::move(c));
    }
    return out;
}

} // namespace gridlock
