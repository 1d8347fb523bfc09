#pragma once

#include <gridlock/script.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Random well-formed scripts: every move acts on live components and the end
// line is the replayed ledger.
class ScriptGenerator
{
public:
    explicit ScriptGenerator(std::uint64_t seed)
        : rng_(seed)
    {
    }

    gridlock::MoveScript make(std::vector<gridlock::ComponentState> start, int moves, double concordance_bias)
    {
        gridlock::MoveScript s;
        s.start = start;
        std::vector<gridlock::ComponentState> live = start;
        std::set<std::string> used;
        for (const auto& c : start)
            used.insert(c.id);
        auto fresh = [&] {
            std::string id;
            do
                id = "C" + std::to_string(counter_++);
            while (used.contains(id));
            used.insert(id);
            return id;
        };
        auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng_() % n); };
        std::uniform_int_distribution<int> small(-4, 2);

        if (live.size() == 1 && uniform() < concordance_bias) {
            // birth of an unknot followed by a merging saddle that keeps tb and r
            const auto base = live[0];
            gridlock::ComponentState u{fresh(), -1, 0};
            s.moves.push_back({gridlock::MoveKind::Birth, {}, {u}});
            gridlock::ComponentState merged{fresh(), base.tb, base.r};
            s.moves.push_back({gridlock::MoveKind::Saddle, {base.id, u.id}, {merged}});
            live = {merged};
        }
        for (int i = 0; i < moves; ++i) {
            const double roll = uniform();
            if (roll < 0.5 && !live.empty()) {
                using gridlock::MoveKind;
                static const MoveKind kinds[] = {MoveKind::R1, MoveKind::R1p, MoveKind::R2, MoveKind::R2p,
                                                 MoveKind::R3};
                const auto k = kinds[pick(5)];
                const std::size_t cap = k == MoveKind::R3 ? 3 : (k == MoveKind::R2 || k == MoveKind::R2p) ? 2 : 1;
                const std::size_t count = 1 + pick(std::min(cap, live.size()));
                auto order = live;
                std::shuffle(order.begin(), order.end(), rng_);
                gridlock::Move m{k, {}, {}};
                for (std::size_t j = 0; j < count; ++j)
                    m.operands.push_back(order[j].id);
                s.moves.push_back(m);
            } else if (roll < 0.7) {
                gridlock::ComponentState c{fresh(), small(rng_), small(rng_)};
                s.moves.push_back({gridlock::MoveKind::Birth, {}, {c}});
                live.push_back(c);
            } else if (roll < 0.85 && live.size() >= 2) {
                std::shuffle(live.begin(), live.end(), rng_);
                gridlock::ComponentState c{fresh(), small(rng_), small(rng_)};
                s.moves.push_back({gridlock::MoveKind::Saddle, {live[0].id, live[1].id}, {c}});
                live.erase(live.begin(), live.begin() + 2);
                live.push_back(c);
            } else if (!live.empty()) {
                const auto j = pick(live.size());
                gridlock::ComponentState a{fresh(), small(rng_), small(rng_)}, b{fresh(), small(rng_), small(rng_)};
                s.moves.push_back({gridlock::MoveKind::Saddle, {live[j].id}, {a, b}});
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
                live.push_back(a);
                live.push_back(b);
            }
        }
        std::sort(live.begin(), live.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        s.end = live;
        return s;
    }

    std::vector<gridlock::ComponentState> start(int count)
    {
        std::uniform_int_distribution<int> small(-4, 2);
        std::vector<gridlock::ComponentState> out;
        for (int i = 0; i < count; ++i)
            out.push_back({"K" + std::to_string(i), small(rng_), small(rng_)});
        return out;
    }

    double uniform() { return std::uniform_real_distribution<double>(0, 1)(rng_); }
    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    int counter_ = 0;
};

} // namespace oracle
