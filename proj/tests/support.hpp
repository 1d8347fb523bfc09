#pragma once

#include <gridlock/gridlock.hpp>

#include <string>
#include <vector>

namespace support {

inline std::string source_path(const std::string& rel) { return std::string(GRIDLOCK_SOURCE_DIR) + "/" + rel; }

inline const std::vector<gridlock::CatalogEntry>& catalog()
{
    static const auto entries = gridlock::load_catalog(source_path("catalog/catalog.json"));
    return entries;
}

inline std::vector<gridlock::GridDiagram> catalog_grids(int max_n = 64)
{
    std::vector<gridlock::GridDiagram> out;
    for (const auto& e : catalog())
        if (e.grid && e.grid->size() <= max_n)
            out.push_back(*e.grid);
    return out;
}

inline gridlock::GridDiagram named(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name && e.grid)
            return *e.grid;
    throw std::runtime_error("no catalog grid " + name);
}

inline gridlock::GridDiagram unknot2() { return gridlock::validate(2, std::vector<int>{2, 1}, std::vector<int>{1, 2}); }

inline gridlock::GridDiagram trefoil5()
{
    return gridlock::validate(5, std::vector<int>{2, 3, 4, 5, 1}, std::vector<int>{5, 1, 2, 3, 4});
}

} // namespace support
