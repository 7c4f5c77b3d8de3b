#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hq/fd_hopf.hpp"
#include "hq/homology.hpp"

namespace hq {

struct CatalogEntry {
    std::string name;
    std::string family;  // fd, quantum, enveloping, group, laurent
    std::map<std::string, std::string> params;
    int degree_bound = 6;
    int truncate = 8;
    int window = 3;
    bool descent = false;   // a descent chain is known
    bool homology = false;  // a resolution of k is available
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& name);  // UnknownAlgebra

// Presented families only; the presentation carries the catalog name.
HopfPresentation build_presentation(const CatalogEntry& e, int degree_bound);
// Descent chain for entries with descent = true.
std::vector<NCPoly> descent_chain(const CatalogEntry& e, const HopfPresentation& h);
// CE or tower resolution for entries with homology = true.
FreeComplex resolution(const CatalogEntry& e, const HopfPresentation& h);

std::optional<LieData> lie_data(const CatalogEntry& e);
std::optional<PolycyclicData> polycyclic_data(const CatalogEntry& e);

}  // namespace hq
