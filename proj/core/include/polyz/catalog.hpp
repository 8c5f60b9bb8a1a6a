#pragma once

#include "polyz/groups.hpp"

#include <string>
#include <vector>

namespace polyz {

struct CatalogEntry {
    std::string name;
    GroupSpec spec;      // underlying description (never GroupKind::Catalog)
    Presentation pres;   // presentation used for homological bounds
    long lo = 0, hi = 0; // curated deficiency interval
    std::string citation;
    bool orientable = false;
    std::size_t hirsch = 4;
    bool matrix_based = false;
};

// Names accepted: fixed entries ("Z4", "B1xZ", ...) and parametric ones
// ("GammaQxZ(q)", "G5semidirect(m)", "NilS2222(alpha,beta,gamma,delta,e)").
CatalogEntry catalog_lookup(const std::string& name);

// Representative instances of every family, for listings.
std::vector<CatalogEntry> catalog_entries();

} // namespace polyz
