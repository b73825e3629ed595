#pragma once

#include <string>

#include "peakpoint/region.hpp"

namespace pk {

// Region file schema (JSON):
//   { "resolution": 0.02,
//     "pieces": [ {"kind":"polygon","vertices":[[x,y],...]},
//                 {"kind":"disk","center":[x,y],"radius":r},
//                 {"kind":"segment","a":[x,y],"b":[x,y]},
//                 {"kind":"point","at":[x,y]} ] }
// All lengths dimensionless.  Raises Err::ParseError on malformed input and
// Err::InvalidRegion when the geometry fails certification.
RegionPtr load_region_file(const std::string& path);
RegionPtr parse_region_json(const std::string& text);
std::string region_to_json(const Region& region);

} // namespace pk
