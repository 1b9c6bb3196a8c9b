#pragma once

#include "defw/report.hpp"

#include <string>
#include <vector>

namespace defw {

// printed projector images in codimension 1, orders 2..4
struct ProjectorEntry {
    int k;
    const char* input;
    const char* printed;
};

const std::vector<ProjectorEntry>& printed_projector_images();

// the basis of the type (2,2), order 5 piece in the order used by the printed coordinates
std::vector<Element> printed_w_basis();

// runs every computation; "ok" is false if any comparison fails
json codim1_report();
std::string codim1_markdown(const json& report);

}  // namespace defw
