#pragma once

#include "core/report.hpp"

namespace verlinde {

// The consolidated verification battery: counterexample values, the e6
// branching table, the dimension identities, the scans, the level-rank
// inclusion, and the duality isomorphism.
report_document reproduce_paper();

}  // namespace verlinde
