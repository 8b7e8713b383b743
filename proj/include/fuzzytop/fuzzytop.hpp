#pragma once

// Umbrella header: the whole library.

#include "carrier.hpp"         // IWYU pragma: export
#include "classifier.hpp"      // IWYU pragma: export
#include "compactness.hpp"     // IWYU pragma: export
#include "corpus.hpp"          // IWYU pragma: export
#include "diagram.hpp"         // IWYU pragma: export
#include "errors.hpp"          // IWYU pragma: export
#include "fuzzy_set.hpp"       // IWYU pragma: export
#include "grid.hpp"            // IWYU pragma: export
#include "mining.hpp"          // IWYU pragma: export
#include "operators.hpp"       // IWYU pragma: export
#include "rational.hpp"        // IWYU pragma: export
#include "report_json.hpp"     // IWYU pragma: export
#include "space_format.hpp"    // IWYU pragma: export
#include "theorems.hpp"        // IWYU pragma: export
#include "topology.hpp"        // IWYU pragma: export
#include "topology_enum.hpp"   // IWYU pragma: export
