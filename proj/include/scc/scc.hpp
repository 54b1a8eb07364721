#pragma once

// Umbrella header: core profile types, the eight correspondences, witness
// builders, and the brute-force oracle. The CLI layer is in scc/cli.hpp and
// is not pulled in here (it drags in CLI11).

#include "scc/constructions.hpp"
#include "scc/core.hpp"
#include "scc/oracle.hpp"
#include "scc/rules.hpp"
