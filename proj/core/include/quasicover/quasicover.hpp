#pragma once

// Umbrella header for the cover/quasi-periodicity toolkit.

#include "quasicover/blockcode.hpp"
#include "quasicover/cover.hpp"
#include "quasicover/induced.hpp"
#include "quasicover/metrics.hpp"
#include "quasicover/oracle.hpp"
#include "quasicover/pseudo.hpp"
#include "quasicover/solvers.hpp"
#include "quasicover/suites.hpp"
#include "quasicover/table_io.hpp"
#include "quasicover/tiling.hpp"
#include "quasicover/word.hpp"
