// Umbrella header.
#pragma once

#include "qglab/algebra.hpp"
#include "qglab/cayley_json.hpp"
#include "qglab/diagonals.hpp"
#include "qglab/dualside.hpp"
#include "qglab/funalg.hpp"
#include "qglab/group.hpp"
#include "qglab/qgcore.hpp"
#include "qglab/random.hpp"
#include "qglab/report.hpp"
#include "qglab/suites.hpp"
#include "qglab/tensorlin.hpp"
