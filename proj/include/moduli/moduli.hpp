#pragma once

#include "moduli/cech.hpp"
#include "moduli/fibers.hpp"
#include "moduli/lattice.hpp"
#include "moduli/mukai.hpp"
#include "moduli/plane_curves.hpp"
#include "moduli/specseq.hpp"
