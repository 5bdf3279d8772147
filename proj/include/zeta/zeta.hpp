#pragma once

#include "zeta/core_model.hpp"
#include "zeta/dirichlet.hpp"
#include "zeta/good_basis.hpp"
#include "zeta/hnf_lattice.hpp"
#include "zeta/integer.hpp"
#include "zeta/io.hpp"
#include "zeta/padic.hpp"
#include "zeta/sublattices.hpp"
#include "zeta/zeta_engine.hpp"
