#pragma once

// Umbrella header: theta and elliptic function evaluation, modular
// transformations, vector-field and matrix realizations of the Cayley-Klein
// commutator tables, biorthogonal spinor machinery, and the generating flow.

#include "ckwitt/common.hpp"
#include "ckwitt/theta.hpp"
#include "ckwitt/jacobi.hpp"
#include "ckwitt/modular.hpp"
#include "ckwitt/witt.hpp"
#include "ckwitt/cayley_klein.hpp"
#include "ckwitt/biortho.hpp"
#include "ckwitt/ck.hpp"
#include "ckwitt/flow.hpp"
