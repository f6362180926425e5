#pragma once

#include "mgf/errors.hpp"
#include "mgf/exact/combinatorics.hpp"
#include "mgf/exact/graph_index.hpp"
#include "mgf/exact/rational.hpp"

#include "mgf/algebra/laurent_polynomial.hpp"
#include "mgf/algebra/rewrite.hpp"
#include "mgf/algebra/symbolic.hpp"

#include "mgf/laurent/assemble.hpp"
#include "mgf/laurent/g_function.hpp"
#include "mgf/laurent/partial_fractions.hpp"
#include "mgf/laurent/theorem1.hpp"

#include "mgf/decomposition/conjecture.hpp"
#include "mgf/decomposition/lemma.hpp"
#include "mgf/decomposition/sweep.hpp"

#include "mgf/numerics/checks.hpp"
#include "mgf/numerics/eisenstein.hpp"
#include "mgf/numerics/lattice.hpp"
#include "mgf/numerics/quadrature.hpp"
#include "mgf/numerics/real.hpp"
#include "mgf/numerics/special.hpp"
#include "mgf/numerics/zeta.hpp"
