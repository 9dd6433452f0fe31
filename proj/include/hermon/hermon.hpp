#pragma once

// Umbrella header: the whole library.

#include "hermon/rational.hpp"
#include "hermon/monomial.hpp"
#include "hermon/scalar_poly.hpp"
#include "hermon/fock.hpp"
#include "hermon/spinor_poly.hpp"
#include "hermon/calculus.hpp"
#include "hermon/report.hpp"
#include "hermon/jacobi.hpp"
#include "hermon/operator_poly.hpp"
#include "hermon/embedding.hpp"
#include "hermon/kernel.hpp"
#include "hermon/branching.hpp"
#include "hermon/serialize.hpp"
#include "hermon/latex.hpp"
#include "hermon/verify.hpp"
#include "hermon/cli.hpp"
