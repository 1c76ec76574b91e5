#ifndef ICOSOLVE_ICOSOLVE_HPP
#define ICOSOLVE_ICOSOLVE_HPP

#include "error.hpp"
#include "gamma.hpp"
#include "heymann.hpp"
#include "hypergeo.hpp"
#include "invariants.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "reduction.hpp"
#include "sampling.hpp"
#include "solver.hpp"

#endif  // ICOSOLVE_ICOSOLVE_HPP
