#pragma once

// Symbolic Laplace transform of the TimeExpr language by recursive rule
// application, with region-of-convergence tracking, a structural existence
// check, and an independent numeric quadrature oracle.

#include <complex>

#include "lctk/time_expr.hpp"
#include "lctk/transfer_function.hpp"

namespace lctk {

struct LaplaceResult {
    TransferFunction tf;  // delay field carries the e^{-a s} time-shift factor
    double roc;           // transform claimed valid for Re s > roc (upper bound)
};

/// Witness of |f(t)| <= M * e^{a t} for all t >= 0.
struct ExpOrderWitness {
    double M;
    double a;
};

enum class IvPolicy {
    ZeroInit,  // every Deriv node must carry no initial values (treated as zero)
    Explicit,  // every Deriv node must carry exactly k initial values
};

LaplaceResult laplace_symbolic(const TimeExpr& f, IvPolicy policy = IvPolicy::ZeroInit);

ExpOrderWitness exp_order_witness(const TimeExpr& f);

struct ExistenceCheck {
    bool exists;
    ExpOrderWitness witness;
};

/// Re s strictly above the witness abscissa. Piecewise smoothness holds
/// structurally for every expression of the language (documented obligation).
ExistenceCheck laplace_exists_check(const TimeExpr& f, std::complex<double> s);

/// Adaptive-quadrature evaluation of the transform integral, truncated using
/// the exponential-order witness so the tail is below tol/2.
std::complex<double> laplace_numeric(const TimeExpr& f, std::complex<double> s, double tol,
                                     double margin = 0.1);

}  // namespace lctk
