#ifndef PLWP_SPECFUN_HPP
#define PLWP_SPECFUN_HPP

#include "plwp/errors.hpp"

namespace plwp::specfun {

// ln Gamma(x) for x > 0.  Relative error <= 1e-12 on [1e-3, 1e3].
// Throws DomainError for x <= 0.
double ln_gamma(double x);

// Digamma psi(x) = d ln Gamma(x) / dx for x > 0.  Absolute error <= 1e-12
// on [1e-3, 1e3].  Throws DomainError for x <= 0.
double digamma(double x);

// ln K_|nu|(x) for real nu and x > 0, evaluated from the integral
// representation K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt with
// double-exponential quadrature carried out entirely in the log domain, so
// the result neither overflows nor underflows for nu in [0, 50] and
// x in [1e-8, 700].  Order is reduced through K_{-nu} = K_nu.
double bessel_k_ln(double nu, double x);

// exp(bessel_k_ln(nu, x)).  May overflow for tiny x with large nu; callers
// needing the density use the log form.
double bessel_k(double nu, double x);

} // namespace plwp::specfun

#endif
