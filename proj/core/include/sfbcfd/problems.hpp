#pragma once

#include <string>

#include "sfbcfd/problem.hpp"

namespace sfbcfd {

/// Manufactured benchmark problems with known solution and flux.

/// [0,2]: K^L = t x^alpha, K^R = t (2-x)^alpha, u = e^t x^4 (2-x)^4.
ProblemSpec example1(double alpha, double gamma);

/// [0,2]: K^L = t (5 + x^alpha), K^R = t (5 + (2-x)^alpha),
/// u = e^{-t} x^2 (2-x)^2.
ProblemSpec example2(double alpha, double gamma);

/// [0,1]: K = t (1 + x(1-x)), u = 4 e^t x^{alpha/2} (1-x)^{alpha/2}.
/// Only defined for gamma = 1/2; throws std::invalid_argument otherwise.
ProblemSpec example3(double alpha, double gamma);

/// [0,2]: K = x(2-x) (time-independent), u = 4 t x (2-x), zero initial data
/// and zero boundary fluxes.
ProblemSpec example4(double alpha, double gamma);

/// Lookup by name "ex1".."ex4"; throws std::invalid_argument on anything else.
ProblemSpec problem_by_name(const std::string& name, double alpha, double gamma);

}  // namespace sfbcfd
