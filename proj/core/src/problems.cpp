#include "sfbcfd/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sfbcfd {

namespace {

void check_params(double alpha, double gamma) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::invalid_argument("problems: require 1 < alpha < 2");
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("problems: require 0 <= gamma <= 1");
}

}  // namespace

ProblemSpec example1(double alpha, double gamma) {
    check_params(alpha, gamma);
    ProblemSpec p;
    p.alpha = alpha;
    p.gamma = gamma;
    p.a = 0.0;
    p.b = 2.0;
    p.T = 1.0;

    // u = e^t x^4 (2-x)^4 = e^t (16x^4 - 32x^5 + 24x^6 - 8x^7 + x^8);
    // the x^alpha diffusivity cancels the fractional power of the derivative
    // of the fractional integral, so K dg/dx = t e^t * pi1(x) with integer
    // powers only: pi1(x) = sum_m c_m Gamma(m+1)/Gamma(m+2-alpha) x^{m+1}.
    const double c4 = 384.0 / std::tgamma(6.0 - alpha);    // 16 * 4!
    const double c5 = -3840.0 / std::tgamma(7.0 - alpha);  // -32 * 5!
    const double c6 = 17280.0 / std::tgamma(8.0 - alpha);  // 24 * 6!
    const double c7 = -40320.0 / std::tgamma(9.0 - alpha); // -8 * 7!
    const double c8 = 40320.0 / std::tgamma(10.0 - alpha); // 1 * 8!
    auto pi1 = [=](double x) {
        return x * x * x * x * x *
               (c4 + x * (c5 + x * (c6 + x * (c7 + x * c8))));
    };
    auto dpi1 = [=](double x) {
        return x * x * x * x *
               (5.0 * c4 + x * (6.0 * c5 + x * (7.0 * c6 + x * (8.0 * c7 + x * 9.0 * c8))));
    };
    auto uex = [](double x, double t) {
        const double y = x * (2.0 - x);
        return std::exp(t) * y * y * y * y;
    };

    p.KL = [alpha](double x, double t) { return t * std::pow(x, alpha); };
    p.KR = [alpha](double x, double t) { return t * std::pow(2.0 - x, alpha); };
    p.exact_u = uex;
    p.exact_p = [=](double x, double t) {
        return t * std::exp(t) * (gamma * pi1(x) - (1.0 - gamma) * pi1(2.0 - x));
    };
    p.f = [=](double x, double t) {
        return uex(x, t) -
               t * std::exp(t) * (gamma * dpi1(x) + (1.0 - gamma) * dpi1(2.0 - x));
    };
    p.phi_a = [=](double t) { return -(1.0 - gamma) * t * std::exp(t) * pi1(2.0); };
    p.phi_b = [=](double t) { return gamma * t * std::exp(t) * pi1(2.0); };
    p.u0 = [=](double x) { return uex(x, 0.0); };
    return p;
}

ProblemSpec example2(double alpha, double gamma) {
    check_params(alpha, gamma);
    ProblemSpec p;
    p.alpha = alpha;
    p.gamma = gamma;
    p.a = 0.0;
    p.b = 2.0;
    p.T = 1.0;

    // u = e^{-t} x^2 (2-x)^2; with K = t(5 + x^alpha) the flux splits into
    // fractional and integer powers: K dg/dx = t e^{-t} * pi2(x).
    const double g4 = std::tgamma(4.0 - alpha);
    const double g5 = std::tgamma(5.0 - alpha);
    const double g6 = std::tgamma(6.0 - alpha);
    auto pi2 = [=](double x) {
        return 40.0 * std::pow(x, 3.0 - alpha) / g4 - 120.0 * std::pow(x, 4.0 - alpha) / g5 +
               120.0 * std::pow(x, 5.0 - alpha) / g6 + 8.0 * x * x * x / g4 -
               24.0 * x * x * x * x / g5 + 24.0 * x * x * x * x * x / g6;
    };
    auto dpi2 = [=](double x) {
        return 40.0 * (3.0 - alpha) * std::pow(x, 2.0 - alpha) / g4 -
               120.0 * (4.0 - alpha) * std::pow(x, 3.0 - alpha) / g5 +
               120.0 * (5.0 - alpha) * std::pow(x, 4.0 - alpha) / g6 + 24.0 * x * x / g4 -
               96.0 * x * x * x / g5 + 120.0 * x * x * x * x / g6;
    };
    auto uex = [](double x, double t) {
        const double y = x * (2.0 - x);
        return std::exp(-t) * y * y;
    };

    p.KL = [alpha](double x, double t) { return t * (5.0 + std::pow(x, alpha)); };
    p.KR = [alpha](double x, double t) { return t * (5.0 + std::pow(2.0 - x, alpha)); };
    p.exact_u = uex;
    p.exact_p = [=](double x, double t) {
        return t * std::exp(-t) * (gamma * pi2(x) - (1.0 - gamma) * pi2(2.0 - x));
    };
    p.f = [=](double x, double t) {
        return -uex(x, t) -
               t * std::exp(-t) * (gamma * dpi2(x) + (1.0 - gamma) * dpi2(2.0 - x));
    };
    p.phi_a = [=](double t) { return -(1.0 - gamma) * t * std::exp(-t) * pi2(2.0); };
    p.phi_b = [=](double t) { return gamma * t * std::exp(-t) * pi2(2.0); };
    p.u0 = [=](double x) { return uex(x, 0.0); };
    return p;
}

ProblemSpec example3(double alpha, double gamma) {
    check_params(alpha, gamma);
    if (gamma != 0.5)
        throw std::invalid_argument("problems: ex3 is only defined for gamma = 1/2");
    ProblemSpec p;
    p.alpha = alpha;
    p.gamma = gamma;
    p.a = 0.0;
    p.b = 1.0;
    p.T = 1.0;

    // symmetric two-sided problem with an endpoint-singular solution
    // u = 4 e^t x^{alpha/2}(1-x)^{alpha/2}; the exact flux is polynomial:
    // p = C t e^t (1 + x - x^2)(x - 1/2), C = 4 Gamma(alpha+1) cos(alpha pi/2).
    const double C = 4.0 * std::tgamma(alpha + 1.0) * std::cos(alpha * std::numbers::pi / 2.0);
    auto uex = [alpha](double x, double t) {
        return 4.0 * std::exp(t) * std::pow(x * (1.0 - x), alpha / 2.0);
    };

    p.KL = [](double x, double t) { return t * (1.0 + x * (1.0 - x)); };
    p.KR = p.KL;
    p.exact_u = uex;
    p.exact_p = [=](double x, double t) {
        return C * t * std::exp(t) * (1.0 + x - x * x) * (x - 0.5);
    };
    p.f = [=](double x, double t) {
        return uex(x, t) - C * t * std::exp(t) * (-3.0 * x * x + 3.0 * x + 0.5);
    };
    p.phi_a = [=](double t) { return -0.5 * C * t * std::exp(t); };
    p.phi_b = [=](double t) { return 0.5 * C * t * std::exp(t); };
    p.u0 = [=](double x) { return uex(x, 0.0); };
    return p;
}

ProblemSpec example4(double alpha, double gamma) {
    check_params(alpha, gamma);
    ProblemSpec p;
    p.alpha = alpha;
    p.gamma = gamma;
    p.a = 0.0;
    p.b = 2.0;
    p.T = 1.0;

    // u = 4 t x(2-x) with the degenerate coefficient K = x(2-x); the flux
    // vanishes at both endpoints: K dg/dx = t * pi4(x), pi4(0) = pi4(2) = 0.
    const double g3 = std::tgamma(3.0 - alpha);
    const double g4 = std::tgamma(4.0 - alpha);
    auto pi4 = [=](double x) {
        return 16.0 * std::pow(x, 3.0 - alpha) / g3 - 8.0 * std::pow(x, 4.0 - alpha) / g3 -
               16.0 * std::pow(x, 4.0 - alpha) / g4 + 8.0 * std::pow(x, 5.0 - alpha) / g4;
    };
    auto dpi4 = [=](double x) {
        return 16.0 * (3.0 - alpha) * std::pow(x, 2.0 - alpha) / g3 -
               8.0 * (4.0 - alpha) * std::pow(x, 3.0 - alpha) / g3 -
               16.0 * (4.0 - alpha) * std::pow(x, 3.0 - alpha) / g4 +
               8.0 * (5.0 - alpha) * std::pow(x, 4.0 - alpha) / g4;
    };

    p.KL = [](double x, double t) { return x * (2.0 - x); };
    p.KR = p.KL;
    p.exact_u = [](double x, double t) { return 4.0 * t * x * (2.0 - x); };
    p.exact_p = [=](double x, double t) {
        return t * (gamma * pi4(x) - (1.0 - gamma) * pi4(2.0 - x));
    };
    p.f = [=](double x, double t) {
        return 4.0 * x * (2.0 - x) - t * (gamma * dpi4(x) + (1.0 - gamma) * dpi4(2.0 - x));
    };
    p.phi_a = [](double t) { return 0.0; };
    p.phi_b = [](double t) { return 0.0; };
    p.u0 = [](double x) { return 0.0; };
    return p;
}

ProblemSpec problem_by_name(const std::string& name, double alpha, double gamma) {
    if (name == "ex1") return example1(alpha, gamma);
    if (name == "ex2") return example2(alpha, gamma);
    if (name == "ex3") return example3(alpha, gamma);
    if (name == "ex4") return example4(alpha, gamma);
    throw std::invalid_argument("problems: unknown problem name: " + name);
}

}  // namespace sfbcfd
