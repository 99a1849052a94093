#pragma once

namespace capcone {

// Gauss hypergeometric 2F1(a,b;c;x) for real parameters and x in [0,1).
// Power series on [0,1/2], Euler transform beyond. Relative accuracy ~1e-13
// for the parameter ranges used by the profile families.
double gauss_2f1(double a, double b, double c, double x);

// d^order/dx^order of 2F1, order <= 2, through shifted-parameter evaluations.
double gauss_2f1_deriv(double a, double b, double c, double x, int order);

}  // namespace capcone
