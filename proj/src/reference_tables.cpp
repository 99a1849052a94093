#include "reference_tables.hpp"

#include <algorithm>
#include <cmath>

namespace capcone {

namespace {

// Version 1 of the embedded data.  Values are transcribed digit-for-digit
// from the tables of record; recomputation must land within
// within_table_tolerance of every entry.
constexpr SupersolutionRow kAppendix[] = {
    {7, 1, -2, -3.33, -0.011, -1.55, -1.39, 2.34},
    {7, 2, -2.5, -0.58, -0.034, -0.81, -0.62, 4.29},
    {8, 1, -4, -1.67, -0.237, -1.68, -1.27, 5.37},
    {8, 2, -4, -0.66, -0.645, -1.71, -1.01, 5.65},
    {8, 3, -3, -1.29, -1.024, -2.52, -2.51, 5.95},
    {9, 1, -5, -2.66, -0.307, -2.00, -1.69, 7.22},
    {9, 2, -5, -0.98, -0.967, -2.79, -1.94, 7.11},
    {9, 3, -5, -0.60, -1.478, -1.97, -1.27, 8.10},
    {9, 4, -4, -1.26, -1.720, -3.06, -2.98, 11.03},
    {9, 5, -3, -1.45, -1.452, -2.81, -3.09, 13.52},
    {12, 1, -8, -5.47, -0.345, -2.85, -2.64, 13.90},
    {12, 2, -8, -1.73, -1.266, -3.56, -3.00, 12.29},
    {12, 3, -8, -1.03, -2.206, -4.73, -3.39, 12.69},
    {12, 4, -8, -0.73, -2.617, -4.10, -2.55, 16.73},
    {12, 5, -8, -0.56, -2.920, -3.13, -1.46, 25.21},
    {12, 6, -7, -1.20, -2.903, -4.95, -4.09, 26.59},
    {12, 7, -7, -0.95, -2.917, -2.77, -1.45, 27.07},
    {12, 8, -6, -1.33, -2.380, -3.60, -2.71, 30.4},
    {12, 9, -4, -2.01, -1.440, -5.42, -5.27, 28.09},
    {20, 16, -12, -1.55, -3.777, -10.37, -3.81, 74.18},
    {20, 17, -11, -1.71, -2.720, -10.65, -4.59, 72.39},
    {20, 18, -7, -3.01, -0.997, -18.14, -16.41, 56.85},
    {30, 1, -26, -19.38, -0.349, -5.77, -5.66, 77.62},
    {30, 15, -24, -1.32, -8.985, -19.73, -10.03, 119.39},
    {30, 28, -16, -2.16, -1.909, -40.33, -24.82, 109.76},
    {40, 1, -36, -25.43, -0.348, -6.87, -6.77, 125.76},
    {40, 38, -24, -1.91, -2.621, -98.47, -31.33, 159.46},
    {50, 1, -46, -30.71, -0.347, -7.81, -7.71, 181.08},
    {50, 25, -42, -1.74, -14.545, -48.89, -28.40, 245.12},
    {50, 48, -31, -1.96, -3.105, -282.76, -109.81, 207.44},
    {60, 1, -56, -35.43, -0.347, -8.65, -8.55, 242.74},
    {60, 58, -38, -1.99, -3.539, -757.64, -326.85, 255.70},
    {70, 1, -66, -39.71, -0.347, -9.42, -9.32, 310.14},
    {70, 35, -60, -2.02, -19.879, -104.13, -57.47, 386.63},
    {70, 68, -46, -1.86, -4.069, -1847.27, -484.63, 306.18},
    {100, 1, -96, -50.76, -0.347, -11.42, -11.30, 542.80},
    {100, 50, -88, -1.98, -28.832, -271.42, -59.27, 625.82},
    {100, 98, -46, -26.56, -3.544, -9680.10, -9670.75, 381.46},
};

constexpr BetaExampleRow kQuadratics[] = {
    {7, 1, -2},   {7, 2, -2.5},  {8, 3, -3},    {9, 4, -4},
    {9, 5, -3},   {10, 6, -3},   {12, 9, -4},   {13, 10, -4},
    {20, 18, -10}, {21, 17, -10}, {21, 18, -10}, {21, 19, -10},
};

// n = 7 singles out k = 1; n = 8 and 9 use one exponent each with the
// recorded margin floors; n >= 10 uses 4 - n.
constexpr AlphaRow kAlpha[] = {
    {7, 1, -3.23, 0},  {7, 2, -3, 0},     {7, 3, -3, 0},     {7, 4, -3, 0},
    {7, 5, -3, 0},     {8, 1, -4.5, 1e-2}, {8, 2, -4.5, 1e-2}, {8, 3, -4.5, 1e-2},
    {8, 4, -4.5, 1e-2}, {8, 5, -4.5, 1e-2}, {8, 6, -4.5, 1e-2}, {9, 1, -5.5, 1e-1},
    {9, 2, -5.5, 1e-1}, {9, 3, -5.5, 1e-1}, {9, 4, -5.5, 1e-1}, {9, 5, -5.5, 1e-1},
    {9, 6, -5.5, 1e-1}, {9, 7, -5.5, 1e-1}, {10, 1, -6, 0},    {10, 2, -6, 0},
    {10, 3, -6, 0},    {10, 4, -6, 0},    {10, 5, -6, 0},    {10, 6, -6, 0},
    {10, 7, -6, 0},    {10, 8, -6, 0},    {11, 1, -7, 0},    {11, 2, -7, 0},
    {11, 3, -7, 0},    {11, 4, -7, 0},    {11, 5, -7, 0},    {11, 6, -7, 0},
    {11, 7, -7, 0},    {11, 8, -7, 0},    {11, 9, -7, 0},    {12, 1, -8, 0},
    {12, 2, -8, 0},    {12, 3, -8, 0},    {12, 4, -8, 0},    {12, 5, -8, 0},
    {12, 6, -8, 0},    {12, 7, -8, 0},    {12, 8, -8, 0},    {12, 9, -8, 0},
    {12, 10, -8, 0},
};

}  // namespace

std::span<const SupersolutionRow> appendix_rows() { return kAppendix; }

std::span<const BetaExampleRow> quadratics_rows() { return kQuadratics; }

std::span<const AlphaRow> alpha_rows() { return kAlpha; }

bool within_table_tolerance(double got, double ref) {
  return std::abs(got - ref) <= std::max(0.02, 0.02 * std::abs(ref));
}

}  // namespace capcone
