#include "ddw/problems.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "ddw/error.hpp"
#include "ddw/random.hpp"

namespace ddw {

namespace {

using std::numbers::pi;

struct Spec {
    const char* name;
    std::size_t fixed_dim;  // 0: configurable
    double lo;
    double hi;
};

// Box per function; F17 (Branin) overrides per coordinate below.
constexpr std::array<Spec, 23> kSpecs{{
    {"sphere", 0, -100, 100},
    {"schwefel_2_22", 0, -10, 10},
    {"schwefel_1_2", 0, -100, 100},
    {"schwefel_2_21", 0, -100, 100},
    {"rosenbrock", 0, -30, 30},
    {"step", 0, -100, 100},
    {"quartic_noise", 0, -1.28, 1.28},
    {"schwefel_2_26", 0, -500, 500},
    {"rastrigin", 0, -5.12, 5.12},
    {"ackley", 0, -32, 32},
    {"griewank", 0, -600, 600},
    {"penalized_1", 0, -50, 50},
    {"penalized_2", 0, -50, 50},
    {"shekel_foxholes", 2, -65.536, 65.536},
    {"kowalik", 4, -5, 5},
    {"six_hump_camel", 2, -5, 5},
    {"branin", 2, -5, 15},
    {"goldstein_price", 2, -2, 2},
    {"hartmann_3", 3, 0, 1},
    {"hartmann_6", 6, 0, 1},
    {"shekel_5", 4, 0, 10},
    {"shekel_7", 4, 0, 10},
    {"shekel_10", 4, 0, 10},
}};

constexpr double kSchwefelOptimum = -418.9828872724338;  // per dimension, at x = 420.968746

const Spec& spec(int id) {
    if (id < 1 || id > 23) throw InvalidInput("unknown benchmark id F" + std::to_string(id));
    return kSpecs[static_cast<std::size_t>(id - 1)];
}

double sq(double x) { return x * x; }

// Penalty term u(x, a, k, m) of the penalized functions.
double penalty(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

// F14: Shekel's foxholes, f = (1/500 + sum_j 1/(j + sum_i (x_i - a_ij)^6))^-1.
double shekel_foxholes(std::span<const double> x) {
    constexpr std::array<double, 5> grid{-32, -16, 0, 16, 32};
    double sum = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        const double a0 = grid[static_cast<std::size_t>(j % 5)];
        const double a1 = grid[static_cast<std::size_t>(j / 5)];
        sum += 1.0 / (j + 1 + std::pow(x[0] - a0, 6) + std::pow(x[1] - a1, 6));
    }
    return 1.0 / sum;
}

// F15: Kowalik, f = sum_i (a_i - x1 (b_i^2 + b_i x2) / (b_i^2 + b_i x3 + x4))^2.
double kowalik(std::span<const double> x) {
    constexpr std::array<double, 11> a{0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                       0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    constexpr std::array<double, 11> inv_b{0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16};
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double b = 1.0 / inv_b[i];
        sum += sq(a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]));
    }
    return sum;
}

// F19/F20: Hartmann, f = -sum_i c_i exp(-sum_j A_ij (x_j - P_ij)^2).
template <std::size_t N>
double hartmann(std::span<const double> x, const std::array<std::array<double, N>, 4>& a,
                const std::array<std::array<double, N>, 4>& p) {
    constexpr std::array<double, 4> c{1.0, 1.2, 3.0, 3.2};
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < N; ++j) inner += a[i][j] * sq(x[j] - p[i][j]);
        sum += c[i] * std::exp(-inner);
    }
    return -sum;
}

// F21..F23: Shekel with m terms, f = -sum_{i<m} 1/((x - a_i).(x - a_i) + c_i).
double shekel(std::span<const double> x, std::size_t m) {
    constexpr std::array<std::array<double, 4>, 10> a{{{4, 4, 4, 4},
                                                       {1, 1, 1, 1},
                                                       {8, 8, 8, 8},
                                                       {6, 6, 6, 6},
                                                       {3, 7, 3, 7},
                                                       {2, 9, 2, 9},
                                                       {5, 5, 3, 3},
                                                       {8, 1, 8, 1},
                                                       {6, 2, 6, 2},
                                                       {7, 3.6, 7, 3.6}}};
    constexpr std::array<double, 10> c{0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double d = c[i];
        for (std::size_t j = 0; j < 4; ++j) d += sq(x[j] - a[i][j]);
        sum += 1.0 / d;
    }
    return -sum;
}

double evaluate_unchecked(int id, std::span<const double> x) {
    const std::size_t n = x.size();
    const double dn = static_cast<double>(n);
    switch (id) {
        case 1: {  // sum x_i^2
            double s = 0;
            for (double v : x) s += v * v;
            return s;
        }
        case 2: {  // sum |x_i| + prod |x_i|
            double s = 0, p = 1;
            for (double v : x) {
                s += std::abs(v);
                p *= std::abs(v);
            }
            return s + p;
        }
        case 3: {  // sum_i (sum_{j<=i} x_j)^2
            double s = 0, prefix = 0;
            for (double v : x) {
                prefix += v;
                s += prefix * prefix;
            }
            return s;
        }
        case 4: {  // max |x_i|
            double m = 0;
            for (double v : x) m = std::max(m, std::abs(v));
            return m;
        }
        case 5: {  // sum 100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2
            double s = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) s += 100 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1);
            return s;
        }
        case 6: {  // sum floor(x_i + 0.5)^2
            double s = 0;
            for (double v : x) s += sq(std::floor(v + 0.5));
            return s;
        }
        case 7: {  // sum (i+1) x_i^4 + noise[0, 1)
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) s += static_cast<double>(i + 1) * std::pow(x[i], 4);
            return s + quartic_noise(x);
        }
        case 8: {  // sum -x_i sin(sqrt|x_i|)
            double s = 0;
            for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
            return s;
        }
        case 9: {  // sum x_i^2 - 10 cos(2 pi x_i) + 10
            double s = 0;
            for (double v : x) s += v * v - 10 * std::cos(2 * pi * v) + 10;
            return s;
        }
        case 10: {  // -20 exp(-0.2 sqrt(mean x^2)) - exp(mean cos(2 pi x)) + 20 + e
            double s2 = 0, sc = 0;
            for (double v : x) {
                s2 += v * v;
                sc += std::cos(2 * pi * v);
            }
            return -20 * std::exp(-0.2 * std::sqrt(s2 / dn)) - std::exp(sc / dn) + 20 + std::numbers::e;
        }
        case 11: {  // sum x^2 / 4000 - prod cos(x_i / sqrt(i+1)) + 1
            double s = 0, p = 1;
            for (std::size_t i = 0; i < n; ++i) {
                s += x[i] * x[i];
                p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
            }
            return s / 4000 - p + 1;
        }
        case 12: {  // pi/n {10 sin^2(pi y1) + sum (y_i-1)^2 [1 + 10 sin^2(pi y_{i+1})] + (y_n-1)^2} + sum u(x,10,100,4)
            auto y = [&](std::size_t i) { return 1 + (x[i] + 1) / 4; };
            double s = 10 * sq(std::sin(pi * y(0)));
            for (std::size_t i = 0; i + 1 < n; ++i) s += sq(y(i) - 1) * (1 + 10 * sq(std::sin(pi * y(i + 1))));
            s += sq(y(n - 1) - 1);
            double u = 0;
            for (double v : x) u += penalty(v, 10, 100, 4);
            return pi / dn * s + u;
        }
        case 13: {  // 0.1 {sin^2(3 pi x1) + sum (x_i-1)^2 [1 + sin^2(3 pi x_{i+1})] + (x_n-1)^2 [1 + sin^2(2 pi x_n)]} + sum u(x,5,100,4)
            double s = sq(std::sin(3 * pi * x[0]));
            for (std::size_t i = 0; i + 1 < n; ++i) s += sq(x[i] - 1) * (1 + sq(std::sin(3 * pi * x[i + 1])));
            s += sq(x[n - 1] - 1) * (1 + sq(std::sin(2 * pi * x[n - 1])));
            double u = 0;
            for (double v : x) u += penalty(v, 5, 100, 4);
            return 0.1 * s + u;
        }
        case 14: return shekel_foxholes(x);
        case 15: return kowalik(x);
        case 16:  // 4x1^2 - 2.1x1^4 + x1^6/3 + x1 x2 - 4x2^2 + 4x2^4
            return 4 * sq(x[0]) - 2.1 * std::pow(x[0], 4) + std::pow(x[0], 6) / 3 + x[0] * x[1] - 4 * sq(x[1]) +
                   4 * std::pow(x[1], 4);
        case 17:  // (x2 - 5.1/(4 pi^2) x1^2 + 5/pi x1 - 6)^2 + 10 (1 - 1/(8 pi)) cos x1 + 10
            return sq(x[1] - 5.1 / (4 * pi * pi) * sq(x[0]) + 5 / pi * x[0] - 6) +
                   10 * (1 - 1 / (8 * pi)) * std::cos(x[0]) + 10;
        case 18: {  // Goldstein-Price
            const double x1 = x[0], x2 = x[1];
            const double t1 = 1 + sq(x1 + x2 + 1) * (19 - 14 * x1 + 3 * x1 * x1 - 14 * x2 + 6 * x1 * x2 + 3 * x2 * x2);
            const double t2 =
                30 + sq(2 * x1 - 3 * x2) * (18 - 32 * x1 + 12 * x1 * x1 + 48 * x2 - 36 * x1 * x2 + 27 * x2 * x2);
            return t1 * t2;
        }
        case 19:
            return hartmann<3>(x, {{{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}}},
                               {{{0.3689, 0.1170, 0.2673},
                                 {0.4699, 0.4387, 0.7470},
                                 {0.1091, 0.8732, 0.5547},
                                 {0.03815, 0.5743, 0.8828}}});
        case 20:
            return hartmann<6>(x,
                               {{{10, 3, 17, 3.5, 1.7, 8},
                                 {0.05, 10, 17, 0.1, 8, 14},
                                 {3, 3.5, 1.7, 10, 17, 8},
                                 {17, 8, 0.05, 10, 0.1, 14}}},
                               {{{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                 {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                 {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                                 {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}});
        case 21: return shekel(x, 5);
        case 22: return shekel(x, 7);
        case 23: return shekel(x, 10);
        default: throw InvalidInput("unknown benchmark id F" + std::to_string(id));
    }
}

std::vector<double> catalogued_optimizer(int id, std::size_t dim) {
    switch (id) {
        case 5:
        case 13: return std::vector<double>(dim, 1.0);
        case 8: return std::vector<double>(dim, 420.968746);
        case 12: return std::vector<double>(dim, -1.0);
        case 14: return {-31.97833495762107, -31.978328496668112};
        case 15: return {0.1928334532535868, 0.19083624024185586, 0.12311729988283682, 0.13576599032085118};
        case 16: return {0.08984201492945389, -0.712656402369394};
        case 17: return {pi, 2.275};
        case 18: return {0.0, -1.0};
        case 19: return {0.11461432786938144, 0.5556488498545934, 0.8525469529266695};
        case 20:
            return {0.2016895128922905,  0.15001069323742897, 0.4768739767611768,
                    0.2753324307839508, 0.31165161848739587, 0.6573005349989142};
        case 21: return {4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425};
        case 22: return {4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923};
        case 23: return {4.000746533201553, 4.000592934538832, 3.9996633972202558, 3.9995098012852255};
        default: return std::vector<double>(dim, 0.0);
    }
}

}  // namespace

double quartic_noise(std::span<const double> point) noexcept {
    std::uint64_t h = 0x5DEECE66DULL;
    for (double v : point) h = mix64(h ^ std::bit_cast<std::uint64_t>(v));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

int parse_benchmark_id(std::string_view text) {
    if (!text.empty() && (text.front() == 'F' || text.front() == 'f')) text.remove_prefix(1);
    int id = 0;
    if (text.empty() || text.size() > 2) throw InvalidInput("benchmark id must be F1..F23");
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw InvalidInput("benchmark id must be F1..F23");
        id = id * 10 + (ch - '0');
    }
    spec(id);
    return id;
}

bool has_fixed_dim(int id) { return spec(id).fixed_dim != 0; }

BenchmarkProblem make_benchmark(int id, std::optional<std::size_t> dim) {
    const Spec& s = spec(id);
    std::size_t n = s.fixed_dim;
    if (n == 0) {
        n = dim.value_or(kDefaultBenchmarkDim);
        if (n == 0 || (id == 5 && n < 2)) throw InvalidInput("invalid dimension for F" + std::to_string(id));
    } else if (dim && *dim != n) {
        throw InvalidInput("F" + std::to_string(id) + " has fixed dimension " + std::to_string(n));
    }
    BenchmarkProblem p;
    p.id = id;
    p.name = "F" + std::to_string(id) + ":" + s.name;
    p.dim = n;
    p.lower.assign(n, s.lo);
    p.upper.assign(n, s.hi);
    if (id == 17) {
        p.lower = {-5, 0};
        p.upper = {10, 15};
    }
    p.known_optimum = known_optimum(id, n);
    p.optimizer = catalogued_optimizer(id, n);
    return p;
}

double eval_benchmark(int id, std::span<const double> point) {
    const Spec& s = spec(id);
    if (point.empty()) throw InvalidInput("point must not be empty");
    if (s.fixed_dim != 0 && point.size() != s.fixed_dim)
        throw InvalidInput("F" + std::to_string(id) + " expects " + std::to_string(s.fixed_dim) + " coordinates");
    if (id == 5 && point.size() < 2) throw InvalidInput("F5 needs at least 2 coordinates");
    const BenchmarkProblem box = make_benchmark(id, point.size());
    for (std::size_t j = 0; j < point.size(); ++j) {
        if (!(point[j] >= box.lower[j] && point[j] <= box.upper[j]))
            throw InvalidInput("coordinate " + std::to_string(j) + " outside the box of F" + std::to_string(id));
    }
    return evaluate_unchecked(id, point);
}

double known_optimum(int id, std::size_t dim) {
    spec(id);
    switch (id) {
        case 8: return kSchwefelOptimum * static_cast<double>(dim);
        case 14: return 0.998003837794449;
        case 15: return 0.000307485987805605;
        case 16: return -1.0316284534898776;
        case 17: return 0.39788735772973816;
        case 18: return 3.0;
        case 19: return -3.8627821478207554;
        case 20: return -3.322368011415515;
        case 21: return -10.153199679058229;
        case 22: return -10.402940566818662;
        case 23: return -10.536409816692046;
        default: return 0.0;
    }
}

Objective BenchmarkProblem::objective() const {
    Objective o;
    o.name = name;
    o.dim = dim;
    o.lower = lower;
    o.upper = upper;
    const int fn = id;
    // Optimizers clamp to the box, so the unchecked path is safe here.
    o.fn = [fn](std::span<const double> x) { return evaluate_unchecked(fn, x); };
    return o;
}

}  // namespace ddw
