#include "prandtl/solutions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "prandtl/quadrature.hpp"
#include "prandtl/specfun.hpp"

namespace prandtl::solutions {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kRot78 = std::polar(1.0, 7.0 * kPi / 4.0);   // e^(7 i pi/4)
const Complex kRot34 = std::polar(1.0, 3.0 * kPi / 4.0);   // e^(3 i pi/4)
const Complex kRotM18 = std::polar(1.0, -kPi / 8.0);       // e^(-i pi/8)

using specfun::erf_c;
using specfun::erfi_c;
using specfun::kummer_m;
using specfun::kummer_m_prime;

}  // namespace

TauConstants tau_constants(Complex tau) {
    TauConstants tc;
    const Complex t = tau * kRot78;
    tc.a_tau = -(1.0 + t) / 4.0;
    tc.b_tau = (3.0 - t) / 4.0;
    tc.c_tau = (1.0 - t) / 4.0;
    tc.d_tau = (5.0 - t) / 4.0;
    return tc;
}

Complex x_tau(Complex tau, int branch, Complex z) {
    const Complex z2 = z * z;
    const Complex denom = tau - z2;
    if (std::abs(denom) <= kSingularGuard) {
        throw SingularPoint("x_tau: z^2 too close to tau");
    }
    const TauConstants tc = tau_constants(tau);
    const Complex w = kRot78 * z2;
    const Complex envelope = std::exp(0.5 * kRot34 * z2) / (denom * denom);
    if (branch == 1) {
        const Complex bracket = tau * kummer_m(tc.a_tau, Complex{0.5, 0.0}, w) -
                                4.0 * tc.a_tau * z2 * kummer_m(tc.b_tau, Complex{1.5, 0.0}, w);
        return envelope * bracket;
    }
    const Complex bracket = kummer_m(tc.c_tau, Complex{1.5, 0.0}, w) +
                            kRot78 * (z2 / 3.0) * kummer_m(tc.d_tau, Complex{2.5, 0.0}, w);
    return z * envelope * bracket;
}

Complex y_mu(Complex mu, int branch, Complex eta) {
    const Complex e2 = eta * eta;
    const Complex denom = mu - e2;
    if (std::abs(denom) <= kSingularGuard) {
        throw SingularPoint("y_mu: eta^2 too close to mu");
    }
    const Complex envelope = std::exp(-0.5 * e2) / (denom * denom);
    if (branch == 1) {
        const Complex bracket =
            mu * kummer_m(-(mu + 1.0) / 4.0, Complex{0.5, 0.0}, e2) +
            (mu + 1.0) * e2 * kummer_m((3.0 - mu) / 4.0, Complex{1.5, 0.0}, e2);
        return envelope * bracket;
    }
    const Complex bracket = kummer_m((1.0 - mu) / 4.0, Complex{1.5, 0.0}, e2) +
                            (e2 / 3.0) * kummer_m((5.0 - mu) / 4.0, Complex{2.5, 0.0}, e2);
    return eta * envelope * bracket;
}

Complex series_coeff_scaled(Complex mu, char kind, int n, int* exp2) {
    if (exp2 == nullptr) throw Error("series_coeff_scaled: exp2 must not be null");
    *exp2 = 0;
    // Pull the accumulated magnitude into *exp2 so the mantissa stays near 1.
    const auto renorm = [exp2](Complex& v) {
        const double m = std::abs(v);
        if (m > 0.0 && std::isfinite(m)) {
            int k = 0;
            std::frexp(m, &k);
            if (k < -16 || k > 16) {
                v = Complex{std::ldexp(v.real(), -k), std::ldexp(v.imag(), -k)};
                *exp2 += k;
            }
        }
    };
    if (kind == 'a') {
        // a_n = (mu - 2n)/n! * (-(mu+1)/4)_n / (1/2)_n, accumulated as a
        // running product so no factorial ever overflows.
        Complex prod{1.0, 0.0};
        const Complex base = -(mu + 1.0) / 4.0;
        for (int j = 0; j < n; ++j) {
            const double jd = static_cast<double>(j);
            prod *= (base + jd) / ((0.5 + jd) * (1.0 + jd));
            renorm(prod);
        }
        return (mu - 2.0 * static_cast<double>(n)) * prod;
    }
    if (kind != 'b') throw Error("series_coeff: kind must be 'a' or 'b'");
    if (n == 0) return Complex{1.0, 0.0};
    // b_n = (2n+1-mu)/(4 n!) * ((5-mu)/4)_{n-1} / (3/2)_n  for n >= 1.
    Complex prod{1.0, 0.0};
    const Complex base = (5.0 - mu) / 4.0;
    for (int j = 1; j <= n; ++j) {
        const double jd = static_cast<double>(j);
        Complex numer{1.0, 0.0};
        if (j >= 2) numer = base + (jd - 2.0);
        prod *= numer / (jd * (0.5 + jd));
        renorm(prod);
    }
    return (2.0 * static_cast<double>(n) + 1.0 - mu) / 4.0 * prod;
}

Complex series_coeff(Complex mu, char kind, int n) {
    int e = 0;
    const Complex m = series_coeff_scaled(mu, kind, n, &e);
    return Complex{std::ldexp(m.real(), e), std::ldexp(m.imag(), e)};
}

Complex r_series(Complex mu, int branch, Complex eta) {
    const Complex e2 = eta * eta;
    Complex sum{0.0, 0.0};
    Complex power{1.0, 0.0};
    if (branch == 2) power = eta;
    // Incremental coefficient recurrences mirroring series_coeff.
    Complex prod{1.0, 0.0};
    int small_streak = 0;
    for (int n = 0; n < 200; ++n) {
        const double nd = static_cast<double>(n);
        Complex coeff;
        if (branch == 1) {
            coeff = (mu - 2.0 * nd) * prod;
            prod *= (-(mu + 1.0) / 4.0 + nd) / ((0.5 + nd) * (1.0 + nd));
        } else {
            if (n == 0) {
                coeff = Complex{1.0, 0.0};
            } else {
                coeff = (2.0 * nd + 1.0 - mu) / 4.0 * prod;
            }
            Complex numer{1.0, 0.0};
            if (n >= 1) numer = (5.0 - mu) / 4.0 + (nd - 1.0);
            prod *= numer / ((nd + 1.0) * (1.5 + nd));
        }
        const Complex term = coeff * power;
        sum += term;
        power *= e2;
        if (std::abs(term) < 1e-17 * std::abs(sum) && n > 2) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
    }
    return sum;
}

Complex tau_criterion() { return std::polar(1.0, 5.0 * kPi / 4.0); }

Complex w_criterion(Complex z) {
    const Complex eta = kRotM18 * z;
    const Complex e2 = eta * eta;
    const Complex denom = 1.0 + e2;
    if (std::abs(denom) <= kSingularGuard) {
        throw SingularPoint("w_criterion: 1 + eta^2 vanishes");
    }
    const double sqrt_2_over_pi = std::sqrt(2.0 / kPi);
    return 0.5 * (1.0 + erf_c(eta / std::sqrt(2.0)) +
                  sqrt_2_over_pi * eta * std::exp(-0.5 * e2) / denom);
}

Complex psi_mu(Complex mu, int branch, Complex eta) {
    const Complex e2 = eta * eta;
    const Complex envelope = std::exp(-0.5 * e2);
    if (branch == 1) {
        return kummer_m(-(1.0 + mu) / 4.0, Complex{0.5, 0.0}, e2) * envelope;
    }
    return eta * kummer_m((1.0 - mu) / 4.0, Complex{1.5, 0.0}, e2) * envelope;
}

Complex psi_mu_prime(Complex mu, int branch, Complex eta) {
    const Complex e2 = eta * eta;
    const Complex envelope = std::exp(-0.5 * e2);
    if (branch == 1) {
        const Complex a = -(1.0 + mu) / 4.0;
        return eta *
               (2.0 * kummer_m_prime(a, Complex{0.5, 0.0}, e2) -
                kummer_m(a, Complex{0.5, 0.0}, e2)) *
               envelope;
    }
    const Complex a = (1.0 - mu) / 4.0;
    return ((1.0 - e2) * kummer_m(a, Complex{1.5, 0.0}, e2) +
            2.0 * e2 * kummer_m_prime(a, Complex{1.5, 0.0}, e2)) *
           envelope;
}

Complex g_mu1(Complex eta) { return std::exp(0.5 * eta * eta) * erf_c(eta); }

Complex g_mu1_prime(Complex eta) {
    constexpr double two_over_sqrt_pi = 2.0 / 1.7724538509055160273;
    return eta * g_mu1(eta) + two_over_sqrt_pi * std::exp(-0.5 * eta * eta);
}

namespace {

long long factorial_ll(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// d/deta of an integer-coefficient polynomial.
std::vector<long long> poly_derivative(const std::vector<long long>& c) {
    std::vector<long long> d;
    for (std::size_t i = 1; i < c.size(); ++i) {
        d.push_back(static_cast<long long>(i) * c[i]);
    }
    return d;
}

// 2 eta p + p', the action of the down operator on p(eta) e^(eta^2/2).
std::vector<long long> ladder_step(const std::vector<long long>& p) {
    std::vector<long long> out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] += 2 * p[i];
    const std::vector<long long> dp = poly_derivative(p);
    for (std::size_t i = 0; i < dp.size(); ++i) out[i] += dp[i];
    return out;
}

std::vector<long long> poly_sum(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    std::vector<long long> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Complex poly_eval(const std::vector<long long>& c, Complex eta) {
    Complex v{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;) {
        v = v * eta + static_cast<double>(c[i]);
    }
    return v;
}

long long ipow4(int n) {
    long long v = 1;
    for (int i = 0; i < n; ++i) v *= 4;
    return v;
}

}  // namespace

const LadderPolynomials& neg_odd_polynomials(int m) {
    if (m < 0 || m > 20) {
        throw Error("neg_odd_polynomials: m must lie in [0, 20]");
    }
    static std::map<int, LadderPolynomials> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    LadderPolynomials lp;
    lp.p = {1};
    lp.q = {1};
    lp.qt = {};
    for (int step = 0; step < m; ++step) {
        lp.p = ladder_step(lp.p);
        const std::vector<long long> q_old = lp.q;
        lp.q = ladder_step(lp.q);
        lp.qt = poly_sum(q_old, poly_derivative(lp.qt));
    }
    const int half_up = (m + 1) / 2;        // ceil(m/2)
    const int half_dn = m > 0 ? m / 2 : 0;  // ceil((m-1)/2)
    lp.i_num = factorial_ll(half_up);
    lp.i_den = factorial_ll(2 * half_up);
    lp.j_num = 1;
    lp.j_den = factorial_ll(half_dn) * ipow4(half_dn);
    return cache.emplace(m, std::move(lp)).first->second;
}

int neg_odd_branch_of_i(int m) { return m % 2 == 0 ? 1 : 2; }

Complex psi_neg_odd(int m, char branch, Complex eta) {
    const LadderPolynomials& lp = neg_odd_polynomials(m);
    const Complex e2 = eta * eta;
    if (branch == 'i') {
        const double norm = static_cast<double>(lp.i_num) / static_cast<double>(lp.i_den);
        return norm * poly_eval(lp.p, eta) * std::exp(0.5 * e2);
    }
    if (branch != 'j') throw Error("psi_neg_odd: branch must be 'i' or 'j'");
    const double norm = static_cast<double>(lp.j_num) / static_cast<double>(lp.j_den);
    const Complex gauss_int = 0.5 * std::sqrt(kPi) * erf_c(eta);
    return norm * (poly_eval(lp.q, eta) * std::exp(0.5 * e2) * gauss_int +
                   poly_eval(lp.qt, eta) * std::exp(-0.5 * e2));
}

Complex ladder(char direction, const std::function<Complex(Complex)>& f, Complex eta) {
    quadrature::DerivativeSpec d;
    d.center = eta;
    d.order = 1;
    const Complex fp = quadrature::cauchy_derivative(f, d);
    if (direction == 'u') return eta * f(eta) - fp;
    if (direction == 'd') return eta * f(eta) + fp;
    throw Error("ladder: direction must be 'u' or 'd'");
}

Complex upsilon_m1_explicit(int branch, Complex eta) {
    const Complex e2 = eta * eta;
    if (branch == 1) {
        const double sqrt_pi_half = std::sqrt(kPi / 2.0);
        return 0.5 * (eta * std::exp(-0.5 * e2) +
                      (1.0 + e2) * sqrt_pi_half * erf_c(eta / std::sqrt(2.0)));
    }
    if (branch != 2) throw Error("upsilon_m1_explicit: branch must be 1 or 2");
    const double sqrt_pi = std::sqrt(kPi);
    quadrature::PathIntegralSpec spec;
    spec.from = Complex{0.0, 0.0};
    spec.to = eta;
    const Complex ia = quadrature::integrate_segment(
        [](Complex xi) { return erfi_c(xi) * std::exp(-0.5 * xi * xi); }, spec);
    const Complex ib = quadrature::integrate_segment(
        [](Complex xi) { return xi * xi * erfi_c(xi) * std::exp(-0.5 * xi * xi); }, spec);
    return sqrt_pi / 2.0 * (1.0 + 0.5 * e2) * ia - sqrt_pi / 4.0 * ib - 0.5;
}

}  // namespace prandtl::solutions
