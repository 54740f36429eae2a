#include "unilog/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "unilog/errors.hpp"
#include "unilog/quadrature.hpp"

namespace unilog {

namespace {

double unit_bump(double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

// ∫_{−1}^{1} exp(−1/(1−u²)) du; the γ-family normalizer is 1/(γ·this).
double unit_bump_mass() {
    static const double mass = integrate([](double u) { return unit_bump(u); }, -1.0, 1.0);
    return mass;
}

}  // namespace

BumpKernel::BumpKernel(double gamma) : gamma_(gamma) {
    if (!(gamma > 0.0 && gamma < kPi)) {
        throw InvalidArgumentError("bump half-width must lie in (0, pi)");
    }
    norm_ = 1.0 / (gamma_ * unit_bump_mass());
}

double BumpKernel::eval(double y) const { return norm_ * unit_bump(y / gamma_); }

double BumpKernel::transform(double omega) const {
    // Floor of one panel per two oscillation periods across the support.
    const int min_panels = static_cast<int>(std::ceil(std::abs(omega) * gamma_ / kTwoPi)) + 1;
    const Complex val = integrate(
        [&](double y) { return eval(y) * std::polar(1.0, -omega * y); }, -gamma_, gamma_,
        FourierLayer::kQuadTol, min_panels);
    if (std::abs(val.imag()) > 1e-12) {
        throw QuadratureError("transform lost symmetry: imag = " + format_g17(val.imag()));
    }
    return val.real();
}

Complex sawtooth_coeff(int k) {
    if (k == 0) return Complex(kPi, 0.0);
    return Complex(0.0, 1.0 / k);
}

FourierLayer::FourierLayer(double gamma, int k_max) : gamma_(gamma), k_max_(k_max) {
    if (k_max_ < 1) throw InvalidArgumentError("k_max must be positive");
    const BumpKernel kernel(gamma);
    chi_.resize(k_max_ + 1);
    chi_[0] = 1.0;
    for (int k = 1; k <= k_max_; ++k) chi_[k] = kernel.transform(k);
}

double FourierLayer::chi_hat(int k) const {
    const int a = std::abs(k);
    if (a > k_max_) throw InvalidArgumentError("k beyond table");
    return chi_[a];
}

Complex FourierLayer::smoothed_coeff(int k) const { return chi_hat(k) * sawtooth_coeff(k); }

double FourierLayer::tail_remainder() const {
    return (2.0 / 3.0) * std::abs(smoothed_coeff(k_max_)) * k_max_;
}

int FourierLayer::decay_onset(double gamma) { return static_cast<int>(std::ceil(4.0 / gamma)); }

double FourierLayer::tail_bound(int K) const {
    if (K < 0 || K >= k_max_) throw InvalidArgumentError("tail_bound needs 0 <= K < k_max");
    double sum = 0.0;
    for (int j = k_max_; j > K; --j) sum += 2.0 * std::abs(smoothed_coeff(j));
    const double bound = sum + tail_remainder();
    if (k_max_ < decay_onset(gamma_)) {
        // The (k_max/j)^4 extrapolation is only backed by the measured decay
        // once the table extends past ~4/γ.
        throw TailNotCertifiableError(bound, k_max_);
    }
    return bound;
}

int FourierLayer::min_certifiable(double eps) const {
    if (tail_bound(k_max_ - 1) > eps) return -1;
    int lo = 0, hi = k_max_ - 1;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (tail_bound(mid) <= eps) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

double FourierLayer::eval(double theta, int K) const {
    if (K < 0 || K > k_max_) throw InvalidArgumentError("order beyond table");
    double sum = sawtooth_coeff(0).real();
    for (int j = 1; j <= K; ++j) {
        sum += 2.0 * (smoothed_coeff(j) * std::polar(1.0, j * theta)).real();
    }
    return sum;
}

void FourierLayer::write_coeff_csv(std::ostream& out) const {
    out << "k,re_c_k,im_c_k,chi_hat_k,re_d_k,im_d_k\n";
    for (int k = -k_max_; k <= k_max_; ++k) {
        const Complex c = sawtooth_coeff(k);
        const Complex d = smoothed_coeff(k);
        out << k << ',' << format_g17(c.real()) << ',' << format_g17(c.imag()) << ','
            << format_g17(chi_hat(k)) << ',' << format_g17(d.real()) << ','
            << format_g17(d.imag()) << '\n';
    }
}

double sawtooth_convolution(const BumpKernel& kernel, double theta) {
    const double g = kernel.gamma();
    auto integrand = [&](double y) { return kernel.eval(y) * phase_mod_2pi(theta - y); };
    // f(θ−y) jumps where θ−y ≡ 0 (mod 2π); keep the jump on a panel edge.
    double split = kTwoPi;  // outside (−γ, γ) means no split needed
    if (theta < g) {
        split = theta;
    } else if (theta > kTwoPi - g) {
        split = theta - kTwoPi;
    }
    if (split > -g && split < g) {
        return integrate(integrand, -g, split) + integrate(integrand, split, g);
    }
    return integrate(integrand, -g, g);
}

}  // namespace unilog
