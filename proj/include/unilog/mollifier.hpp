#pragma once

#include <iosfwd>
#include <vector>

#include "unilog/types.hpp"

namespace unilog {

// Normalized C∞ bump χ_γ(y) = C·exp(−1/(1−(y/γ)²)) on (−γ, γ), zero
// outside. Unit mass, so χ̂_γ(0) = 1 by construction.
class BumpKernel {
  public:
    explicit BumpKernel(double gamma);

    double gamma() const { return gamma_; }

    // χ_γ(y); exactly 0 for |y| ≥ γ.
    double eval(double y) const;

    // χ̂_γ(ω) = ∫ χ_γ(y) e^{−iωy} dy by quadrature to 1e−12 absolute. The
    // imaginary part must cancel by symmetry; it is checked against 1e−12
    // and discarded.
    double transform(double omega) const;

  private:
    double gamma_;
    double norm_;  // C, fixed so the mass is 1
};

// c_k of the periodic sawtooth f(θ) = θ on [0, 2π): π at k = 0, i/k else.
Complex sawtooth_coeff(int k);

// Precomputed tables of χ̂_γ(k) and d_k = χ̂_γ(k)·c_k for |k| ≤ k_max.
// χ̂_γ(0) is pinned to 1 (unit mass is definitional; the raw quadrature
// value is exercised separately through BumpKernel::transform).
class FourierLayer {
  public:
    FourierLayer(double gamma, int k_max);

    double gamma() const { return gamma_; }
    int k_max() const { return k_max_; }
    double quad_tol() const { return kQuadTol; }

    // χ̂_γ(k), |k| ≤ k_max; even in k.
    double chi_hat(int k) const;

    // d_k = χ̂_γ(k)·c_k, |k| ≤ k_max; d_{−k} = conj(d_k) exactly.
    Complex smoothed_coeff(int k) const;

    // Certified bound on Σ_{|j|>K} |d_j|: the in-table part K < |j| ≤ k_max
    // summed directly, plus a remainder extrapolated from |d_j| ≲
    // |d_{k_max}|·(k_max/j)⁴. Nonincreasing in K. Throws
    // TailNotCertifiableError when k_max < ceil(4/γ), where the table has
    // not reached the decay regime that justifies the extrapolation.
    double tail_bound(int K) const;

    // The extrapolated remainder alone, (2/3)·|d_{k_max}|·k_max. Reported in
    // certificates as the heuristic share of tail_bound.
    double tail_remainder() const;

    // Smallest K with tail_bound(K) ≤ eps, or −1 when even K = k_max − 1
    // fails (caller should enlarge the table).
    int min_certifiable(double eps) const;

    // Table size ~4/γ past which the measured |d_k| decay supports the
    // remainder extrapolation.
    static int decay_onset(double gamma);

    // Partial sum Σ_{|j|≤K} d_j e^{ijθ}, real by conjugate pairing.
    double eval(double theta, int K) const;

    // Rows "k, re(c_k), im(c_k), chi_hat_k, re(d_k), im(d_k)" for
    // k = −k_max..k_max, 17 significant digits, with a header line.
    void write_coeff_csv(std::ostream& out) const;

    static constexpr double kQuadTol = 1e-13;

  private:
    double gamma_;
    int k_max_;
    std::vector<double> chi_;  // chi_[k] = χ̂_γ(k), k = 0..k_max
};

// Reference (f ⋆ χ_γ)(θ) by direct quadrature, the sawtooth jump split out
// of the integration panels. Test oracle for FourierLayer::eval.
double sawtooth_convolution(const BumpKernel& kernel, double theta);

}  // namespace unilog
