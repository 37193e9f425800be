#pragma once

#include "partfn/precision.hpp"
#include "partfn/rational.hpp"

#include <array>
#include <cstdint>

namespace partfn {

/// s(h, k) = sum_{r=1}^{k-1} (r/k) ((hr mod k)/k - 1/2), exactly; s(h, 1) = 0.
/// Throws std::invalid_argument for k < 1.
ExactRational dedekind_sum(std::int64_t h, std::int64_t k);

/// s(h,k) + s(k,h) - (-1/4 + (h/k + k/h + 1/(hk))/12). Zero by reciprocity.
/// Requires h, k >= 1 and gcd(h, k) = 1.
ExactRational dedekind_reciprocity_defect(std::int64_t h, std::int64_t k);

/// Phase of the h-th summand of A_k(n), as a multiple of pi reduced into
/// [0, 2): s(h,k) - 2nh/k mod 2.
mpq_class a_k_phase(std::int64_t h, std::int64_t k, std::uint64_t n);

struct AkValue {
    std::int64_t k;
    std::uint64_t n;
    Real value;
};

/// A_k(n) = sum over 1 <= h <= k, gcd(h,k) = 1 of exp(pi i s(h,k) - 2 pi i n h / k).
/// The summands for h and k - h are complex conjugates, so the sum is
/// accumulated as 2 cos(pi * phase) over h < k/2 in ascending h.
AkValue a_k(std::int64_t k, std::uint64_t n, const PrecisionContext& ctx);

/// Same sum accumulated term by term as complex exponentials over all h.
/// The imaginary part should vanish; kept for cross-checking.
Complex a_k_complex(std::int64_t k, std::uint64_t n, const PrecisionContext& ctx);

/// F(x) = prod_{m>=1} 1/(1 - x^m) for real 0 < x < 1. The product stops once
/// x^m < 2^-(bits + 8). Throws std::domain_error outside (0, 1).
Real eval_F(const Real& x, const PrecisionContext& ctx);

/// F(w) for complex |w| < 1, same truncation rule on |w|^m.
Complex eval_F(const Complex& w, const PrecisionContext& ctx);

/// eta(tau) = e^{pi i tau / 12} prod_{m>=1} (1 - e^{2 pi i m tau}), Im tau > 0.
Complex dedekind_eta(const Complex& tau, const PrecisionContext& ctx);

/// Integer matrix (a b; c d).
struct ModularMatrix {
    std::int64_t a, b, c, d;
};

/// A matrix (a b; c d) with ad - bc = 1 and 0 <= a < c for the given bottom
/// row. Requires c > 0 and gcd(c, d) = 1.
ModularMatrix complete_modular_matrix(std::int64_t c, std::int64_t d);

struct EtaCheckReport {
    ModularMatrix matrix;
    Complex tau;
    Complex lhs;
    Complex rhs;
    Real residual;
};

/// Evaluates both sides of
///   eta((a tau + b)/(c tau + d)) = exp(pi i ((a+d)/(12c) + s(-d,c))) (-i(c tau + d))^{1/2} eta(tau)
/// Requires ad - bc = 1, c > 0 and Im tau > 0.
EtaCheckReport verify_eta(const ModularMatrix& m, const Complex& tau, const PrecisionContext& ctx);

/// The unique H in [1, k] with hH = -1 (mod k). Requires gcd(h, k) = 1.
std::int64_t inverse_for_transform(std::int64_t h, std::int64_t k);

/// |F(w) - e^{pi i s(h,k)} (z/k)^{1/2} exp(pi/(12z) - pi z/(12k^2)) F(w')| with
/// w = exp(2 pi i h/k - 2 pi z/k^2) and w' = exp(2 pi i H/k - 2 pi / z).
/// Requires 1 <= h <= k, gcd(h, k) = 1 and Re z > 0.
Real verify_F_transform(std::int64_t h, std::int64_t k, const Complex& z, const PrecisionContext& ctx);

}  // namespace partfn
