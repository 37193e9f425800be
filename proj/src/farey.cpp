#include "partfn/farey.hpp"

#include "partfn/precision.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace partfn {

namespace {

std::string show(const Fraction& f) { return std::to_string(f.h) + "/" + std::to_string(f.k); }

void require_neighbours(const Fraction& prev, const Fraction& mid, const Fraction& next) {
    if (farey_determinant(prev, mid) != 1 || farey_determinant(mid, next) != 1) {
        throw std::invalid_argument("not consecutive Farey fractions: " + show(prev) + ", " + show(mid) + ", " +
                                    show(next));
    }
}

ExactRational q(std::int64_t num, std::int64_t den) { return ExactRational(num, den); }

}  // namespace

std::int64_t farey_determinant(const Fraction& left, const Fraction& right) {
    return left.k * right.h - left.h * right.k;
}

FareySequence farey(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("farey: order must be >= 1");
    std::vector<Fraction> current{{0, 1}, {1, 1}};
    for (std::int64_t n = 2; n <= order; ++n) {
        std::vector<Fraction> next;
        next.reserve(current.size() * 2);
        for (std::size_t i = 0; i + 1 < current.size(); ++i) {
            const Fraction& a = current[i];
            const Fraction& c = current[i + 1];
            next.push_back(a);
            if (a.k + c.k == n) next.push_back({a.h + c.h, n});
        }
        next.push_back(current.back());
        current = std::move(next);
    }
    return {order, std::move(current)};
}

bool farey_neighbors_check(const std::vector<Fraction>& entries) {
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (farey_determinant(entries[i], entries[i + 1]) != 1) return false;
    }
    return true;
}

FordCircle ford_circle(const Fraction& frac) {
    if (frac.k < 1) throw std::invalid_argument("ford_circle: denominator must be positive");
    const ExactRational radius = q(1, 2 * frac.k * frac.k);
    return {frac, {frac.value(), radius}, radius};
}

FordContact ford_tangency_class(const FordCircle& a, const FordCircle& b) {
    if (a.frac.value() == b.frac.value()) throw std::invalid_argument("ford_tangency_class: identical circles");
    const ExactComplex delta = a.center - b.center;
    const ExactRational radius_sum = a.radius + b.radius;
    const ExactRational d2 = delta.norm_squared();
    const ExactRational s2 = radius_sum * radius_sum;
    if (d2 == s2) return FordContact::tangent;
    if (d2 > s2) return FordContact::disjoint;
    // D^2 - S^2 = ((bc - ad)^2 - 1)/(b^2 d^2) >= 0 for distinct reduced fractions.
    throw std::logic_error("ford_tangency_class: overlapping Ford circles for " + show(a.frac) + " and " +
                           show(b.frac));
}

TangencyPair tangency_points(const Fraction& prev, const Fraction& mid, const Fraction& next) {
    require_neighbours(prev, mid, next);
    const std::int64_t k = mid.k;
    const std::int64_t k1 = prev.k;
    const std::int64_t k2 = next.k;
    const std::int64_t left_norm = k * k + k1 * k1;
    const std::int64_t right_norm = k * k + k2 * k2;
    const ExactRational centre = mid.value();
    return {
        mid,
        {centre - q(k1, k * left_norm), q(1, left_norm)},
        {centre + q(k2, k * right_norm), q(1, right_norm)},
        k1,
        k2,
    };
}

std::vector<TangencyPair> path(std::int64_t order) {
    const FareySequence seq = farey(order);
    const auto& e = seq.entries;
    std::vector<TangencyPair> arcs;
    arcs.reserve(e.size() - 1);
    for (std::size_t j = 1; j < e.size(); ++j) {
        const Fraction next = j + 1 < e.size() ? e[j + 1] : Fraction{order + 1, order};
        arcs.push_back(tangency_points(e[j - 1], e[j], next));
    }
    return arcs;
}

WChord w_chord(const Fraction& prev, const Fraction& mid, const Fraction& next, std::int64_t order) {
    require_neighbours(prev, mid, next);
    const std::int64_t k = mid.k;
    const std::int64_t k1 = prev.k;
    const std::int64_t k2 = next.k;
    // Consecutive in F_N iff max(b, d) <= N <= b + d - 1.
    if (std::max({k, k1, k2}) > order || order > k + k1 - 1 || order > k + k2 - 1) {
        throw std::invalid_argument("w_chord: " + show(prev) + ", " + show(mid) + ", " + show(next) +
                                    " are not consecutive in F_" + std::to_string(order));
    }
    const std::int64_t left_norm = k * k + k1 * k1;
    const std::int64_t right_norm = k * k + k2 * k2;
    return {
        {q(k * k, left_norm), q(k * k1, left_norm)},
        {q(k * k, right_norm), q(-k * k2, right_norm)},
        k,
        k1,
        k2,
        order,
    };
}

std::vector<WChord> chords(std::int64_t order) {
    const FareySequence seq = farey(order);
    const auto& e = seq.entries;
    std::vector<WChord> out;
    out.reserve(e.size() - 1);
    for (std::size_t j = 1; j < e.size(); ++j) {
        const Fraction next = j + 1 < e.size() ? e[j + 1] : Fraction{order + 1, order};
        out.push_back(w_chord(e[j - 1], e[j], next, order));
    }
    return out;
}

bool chord_bounds_check(const WChord& chord) {
    const ExactComplex midpoint{(chord.w1.re + chord.w2.re) / ExactRational(2L),
                                (chord.w1.im + chord.w2.im) / ExactRational(2L)};
    const ExactRational max_norm2 = q(2 * chord.k * chord.k, (chord.order + 1) * (chord.order + 1));
    for (const ExactComplex* w : {&chord.w1, &chord.w2, &midpoint}) {
        const ExactRational norm2 = w->norm_squared();
        if (norm2 == ExactRational(0L)) return false;
        if (norm2 > max_norm2) return false;
        // Re(1/w) = Re w / |w|^2 > 1/4
        if (!(ExactRational(4L) * w->re > norm2)) return false;
    }
    return true;
}

bool arc_length_bound_check(const ExactComplex& w) {
    const ExactRational half = q(1, 2);
    const ExactRational off = w.re - half;
    if (off * off + w.im * w.im != q(1, 4)) {
        throw std::invalid_argument("arc_length_bound_check: w is not on |z - 1/2| = 1/2");
    }
    if (w.norm_squared() == ExactRational(0L)) throw std::invalid_argument("arc_length_bound_check: w = 0");

    constexpr unsigned bits = 64;
    // w = (1 + e^{i theta})/2 with theta in [0, pi] after reflecting Im w.
    const Real cos_theta = Real(w.re.get(), bits) * 2L - Real(1L, bits);
    const Real sin_theta = abs(Real(w.im.get(), bits) * 2L);
    const Real theta = atan2(sin_theta, cos_theta);
    const Real arc = (pi(bits) - theta) / 2L;
    const Real modulus = sqrt(Real(w.norm_squared().get(), bits));
    const Real bound = pi(bits) * modulus / 2L;
    // Equality holds at w = 1; allow a few ulps.
    return arc <= bound * (Real(1L, bits) + exp2i(-58, bits));
}

}  // namespace partfn
