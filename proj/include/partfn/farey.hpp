#pragma once

#include "partfn/rational.hpp"

#include <cstdint>
#include <vector>

namespace partfn {

/// Reduced h/k. Farey members satisfy 0 <= h <= k; the path construction
/// also uses the shifted element (N+1)/N.
struct Fraction {
    std::int64_t h;
    std::int64_t k;

    ExactRational value() const { return ExactRational(h, k); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// b*c - a*d for a/b, c/d. Equals 1 for Farey neighbours in increasing order.
std::int64_t farey_determinant(const Fraction& left, const Fraction& right);

struct FareySequence {
    std::int64_t order;
    std::vector<Fraction> entries;
};

/// F_N grown from F_1 = [0/1, 1/1] by inserting the mediant (a+c)/(b+d)
/// between neighbours a/b, c/d whenever b + d equals the order being built.
FareySequence farey(std::int64_t order);

/// True iff every adjacent pair has determinant exactly 1.
bool farey_neighbors_check(const std::vector<Fraction>& entries);
inline bool farey_neighbors_check(const FareySequence& seq) { return farey_neighbors_check(seq.entries); }

struct FordCircle {
    Fraction frac;
    ExactComplex center;   // h/k + i/(2k^2)
    ExactRational radius;  // 1/(2k^2)
};

FordCircle ford_circle(const Fraction& frac);

enum class FordContact { tangent, disjoint };

/// Compares squared centre distance with squared radius sum exactly.
/// Throws std::invalid_argument when both circles sit on the same fraction.
FordContact ford_tangency_class(const FordCircle& a, const FordCircle& b);

/// Points where C(h,k) touches the circles of its left and right neighbours.
struct TangencyPair {
    Fraction frac;
    ExactComplex alpha1;
    ExactComplex alpha2;
    std::int64_t left_k;
    std::int64_t right_k;
};

/// Requires determinant 1 on both sides of `mid`.
TangencyPair tangency_points(const Fraction& prev, const Fraction& mid, const Fraction& next);

/// Arcs of P(N): one per member of F_N after 0/1, in increasing order. The
/// arc for 1/1 takes (N+1)/N as its right neighbour.
std::vector<TangencyPair> path(std::int64_t order);

/// Images of the arc endpoints under w = -i k^2 (tau - h/k).
struct WChord {
    ExactComplex w1;
    ExactComplex w2;
    std::int64_t k;
    std::int64_t k1;
    std::int64_t k2;
    std::int64_t order;
};

/// Requires prev, mid, next to be consecutive in F_order (the shifted
/// element (N+1)/N is accepted after 1/1).
WChord w_chord(const Fraction& prev, const Fraction& mid, const Fraction& next, std::int64_t order);

/// Chords for every arc of P(order).
std::vector<WChord> chords(std::int64_t order);

/// Endpoints and midpoint of the chord satisfy |w| <= sqrt(2) k/(N+1) and
/// Re(1/w) > 1/4, compared exactly after squaring.
bool chord_bounds_check(const WChord& chord);

/// For w on |z - 1/2| = 1/2, checks that the minor arc from 0 to w is no
/// longer than pi |w| / 2. Evaluated at 64 bits. Throws for w = 0 or w off
/// the circle.
bool arc_length_bound_check(const ExactComplex& w);

}  // namespace partfn
