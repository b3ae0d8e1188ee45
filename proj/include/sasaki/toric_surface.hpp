#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sasaki/exact_lattice.hpp"

// Smooth complete toric surfaces as 2D fans: Hirzebruch fans, equivariant
// blow-ups at torus-fixed points, intersection numbers, the anticanonical
// class and Nakai ampleness on invariant curves.

namespace sasaki {

// Cyclically ordered primitive rays, counterclockwise, consecutive
// determinants +1, winding once.
struct Fan2D {
    std::vector<std::array<Int, 2>> rays;

    static Fan2D from_rays(std::vector<std::array<Int, 2>> rays);
    std::size_t size() const { return rays.size(); }
    void validate() const;

    // D_i . D_i from v_{i-1} + v_{i+1} = -(D_i . D_i) v_i.
    Int self_intersection(std::size_t i) const;

    bool operator==(const Fan2D&) const = default;
};

// Rays (1,0), (0,1), (-1,n), (0,-1); the section C is the divisor of (0,-1)
// and the fibre F the divisor of (1,0), so C.C = n, F.F = 0, C.F = 1.
Fan2D hirzebruch_fan(long long n);

// Insert v_i + v_{i+1} in the cone numbered `corner` (cyclic, 0-based).
Fan2D blow_up(const Fan2D& fan, std::size_t corner);

// Ray-basis Gram matrix (D_i . D_j): the self-intersections on the diagonal,
// 1 for adjacent rays, 0 otherwise.
IntMatrix intersection_matrix(const Fan2D& fan);

// Sum of all ray divisors, as ray-basis coefficients.
IntVec anticanonical_ray(const Fan2D& fan);

// Divisor class with ray-basis coefficients and, when the surface tracks its
// blow-up history, coordinates in the (C, F, E_1..E_k) basis.
struct DivisorClass {
    IntVec ray;
    std::optional<IntVec> cfe;
};

struct AmpleCertificate {
    bool ample = false;        // every invariant-curve pairing > 0 and square > 0
    bool square_positive = false; // the coarser check, reported side by side
    Int square;
    std::vector<std::pair<std::string, Int>> pairings; // one per ray divisor
};

AmpleCertificate is_ample(const Fan2D& fan, const IntVec& ray_coeffs);

// Hirzebruch surface S_n with k tracked blow-ups: carries the dictionary
// between ray divisors and the basis (C, F, E_1..E_k), in which the pairing
// is [[n,1],[1,0]] + (-1) on each exceptional class.
class ToricSurface {
public:
    static ToricSurface hirzebruch(long long n);
    ToricSurface blown_up(std::size_t corner) const;

    const Fan2D& fan() const { return fan_; }
    long long n() const { return n_; }
    long long k() const { return k_; }
    std::size_t b2() const { return static_cast<std::size_t>(k_) + 2; }

    IntMatrix cfe_gram() const;
    const IntMatrix& ray_to_cfe() const { return ray_to_cfe_; } // b2 x rays

    IntVec to_cfe(const IntVec& ray_coeffs) const;
    IntVec to_ray(const IntVec& cfe_coeffs) const; // one integral representative

    DivisorClass class_from_cfe(IntVec cfe_coeffs) const;
    DivisorClass anticanonical() const; // (2, -(n-2), -1, ..., -1) in (C,F,E)

    Int square(const IntVec& cfe_coeffs) const;
    Int pair_cfe(const IntVec& a, const IntVec& b) const;

    AmpleCertificate is_ample(const DivisorClass& cls) const;

    // The class C + l2 F - (E_1 + ... + E_k) driving the blow-up bundles;
    // its square is 2 l2 + n - k.
    DivisorClass special_class(const Int& l2) const;

private:
    ToricSurface(Fan2D fan, long long n, long long k, IntMatrix ray_to_cfe);

    Fan2D fan_;
    long long n_ = 0, k_ = 0;
    IntMatrix ray_to_cfe_;
};

} // namespace sasaki
