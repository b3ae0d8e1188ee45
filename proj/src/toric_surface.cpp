#include "sasaki/toric_surface.hpp"

namespace sasaki {

namespace {

Int det2(const std::array<Int, 2>& u, const std::array<Int, 2>& v) {
    return u[0] * v[1] - u[1] * v[0];
}

} // namespace

Fan2D Fan2D::from_rays(std::vector<std::array<Int, 2>> rays) {
    Fan2D f{std::move(rays)};
    f.validate();
    return f;
}

void Fan2D::validate() const {
    if (rays.size() < 3)
        fail("toric_surface", "InvalidFan", "a complete fan needs at least 3 rays");
    for (const auto& v : rays) {
        if (v[0] == 0 && v[1] == 0)
            fail("toric_surface", "InvalidFan", "zero ray");
        if (gcd(v[0], v[1]) != 1)
            fail("toric_surface", "InvalidFan", "rays must be primitive");
    }
    const std::size_t r = rays.size();
    for (std::size_t i = 0; i < r; ++i)
        if (det2(rays[i], rays[(i + 1) % r]) != 1)
            fail("toric_surface", "InvalidFan",
                 "consecutive rays must span a unimodular cone (det +1)");
    // Sum of self-intersections is 12 - 3r exactly when the rays wind once.
    Int sum = 0;
    for (std::size_t i = 0; i < r; ++i) sum += self_intersection(i);
    if (sum != Int(12) - Int(3) * Int(r))
        fail("toric_surface", "InvalidFan", "rays do not wind around the origin once");
}

Int Fan2D::self_intersection(std::size_t i) const {
    const std::size_t r = rays.size();
    const auto& prev = rays[(i + r - 1) % r];
    const auto& next = rays[(i + 1) % r];
    const auto& v = rays[i];
    // prev + next = -c * v with v primitive
    Int sx = prev[0] + next[0], sy = prev[1] + next[1];
    Int c;
    if (v[0] != 0) c = -sx / v[0];
    else c = -sy / v[1];
    if (sx != -c * v[0] || sy != -c * v[1])
        fail("toric_surface", "InvalidFan", "adjacent rays are not unimodular around ray " +
                                                std::to_string(i));
    return c;
}

Fan2D hirzebruch_fan(long long n) {
    if (n < 0) fail("toric_surface", "InvalidFan", "Hirzebruch parameter must be >= 0");
    return Fan2D::from_rays({{Int(1), Int(0)},
                             {Int(0), Int(1)},
                             {Int(-1), Int(n)},
                             {Int(0), Int(-1)}});
}

Fan2D blow_up(const Fan2D& fan, std::size_t corner) {
    fan.validate();
    if (corner >= fan.size())
        fail("toric_surface", "BadCorner",
             "corner " + std::to_string(corner) + " out of range for " +
                 std::to_string(fan.size()) + " rays");
    const std::size_t r = fan.size();
    const auto& a = fan.rays[corner];
    const auto& b = fan.rays[(corner + 1) % r];
    std::array<Int, 2> mid{a[0] + b[0], a[1] + b[1]};
    std::vector<std::array<Int, 2>> rays = fan.rays;
    rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(corner) + 1, mid);
    return Fan2D::from_rays(std::move(rays));
}

IntMatrix intersection_matrix(const Fan2D& fan) {
    fan.validate();
    const std::size_t r = fan.size();
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        g.at(i, i) = fan.self_intersection(i);
        g.at(i, (i + 1) % r) = 1;
        g.at((i + 1) % r, i) = 1;
    }
    return g;
}

IntVec anticanonical_ray(const Fan2D& fan) {
    return IntVec(std::vector<Int>(fan.size(), Int(1)), "ray");
}

AmpleCertificate is_ample(const Fan2D& fan, const IntVec& ray_coeffs) {
    IntMatrix g = intersection_matrix(fan);
    if (ray_coeffs.size() != fan.size())
        fail("toric_surface", "DimensionMismatch", "class length differs from ray count");
    AmpleCertificate cert;
    IntVec pair = g * ray_coeffs;
    bool all_positive = true;
    for (std::size_t i = 0; i < fan.size(); ++i) {
        cert.pairings.emplace_back("D" + std::to_string(i + 1), pair[i]);
        if (pair[i] <= 0) all_positive = false;
    }
    cert.square = dot(ray_coeffs, pair);
    cert.square_positive = cert.square > 0;
    cert.ample = all_positive && cert.square_positive;
    return cert;
}

ToricSurface::ToricSurface(Fan2D fan, long long n, long long k, IntMatrix ray_to_cfe)
    : fan_(std::move(fan)), n_(n), k_(k), ray_to_cfe_(std::move(ray_to_cfe)) {}

ToricSurface ToricSurface::hirzebruch(long long n) {
    Fan2D fan = hirzebruch_fan(n);
    // Columns are the (C, F) coordinates of the four ray divisors:
    // D1 = F, D2 = C - nF, D3 = F, D4 = C.
    IntMatrix t(2, 4);
    t.at(0, 1) = 1;
    t.at(1, 1) = -n;
    t.at(1, 0) = 1;
    t.at(1, 2) = 1;
    t.at(0, 3) = 1;
    return ToricSurface(std::move(fan), n, 0, std::move(t));
}

ToricSurface ToricSurface::blown_up(std::size_t corner) const {
    Fan2D next = blow_up(fan_, corner);
    const std::size_t r = fan_.size();
    const std::size_t b2_old = b2();
    // New basis row for the exceptional class; the two adjacent divisors
    // become proper transforms (old class minus E), the rest pull back.
    IntMatrix t(b2_old + 1, r + 1);
    for (std::size_t j = 0; j <= r; ++j) {
        if (j == corner + 1) { // the inserted ray
            t.at(b2_old, j) = 1;
            continue;
        }
        const std::size_t old_j = j <= corner ? j : j - 1;
        for (std::size_t i = 0; i < b2_old; ++i) t.at(i, j) = ray_to_cfe_.at(i, old_j);
        if (old_j == corner || old_j == (corner + 1) % r) t.at(b2_old, j) = -1;
    }
    return ToricSurface(std::move(next), n_, k_ + 1, std::move(t));
}

IntMatrix ToricSurface::cfe_gram() const {
    IntMatrix g(b2(), b2());
    g.at(0, 0) = n_;
    g.at(0, 1) = 1;
    g.at(1, 0) = 1;
    for (std::size_t i = 2; i < b2(); ++i) g.at(i, i) = -1;
    return g;
}

IntVec ToricSurface::to_cfe(const IntVec& ray_coeffs) const {
    IntVec v = ray_to_cfe_ * ray_coeffs;
    v.basis_label = "cfe";
    return v;
}

IntVec ToricSurface::to_ray(const IntVec& cfe_coeffs) const {
    IntVec v = right_inverse(ray_to_cfe_) * cfe_coeffs;
    v.basis_label = "ray";
    return v;
}

DivisorClass ToricSurface::class_from_cfe(IntVec cfe_coeffs) const {
    if (cfe_coeffs.size() != b2())
        fail("toric_surface", "DimensionMismatch", "class length differs from b2");
    cfe_coeffs.basis_label = "cfe";
    DivisorClass c;
    c.ray = to_ray(cfe_coeffs);
    c.cfe = std::move(cfe_coeffs);
    return c;
}

DivisorClass ToricSurface::anticanonical() const {
    DivisorClass c;
    c.ray = anticanonical_ray(fan_);
    c.cfe = to_cfe(c.ray);
    return c;
}

Int ToricSurface::pair_cfe(const IntVec& a, const IntVec& b) const {
    return dot(a, cfe_gram() * b);
}

Int ToricSurface::square(const IntVec& cfe_coeffs) const {
    return pair_cfe(cfe_coeffs, cfe_coeffs);
}

AmpleCertificate ToricSurface::is_ample(const DivisorClass& cls) const {
    return sasaki::is_ample(fan_, cls.ray);
}

DivisorClass ToricSurface::special_class(const Int& l2) const {
    if (l2 < 1) fail("toric_surface", "InvalidClass", "l2 must be a positive integer");
    std::vector<Int> c(b2(), Int(-1));
    c[0] = 1;
    c[1] = l2;
    return class_from_cfe(IntVec(std::move(c), "cfe"));
}

} // namespace sasaki
