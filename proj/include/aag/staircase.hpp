#pragma once

#include <cstdint>
#include <vector>

#include "aag/euclid.hpp"

namespace aag {

// (y, z) <-> L_i x_k^alpha x_{k+1}^z with y = alpha*k + i
struct StandardPoint {
    std::int64_t y = 0, z = 0;
    friend auto operator<=>(const StandardPoint&, const StandardPoint&) = default;
};

Monomial point_to_monomial(StandardPoint pt, int k);
StandardPoint monomial_to_point(const Monomial& m, int k);  // throws NotStandardForm

// phi(M(y, z)) without building the monomial
Int phi_point(StandardPoint pt, const AagParams& p);

// Two stacked rectangles:
//   0 <= y < s_mu - s_{mu+1},  0 <= z < p_{mu+1}
//   s_mu - s_{mu+1} <= y < s_mu, 0 <= z < p_{mu+1} - p_mu
struct AperySet {
    std::int64_t s_mu = 0, s_next = 0, p_mu = 0, p_next = 0;

    std::int64_t split() const { return s_mu - s_next; }
    Int size() const;
    bool contains(StandardPoint pt) const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::int64_t y = 0; y < s_mu; ++y) {
            std::int64_t zmax = y < split() ? p_next : p_next - p_mu;
            for (std::int64_t z = 0; z < zmax; ++z) f(StandardPoint{y, z});
        }
    }
    std::vector<StandardPoint> points() const;
};

AperySet apery_set(const AagParams& p, const EuclidTable& t);  // throws HypothesisViolated

// max phi over the Apery set, minus a
Int frobenius(const AagParams& p, const EuclidTable& t);

enum class Region { U, V, W, Standard };
const char* to_string(Region r) noexcept;
Region initial_region(StandardPoint pt, const EuclidTable& t);

}  // namespace aag
