#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtc/collections.hpp"
#include "dtc/laurent.hpp"
#include "dtc/stability.hpp"

namespace dtc {

// Finite quiver with vertices 1..r; loops and parallel arrows allowed.
class Quiver {
public:
    Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows);

    // `vertices <r>` followed by `arrow <i> <j>` lines; `#` starts a comment.
    static Quiver parse(std::string_view text);
    static Quiver load(const std::string& path);
    // m arrows 1 -> 2.
    static Quiver kronecker(int m);
    // One vertex with m loops.
    static Quiver loops(int m);

    int vertex_count() const { return r_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

    // chi(a, b) = a^T M b with M[i][i] = 1 - #loops(i), M[i][j] -= #arrows i -> j.
    const std::vector<std::vector<int>>& euler_matrix() const { return euler_; }
    long long euler_form(const DimVector& a, const DimVector& b) const;
    SkewForm skew_form() const;
    // sum over arrows i -> j of gamma_i gamma_j
    long long representation_dimension(const DimVector& gamma) const;

private:
    int r_;
    std::vector<std::pair<int, int>> arrows_;
    std::vector<std::vector<int>> euler_;
};

// Virtual Poincare polynomial of GL_n: prod_{k<n} (y^(2n) - y^(2k)); 1 for n = 0.
LaurentPoly poincare_gl(int n);

// A(gamma) = (-y)^chi(gamma,gamma) y^(2 dim R(Q,gamma)) / prod_i P(GL_{gamma_i}).
OneCollection stacky_A(const Quiver& q);

} // namespace dtc
