#include "psb/geometry.hpp"

namespace psb {

Quad line_cross(const Line& a, const Line& b) {
    return a.alpha * b.beta - a.beta * b.alpha;
}

bool parallel(const Line& a, const Line& b) {
    return line_cross(a, b).is_zero();
}

bool same_line(const Line& a, const Line& b) {
    if (!parallel(a, b)) return false;
    // Proportional gammas as well: (alpha,beta,gamma) rows are dependent.
    Quad c1 = a.alpha * b.gamma - a.gamma * b.alpha;
    Quad c2 = a.beta * b.gamma - a.gamma * b.beta;
    return c1.is_zero() && c2.is_zero();
}

std::optional<Point> intersect(const Line& a, const Line& b) {
    Quad d = line_cross(a, b);
    if (d.is_zero()) {
        if (same_line(a, b)) throw arithmetic_error("intersect called on identical lines");
        return std::nullopt;
    }
    // Cramer on alpha*x + beta*y = -gamma.
    Quad x = (a.beta * b.gamma - b.beta * a.gamma) / d;
    Quad y = (b.alpha * a.gamma - a.alpha * b.gamma) / d;
    return Point{x, y};
}

Quad triangle_area(const Line& l1, const Line& l2, const Line& l3) {
    Quad c3 = line_cross(l1, l2);
    Quad c2 = line_cross(l1, l3);
    Quad c1 = line_cross(l2, l3);
    if (c1.is_zero() || c2.is_zero() || c3.is_zero())
        throw arithmetic_error("triangle_area needs pairwise nonparallel lines");
    Quad det = l1.alpha * (l2.beta * l3.gamma - l2.gamma * l3.beta) -
               l1.beta * (l2.alpha * l3.gamma - l2.gamma * l3.alpha) + l1.gamma * c1;
    if (det.is_zero()) return Quad(0);  // concurrent
    Quad denom = c1 * c2 * c3;
    return (det * det / (Quad(2) * denom)).abs();
}

Quad parallelogram_area(const Line& li, const Line& lj, const Line& lg, const Line& lh) {
    if (!parallel(li, lj) || !parallel(lg, lh))
        throw arithmetic_error("parallelogram_area wants two parallel pairs");
    Quad cross = line_cross(li, lg);
    if (cross.is_zero())
        throw arithmetic_error("parallelogram_area wants two distinct directions");
    // Rescale the second line of each pair onto the first pair's (alpha,beta).
    auto gamma_in_frame = [](const Line& base, const Line& other) {
        Quad lambda = base.alpha.is_zero() ? other.beta / base.beta : other.alpha / base.alpha;
        return other.gamma / lambda;
    };
    Quad d1 = gamma_in_frame(li, lj) - li.gamma;
    Quad d2 = gamma_in_frame(lg, lh) - lg.gamma;
    return ((d1 * d2) / cross).abs();
}

Side strip_side(const Strip& s, const Point& p) {
    Quad v = s.alpha * p.x + s.beta * p.y;
    Quad g1 = -s.lo_gamma, g2 = -s.hi_gamma;
    Quad lo = g1 < g2 ? g1 : g2;
    Quad hi = g1 < g2 ? g2 : g1;
    if (v < lo || v > hi) return Side::outside;
    if (v == lo || v == hi) return Side::on_boundary;
    return Side::inside;
}

}  // namespace psb
