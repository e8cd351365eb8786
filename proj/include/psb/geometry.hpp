#pragma once

#include <optional>

#include "psb/exact.hpp"

namespace psb {

// Line alpha*x + beta*y + gamma = 0, tagged with the bundle it belongs to.
struct Line {
    Quad alpha, beta, gamma;
    int bundle = 0;           // 1-based bundle id, 0 for free-standing lines
    int index_in_bundle = 0;  // 1..m

    bool is_vertical() const { return beta.is_zero(); }
    // Value of alpha*x + beta*y + gamma at a point.
    Quad eval(const Quad& x, const Quad& y) const { return alpha * x + beta * y + gamma; }
};

struct Point {
    Quad x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    std::string key() const {
        std::string out;
        out.reserve(64);
        x.append_key(out);
        y.append_key(out);
        return out;
    }
};

// Parallel strip { p : lo <= alpha*x + beta*y <= hi } where lo/hi come from
// the two bounding lines' gammas (membership is closed).
struct Strip {
    Quad alpha, beta;
    Quad lo_gamma, hi_gamma;  // gammas of the two bounding lines
};

enum class Side { inside, on_boundary, outside };

// Cross of the direction normals; zero iff parallel.
Quad line_cross(const Line& a, const Line& b);

bool parallel(const Line& a, const Line& b);
bool same_line(const Line& a, const Line& b);

// Exact intersection point; nullopt iff parallel; identical lines are an error.
std::optional<Point> intersect(const Line& a, const Line& b);

// Area of the triangle bounded by three pairwise nonparallel lines; 0 when
// the lines are concurrent. Any parallel pair is an error.
Quad triangle_area(const Line& l1, const Line& l2, const Line& l3);

// Area of the parallelogram bounded by li || lj and lg || lh.
Quad parallelogram_area(const Line& li, const Line& lj, const Line& lg, const Line& lh);

Side strip_side(const Strip& s, const Point& p);

}  // namespace psb
