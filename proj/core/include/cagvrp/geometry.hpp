#ifndef CAGVRP_GEOMETRY_HPP
#define CAGVRP_GEOMETRY_HPP

#include <cmath>

namespace cagvrp {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double euclid(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace cagvrp

#endif
