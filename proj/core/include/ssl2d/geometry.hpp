#ifndef SSL2D_GEOMETRY_HPP
#define SSL2D_GEOMETRY_HPP

#include <cmath>
#include <vector>

#include "ssl2d/error.hpp"

namespace ssl2d {

struct Point2D {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

inline double distance(const Point2D& a, const Point2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double squared_distance(const Point2D& a, const Point2D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

struct Environment {
  double width = 6.0;   // meters
  double height = 6.0;  // meters

  bool contains(const Point2D& p) const {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
  void validate() const {
    require(width > 0.0 && height > 0.0, Errc::config, "environment dimensions must be positive");
  }
};

struct MicArray {
  int id = 0;
  std::vector<Point2D> mic_positions;

  void validate() const {
    require(mic_positions.size() >= 2, Errc::config, "microphone array needs at least 2 mics");
    for (size_t i = 0; i < mic_positions.size(); ++i)
      for (size_t j = i + 1; j < mic_positions.size(); ++j)
        require(squared_distance(mic_positions[i], mic_positions[j]) > 0.0, Errc::config,
                "microphone positions within an array must be distinct");
  }
};

// Two linear 4-mic arrays centered on the midpoints of two perpendicular
// walls, facing inward, 0.1 m inter-mic spacing. Overridable in the run
// config; nothing downstream assumes this layout.
inline std::vector<MicArray> default_array_layout(const Environment& env, int n_mics = 4,
                                                  double spacing = 0.1) {
  std::vector<MicArray> arrays(2);
  const double span = spacing * (n_mics - 1);
  arrays[0].id = 0;
  arrays[1].id = 1;
  for (int m = 0; m < n_mics; ++m) {
    const double off = -span / 2.0 + spacing * m;
    arrays[0].mic_positions.push_back({env.width / 2.0 + off, 0.0});
    arrays[1].mic_positions.push_back({0.0, env.height / 2.0 + off});
  }
  return arrays;
}

}  // namespace ssl2d

#endif  // SSL2D_GEOMETRY_HPP
