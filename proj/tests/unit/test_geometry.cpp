#include <doctest.h>

#include <vector>

#include "planembed/geometry.hpp"

using namespace planembed;

TEST_CASE("orientation sign follows turn direction") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) > 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) < 0);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
}

TEST_CASE("segment distances") {
  CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
  CHECK(point_segment_distance({3, 0}, {-1, 0}, {1, 0}) == doctest::Approx(2.0));
  CHECK(segment_segment_distance({0, 0}, {2, 2}, {0, 2}, {2, 0}) == 0.0);
  CHECK(segment_segment_distance({0, 0}, {1, 0}, {0, 1}, {1, 1}) == doctest::Approx(1.0));
  CHECK(segment_segment_distance({0, 0}, {1, 0}, {1, 0}, {2, 5}) == 0.0);
}

TEST_CASE("polygon helpers") {
  const std::vector<Point> square{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  CHECK(signed_area(square) == doctest::Approx(4.0));
  const std::vector<Point> reversed(square.rbegin(), square.rend());
  CHECK(signed_area(reversed) == doctest::Approx(-4.0));
  CHECK(point_in_polygon({1, 1}, square));
  CHECK_FALSE(point_in_polygon({3, 1}, square));
  CHECK(point_polygon_boundary_distance({1, 0.5}, square) == doctest::Approx(0.5));
  CHECK(diameter(square) == doctest::Approx(std::sqrt(8.0)));
  CHECK(diameter(std::vector<Point>{{1, 1}}) == 0.0);
}
