#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vrpsplit/instance.hpp"

namespace vrpsplit {

struct Point {
    std::int64_t id = 0;
    double x = 0;
    double y = 0;
};

class PointSet {
public:
    PointSet() = default;
    // Throws std::invalid_argument on duplicate ids.
    explicit PointSet(std::vector<Point> points, std::string name = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const std::vector<Point>& points() const noexcept { return points_; }

    bool contains(std::int64_t id) const;
    // Throws std::out_of_range for unknown ids.
    const Point& at(std::int64_t id) const;

private:
    std::string name_;
    std::vector<Point> points_; // sorted by id
};

using Tour = std::vector<std::int64_t>;

// TSPLIB subset: NAME, DIMENSION, EDGE_WEIGHT_TYPE (EUC_2D only) and
// NODE_COORD_SECTION. Other header keys are ignored.
PointSet load_points(std::istream& in);
PointSet load_points(const std::filesystem::path& path);

// Whitespace-separated ids, ending at EOF, -1 or EOF keyword. A TSPLIB header
// up to TOUR_SECTION is skipped.
Tour load_tour(std::istream& in);
Tour load_tour(const std::filesystem::path& path);

// Throws std::invalid_argument unless the tour visits every point once.
void check_tour(const PointSet& points, const Tour& tour);

// Point closest to the barycenter; ties go to the smallest id.
std::int64_t choose_depot(const PointSet& points);

enum class Rounding { nearest_integer, none };

struct DemandSpec {
    std::int64_t lo = 1;
    std::int64_t hi = 50;
};

struct BuildOptions {
    Cost capacity = 100;
    Cost alpha = 0;
    std::uint64_t seed = 1;
    DemandSpec demand;
    Rounding rounding = Rounding::nearest_integer;
};

double euclidean(const Point& a, const Point& b, Rounding rounding);

// Rotates the tour to start right after the depot, drops the depot, and
// draws one integer demand per customer in tour order.
Instance build_instance(const PointSet& points, const Tour& tour, std::int64_t depot, const BuildOptions& options);

struct RandomOptions {
    DemandSpec demand;
    Cost capacity = 100;
    Cost alpha = 0;
    // Clamp demands to the capacity so the instance passes hard validation.
    bool hard = true;
    std::int64_t max_distance = 100;
};

// Seeded instance with integer distances uniform in [1, max_distance].
Instance gen_random(int n, std::uint64_t seed, const RandomOptions& options = {});

// Capacities of the experimental sweep: 1e2, 2e2, 4e2, 1e3, ... 4e4, 1e5.
std::vector<Cost> capacity_grid();

// A single vehicle already carries everything when total demand <= capacity;
// such pairs are dropped from benchmarks.
inline bool capacity_is_trivial(Cost total_demand, Cost capacity) { return total_demand <= capacity; }

} // namespace vrpsplit
