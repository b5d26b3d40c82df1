#include "vrpsplit/generator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "vrpsplit/random.hpp"

namespace vrpsplit {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

} // namespace

PointSet::PointSet(std::vector<Point> points, std::string name) : name_(std::move(name)), points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].id == points_[i - 1].id) {
            throw std::invalid_argument("duplicate point id " + std::to_string(points_[i].id));
        }
    }
}

bool PointSet::contains(std::int64_t id) const {
    return std::binary_search(points_.begin(), points_.end(), Point{id, 0, 0},
                              [](const Point& a, const Point& b) { return a.id < b.id; });
}

const Point& PointSet::at(std::int64_t id) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), id,
                               [](const Point& p, std::int64_t key) { return p.id < key; });
    if (it == points_.end() || it->id != id) throw std::out_of_range("unknown point id " + std::to_string(id));
    return *it;
}

PointSet load_points(std::istream& in) {
    std::string name;
    std::optional<std::size_t> dimension;
    std::vector<Point> points;
    std::unordered_set<std::int64_t> seen;
    bool in_coords = false;
    bool saw_coords = false;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty()) continue;
        if (text == "EOF") break;

        if (!in_coords) {
            if (text.rfind("NODE_COORD_SECTION", 0) == 0) {
                in_coords = true;
                saw_coords = true;
                continue;
            }
            if (text.rfind("EDGE_WEIGHT_SECTION", 0) == 0) {
                throw ParseError("explicit edge weights are not supported", lineno);
            }
            const auto colon = text.find(':');
            if (colon == std::string::npos) throw ParseError("expected 'KEY : VALUE', got '" + text + "'", lineno);
            const std::string key = trim(text.substr(0, colon));
            const std::string value = trim(text.substr(colon + 1));
            if (key == "NAME") {
                name = value;
            } else if (key == "DIMENSION") {
                try {
                    dimension = static_cast<std::size_t>(std::stoull(value));
                } catch (const std::exception&) {
                    throw ParseError("bad DIMENSION '" + value + "'", lineno);
                }
            } else if (key == "EDGE_WEIGHT_TYPE" && value != "EUC_2D") {
                throw ParseError("unsupported EDGE_WEIGHT_TYPE " + value, lineno);
            }
            continue;
        }

        // A new section after the coordinates (e.g. DISPLAY_DATA_SECTION) ends them.
        if (std::isalpha(static_cast<unsigned char>(text.front()))) {
            in_coords = false;
            continue;
        }
        std::istringstream fields(text);
        Point p;
        std::string extra;
        if (!(fields >> p.id >> p.x >> p.y) || (fields >> extra)) {
            throw ParseError("expected 'id x y', got '" + text + "'", lineno);
        }
        if (!seen.insert(p.id).second) throw ParseError("duplicate node id " + std::to_string(p.id), lineno);
        points.push_back(p);
    }

    if (!saw_coords) throw ParseError("missing NODE_COORD_SECTION", lineno);
    if (dimension && *dimension != points.size()) {
        throw ParseError("DIMENSION " + std::to_string(*dimension) + " but " + std::to_string(points.size()) +
                             " coordinates",
                         lineno);
    }
    return PointSet(std::move(points), std::move(name));
}

PointSet load_points(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return load_points(in);
}

Tour load_tour(std::istream& in) {
    Tour tour;
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty()) continue;
        if (text == "EOF") break;
        if (std::isalpha(static_cast<unsigned char>(text.front()))) {
            // TSPLIB header lines; the ids follow TOUR_SECTION.
            header = text.rfind("TOUR_SECTION", 0) != 0;
            continue;
        }
        if (header) continue;
        std::istringstream fields(text);
        std::string token;
        while (fields >> token) {
            std::int64_t id = 0;
            try {
                std::size_t used = 0;
                id = std::stoll(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw ParseError("bad tour id '" + token + "'", lineno);
            }
            if (id == -1) return tour;
            tour.push_back(id);
        }
    }
    return tour;
}

Tour load_tour(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return load_tour(in);
}

void check_tour(const PointSet& points, const Tour& tour) {
    if (tour.size() != points.size()) {
        throw std::invalid_argument("tour has " + std::to_string(tour.size()) + " ids for " +
                                    std::to_string(points.size()) + " points");
    }
    std::unordered_set<std::int64_t> seen;
    for (std::int64_t id : tour) {
        if (!points.contains(id)) throw std::invalid_argument("tour visits unknown id " + std::to_string(id));
        if (!seen.insert(id).second) throw std::invalid_argument("tour visits id " + std::to_string(id) + " twice");
    }
}

std::int64_t choose_depot(const PointSet& points) {
    if (points.empty()) throw std::invalid_argument("cannot choose a depot among zero points");
    double cx = 0;
    double cy = 0;
    for (const Point& p : points.points()) {
        cx += p.x;
        cy += p.y;
    }
    cx /= static_cast<double>(points.size());
    cy /= static_cast<double>(points.size());

    // Points are sorted by id, so strict < keeps the smallest id on ties.
    std::int64_t best = points.points().front().id;
    double best_dist = kInfinity;
    for (const Point& p : points.points()) {
        const double d = std::sqrt((p.x - cx) * (p.x - cx) + (p.y - cy) * (p.y - cy));
        if (d < best_dist) {
            best_dist = d;
            best = p.id;
        }
    }
    return best;
}

double euclidean(const Point& a, const Point& b, Rounding rounding) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    // sqrt is correctly rounded everywhere, unlike hypot.
    const double d = std::sqrt(dx * dx + dy * dy);
    return rounding == Rounding::nearest_integer ? std::floor(d + 0.5) : d;
}

Instance build_instance(const PointSet& points, const Tour& tour, std::int64_t depot, const BuildOptions& options) {
    if (!(options.capacity > 0)) throw std::invalid_argument("capacity must be positive");
    if (options.demand.lo > options.demand.hi) throw std::invalid_argument("empty demand range");
    check_tour(points, tour);
    const auto at = std::find(tour.begin(), tour.end(), depot);
    if (at == tour.end()) throw std::invalid_argument("depot " + std::to_string(depot) + " is not on the tour");

    std::vector<std::int64_t> order;
    order.reserve(tour.size() - 1);
    order.insert(order.end(), at + 1, tour.end());
    order.insert(order.end(), tour.begin(), at);

    const Point& home = points.at(depot);
    Rng rng(options.seed);
    std::vector<Customer> customers;
    customers.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Point& here = points.at(order[i]);
        Customer c;
        c.demand = static_cast<Cost>(rng.uniform_int(options.demand.lo, options.demand.hi));
        c.dist_prev = i == 0 ? 0 : euclidean(points.at(order[i - 1]), here, options.rounding);
        c.dist_from_depot = euclidean(home, here, options.rounding);
        c.dist_to_depot = c.dist_from_depot;
        customers.push_back(c);
    }
    return Instance(std::move(customers), options.capacity, options.alpha);
}

Instance gen_random(int n, std::uint64_t seed, const RandomOptions& options) {
    if (n < 0) throw std::invalid_argument("negative instance size");
    Rng rng(seed);
    std::vector<Customer> customers(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < customers.size(); ++i) {
        Customer& c = customers[i];
        c.demand = static_cast<Cost>(rng.uniform_int(options.demand.lo, options.demand.hi));
        if (options.hard) c.demand = std::min(c.demand, std::floor(options.capacity));
        const auto prev = static_cast<Cost>(rng.uniform_int(1, options.max_distance));
        c.dist_prev = i == 0 ? 0 : prev;
        c.dist_from_depot = static_cast<Cost>(rng.uniform_int(1, options.max_distance));
        c.dist_to_depot = static_cast<Cost>(rng.uniform_int(1, options.max_distance));
    }
    return Instance(std::move(customers), options.capacity, options.alpha);
}

std::vector<Cost> capacity_grid() {
    return {1e2, 2e2, 4e2, 1e3, 2e3, 4e3, 1e4, 2e4, 4e4, 1e5};
}

} // namespace vrpsplit
