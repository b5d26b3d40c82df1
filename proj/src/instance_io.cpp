#include "vrpsplit/instance_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace vrpsplit {

namespace {

// Next non-blank line with comments stripped; false at end of input.
bool next_content_line(std::istream& in, std::string& content, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            content = line;
            return true;
        }
    }
    return false;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

double parse_number(const std::string& token, int lineno) {
    double value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ParseError("not a number: '" + token + "'", lineno);
    return value;
}

} // namespace

std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    // Integral values print without an exponent so that 1e5 reads "100000".
    const bool integral = std::abs(value) < 1e15 && value == std::floor(value);
    auto [ptr, ec] = integral ? std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed)
                              : std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

Instance read_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError("empty input, expected 'SPLIT 1'", lineno);
    const auto magic = tokens(line);
    if (magic.size() != 2 || magic[0] != "SPLIT") throw ParseError("expected 'SPLIT 1' header", lineno);
    if (magic[1] != "1") throw ParseError("unsupported format version " + magic[1], lineno);

    if (!next_content_line(in, line, lineno)) throw ParseError("missing 'n capacity alpha' line", lineno + 1);
    const auto head = tokens(line);
    if (head.size() != 3) throw ParseError("expected 3 fields 'n capacity alpha'", lineno);
    const double n_value = parse_number(head[0], lineno);
    if (n_value < 0 || n_value != std::floor(n_value) || n_value > 1e9) {
        throw ParseError("customer count must be a nonnegative integer", lineno);
    }
    const int n = static_cast<int>(n_value);
    const double capacity = parse_number(head[1], lineno);
    const double alpha = parse_number(head[2], lineno);

    std::vector<Customer> customers;
    customers.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (!next_content_line(in, line, lineno)) {
            throw ParseError("missing customer line " + std::to_string(i) + " of " + std::to_string(n), lineno + 1);
        }
        const auto f = tokens(line);
        if (f.size() != 4) {
            throw ParseError("customer " + std::to_string(i) + ": expected 4 fields, got " + std::to_string(f.size()),
                             lineno);
        }
        customers.push_back({parse_number(f[0], lineno), parse_number(f[1], lineno), parse_number(f[2], lineno),
                             parse_number(f[3], lineno)});
    }
    if (next_content_line(in, line, lineno)) throw ParseError("unexpected content after customer lines", lineno);
    return Instance(std::move(customers), capacity, alpha);
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string(), 0);
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << "SPLIT 1\n";
    out << inst.size() << ' ' << format_number(inst.capacity()) << ' ' << format_number(inst.alpha()) << '\n';
    for (const Customer& c : inst.customers()) {
        out << format_number(c.demand) << ' ' << format_number(c.dist_prev) << ' '
            << format_number(c.dist_from_depot) << ' ' << format_number(c.dist_to_depot) << '\n';
    }
}

void write_instance(const std::filesystem::path& path, const Instance& inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_instance(out, inst);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

} // namespace vrpsplit
