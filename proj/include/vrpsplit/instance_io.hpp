#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "vrpsplit/instance.hpp"

namespace vrpsplit {

// Line-oriented text format, '#' starts a comment:
//
//   SPLIT 1
//   n capacity alpha
//   demand dist_prev dist_from_depot dist_to_depot     (n lines, tour order)
//
// Numbers are written in shortest round-trip form, so write/read is lossless.
Instance read_instance(std::istream& in);
Instance read_instance(const std::filesystem::path& path);

void write_instance(std::ostream& out, const Instance& inst);
void write_instance(const std::filesystem::path& path, const Instance& inst);

std::string format_number(double value);

} // namespace vrpsplit
