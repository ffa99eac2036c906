#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ucalc/measure.hpp"

namespace ucalc {

/// Parses an algebra description such as "real", "ranking z" or
/// "cumulative q" (separators: space, '-' or ':'; the group defaults to
/// the integers).
Algebra parse_algebra_spec(std::string_view spec);

/// Inverse of parse_algebra_spec, e.g. "cumulative z".
std::string algebra_spec(const Algebra& alg);

/// Reads the line-based measure format: an `algebra` header, an optional
/// `atoms` line introducing an assignment space, one `<world-id> <value>`
/// line per world, and an optional trailing `normalize` directive for
/// unnormalized input.  '#' starts a comment.
QuasiMeasure read_measure(std::istream& in);
QuasiMeasure load_measure(const std::filesystem::path& path);

void write_measure(std::ostream& out, const QuasiMeasure& m);

/// Writes atomically: temp file in the same directory, then rename.
void save_measure(const std::filesystem::path& path, const QuasiMeasure& m);

/// Reads the partition format: an `algebra` header (ranking), a `worlds`
/// or `atoms` line introducing the space, and one
/// `block <value> <world-id>...` line per block.
PartitionMeasure read_partition(std::istream& in);
PartitionMeasure load_partition(const std::filesystem::path& path);

}  // namespace ucalc
