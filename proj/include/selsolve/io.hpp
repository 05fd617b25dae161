#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "selsolve/linear_system.hpp"
#include "selsolve/lsss.hpp"

namespace selsolve {

// Sparse system files:
//
//   m n                 equations, unknowns
//   i j num[/den]       1-based row and column; column 0 holds the constant
//   ...
//   0 0 0               terminator
//
// Entries are ordered by row, then column. Column j is the j-th unknown of
// the sorted universe; the optional "<file>.names" sidecar lists
// "j kind index name" per column. Without a sidecar, column j is c_{j-1}.
// Lines starting with '%' are comments.

void write_system(const LinearSystem& system, std::ostream& out);
void write_name_map(const std::vector<UnknownId>& universe, std::ostream& out);
/// Writes the system and its sidecar, each atomically.
void write_system(const LinearSystem& system, const std::filesystem::path& path);

/// Throws ParseError (with line number) or BoundsError.
LinearSystem read_system(std::istream& in, const std::vector<UnknownId>* names = nullptr);
std::vector<UnknownId> read_name_map(std::istream& in);
/// Reads the sidecar too when it exists.
LinearSystem read_system(const std::filesystem::path& path);

std::filesystem::path name_map_path(const std::filesystem::path& system_path);

// Solution files: sections ZEROS, PIVOTS ("name = affine-expr") and FREE, each
// sorted by unknown.

void write_solution(const SolutionState& state, std::ostream& out);
void write_solution(const SolutionState& state, const std::filesystem::path& path);
SolutionState read_solution(std::istream& in);
SolutionState read_solution(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over path.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace selsolve
