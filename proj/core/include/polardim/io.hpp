#ifndef POLARDIM_IO_HPP
#define POLARDIM_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "polardim/adjacency.hpp"

namespace polardim {

/// Shortest round-trip decimal rendering (std::to_chars); the same
/// double always prints the same bytes, which keeps reports and tables
/// reproducible.
std::string format_double(double x);

/// Loads a bare edge list ("src<TAB>dst" per line; any run of blanks
/// separates the two ids). Ids are opaque strings, indexed in
/// first-appearance order and retained as node labels. Malformed lines
/// raise InputError naming the line; an empty file is an error.
SparseAdjacency load_edge_list(std::istream& in, bool directed);
SparseAdjacency load_edge_list(const std::filesystem::path& path, bool directed);

/// Dumps the network as a sorted edge list (each undirected edge once,
/// smaller index first) for reproducibility diffs. Labels are used when
/// present, bare indices otherwise.
void write_edge_list(std::ostream& out, const SparseAdjacency& a);

/// FNV-1a 64-bit digest of a file's bytes, formatted "fnv1a64:<hex>".
/// Used to stamp reports with the identity of their input.
std::string file_digest(const std::filesystem::path& path);

}  // namespace polardim

#endif  // POLARDIM_IO_HPP
