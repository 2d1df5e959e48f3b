#include "polardim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "polardim/error.hpp"

namespace polardim {

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

SparseAdjacency load_edge_list(std::istream& in, bool directed) {
  std::unordered_map<std::string, NodeIndex> index_of;
  std::vector<std::string> labels;
  std::vector<EdgePair> pairs;
  auto intern = [&](std::string user) {
    auto [it, inserted] = index_of.emplace(std::move(user), static_cast<NodeIndex>(labels.size()));
    if (inserted) labels.push_back(it->first);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const std::size_t start = line.find_first_not_of(" \t", pos);
      if (start == std::string::npos) break;
      const std::size_t stop = line.find_first_of(" \t", start);
      tokens.push_back(line.substr(start, stop - start));
      pos = stop == std::string::npos ? line.size() : stop;
    }
    if (tokens.size() != 2) {
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": expected two ids, got " + std::to_string(tokens.size()));
    }
    const NodeIndex s = intern(std::move(tokens[0]));
    const NodeIndex t = intern(std::move(tokens[1]));
    pairs.emplace_back(s, t);
  }
  if (labels.empty()) throw InputError("edge list contains no edges");
  return SparseAdjacency::from_pairs(labels.size(), std::move(pairs), directed,
                                     std::move(labels));
}

SparseAdjacency load_edge_list(const std::filesystem::path& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list: " + path.string());
  return load_edge_list(in, directed);
}

void write_edge_list(std::ostream& out, const SparseAdjacency& a) {
  const bool labelled = !a.node_labels().empty();
  a.for_each_entry([&](NodeIndex u, NodeIndex v) {
    if (!a.directed() && u > v) return;
    if (labelled) {
      out << a.node_labels()[u] << '\t' << a.node_labels()[v] << '\n';
    } else {
      out << u << '\t' << v << '\n';
    }
  });
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input: " + path.string());

  std::uint64_t hash = 0xCBF29CE484222325ull;
  char buffer[1 << 16];
  while (in) {
    in.read(buffer, sizeof(buffer));
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001B3ull;
    }
  }

  char hex[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 0; i < 16; ++i) {
    hex[15 - i] = digits[(hash >> (4 * i)) & 0xF];
  }
  hex[16] = '\0';
  return std::string("fnv1a64:") + hex;
}

}  // namespace polardim
