#ifndef POLARDIM_RECORDS_HPP
#define POLARDIM_RECORDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polardim/adjacency.hpp"

namespace polardim {

enum class InteractionKind { mention, reply, quote, retweet, other };

std::optional<InteractionKind> parse_kind(std::string_view token);
const char* to_string(InteractionKind kind);

/// One user-to-user interaction.
struct InteractionRecord {
  std::string source_user;
  std::string target_user;
  InteractionKind kind = InteractionKind::other;
  std::int64_t timestamp = 0;  // UTC seconds
};

/// Mentions, replies and quotes; retweets are excluded by default so the
/// network stays focused on direct conversation.
std::vector<InteractionKind> default_included_kinds();

/// Half-open time window [start, end) with the interaction kinds it
/// admits.
struct WindowSpec {
  std::string label;
  std::int64_t start = 0;  // inclusive
  std::int64_t end = 0;    // exclusive
  std::vector<InteractionKind> include_kinds = default_included_kinds();

  bool includes(InteractionKind kind) const;
  bool contains(std::int64_t timestamp) const { return timestamp >= start && timestamp < end; }
};

/// Malformed input lines are counted and sampled, never silently
/// dropped.
struct RejectReport {
  std::size_t malformed = 0;
  std::vector<std::string> samples;  // "line N: reason", capped
};

struct ParsedRecords {
  std::vector<InteractionRecord> records;
  RejectReport rejects;
};

/// Parses line-delimited interaction records. The format is
/// auto-detected from the first non-empty line: a leading '{' selects
/// one-JSON-object-per-line (keys source_user, target_user, kind,
/// timestamp), anything else selects tab-separated
/// "source<TAB>target<TAB>kind<TAB>timestamp".
ParsedRecords parse_records(std::istream& in);
ParsedRecords load_records(const std::filesystem::path& path);

/// Builds the communication network of one window: nodes are the users
/// appearing in at least one admitted record, edges come from the
/// admitted interactions (self-interactions never create loops).
/// Node labels are retained for traceability. Throws EmptyWindowError if
/// nothing falls inside the window.
SparseAdjacency build_window_network(const std::vector<InteractionRecord>& records,
                                     const WindowSpec& window, bool directed);

}  // namespace polardim

#endif  // POLARDIM_RECORDS_HPP
