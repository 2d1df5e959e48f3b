#include "polardim/records.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "polardim/error.hpp"

namespace polardim {

namespace {

constexpr std::size_t kMaxRejectSamples = 10;

void reject(RejectReport& report, std::size_t line_no, const std::string& reason) {
  report.malformed++;
  if (report.samples.size() < kMaxRejectSamples) {
    report.samples.push_back("line " + std::to_string(line_no) + ": " + reason);
  }
}

bool parse_timestamp(std::string_view token, std::int64_t& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && out >= 0;
}

std::optional<InteractionRecord> parse_tsv_line(const std::string& line, std::string& reason) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      fields.emplace_back(line.data() + start, i - start);
      start = i + 1;
    }
  }
  if (fields.size() != 4) {
    reason = "expected 4 tab-separated fields, got " + std::to_string(fields.size());
    return std::nullopt;
  }
  InteractionRecord rec;
  rec.source_user = std::string(fields[0]);
  rec.target_user = std::string(fields[1]);
  if (rec.source_user.empty() || rec.target_user.empty()) {
    reason = "empty user id";
    return std::nullopt;
  }
  auto kind = parse_kind(fields[2]);
  if (!kind) {
    reason = "unknown interaction kind '" + std::string(fields[2]) + "'";
    return std::nullopt;
  }
  rec.kind = *kind;
  if (!parse_timestamp(fields[3], rec.timestamp)) {
    reason = "bad timestamp '" + std::string(fields[3]) + "'";
    return std::nullopt;
  }
  return rec;
}

std::optional<InteractionRecord> parse_json_line(const std::string& line, std::string& reason) {
  nlohmann::json obj = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    reason = "not a JSON object";
    return std::nullopt;
  }
  InteractionRecord rec;
  const auto src = obj.find("source_user");
  const auto dst = obj.find("target_user");
  const auto kind = obj.find("kind");
  const auto ts = obj.find("timestamp");
  if (src == obj.end() || !src->is_string() || dst == obj.end() || !dst->is_string()) {
    reason = "missing or non-string source_user/target_user";
    return std::nullopt;
  }
  rec.source_user = src->get<std::string>();
  rec.target_user = dst->get<std::string>();
  if (rec.source_user.empty() || rec.target_user.empty()) {
    reason = "empty user id";
    return std::nullopt;
  }
  if (kind == obj.end() || !kind->is_string()) {
    reason = "missing or non-string kind";
    return std::nullopt;
  }
  auto parsed_kind = parse_kind(kind->get<std::string>());
  if (!parsed_kind) {
    reason = "unknown interaction kind '" + kind->get<std::string>() + "'";
    return std::nullopt;
  }
  rec.kind = *parsed_kind;
  if (ts == obj.end() || !ts->is_number_integer() || ts->get<std::int64_t>() < 0) {
    reason = "missing, non-integer or negative timestamp";
    return std::nullopt;
  }
  rec.timestamp = ts->get<std::int64_t>();
  return rec;
}

}  // namespace

std::optional<InteractionKind> parse_kind(std::string_view token) {
  if (token == "mention") return InteractionKind::mention;
  if (token == "reply") return InteractionKind::reply;
  if (token == "quote") return InteractionKind::quote;
  if (token == "retweet") return InteractionKind::retweet;
  if (token == "other") return InteractionKind::other;
  return std::nullopt;
}

const char* to_string(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::mention: return "mention";
    case InteractionKind::reply: return "reply";
    case InteractionKind::quote: return "quote";
    case InteractionKind::retweet: return "retweet";
    case InteractionKind::other: return "other";
  }
  return "other";
}

std::vector<InteractionKind> default_included_kinds() {
  return {InteractionKind::mention, InteractionKind::reply, InteractionKind::quote};
}

bool WindowSpec::includes(InteractionKind kind) const {
  return std::find(include_kinds.begin(), include_kinds.end(), kind) != include_kinds.end();
}

ParsedRecords parse_records(std::istream& in) {
  ParsedRecords out;
  std::string line;
  std::size_t line_no = 0;
  bool json_mode = false;
  bool detected = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!detected) {
      const auto first = line.find_first_not_of(" \t");
      json_mode = first != std::string::npos && line[first] == '{';
      detected = true;
    }
    std::string reason;
    auto rec = json_mode ? parse_json_line(line, reason) : parse_tsv_line(line, reason);
    if (rec) {
      out.records.push_back(std::move(*rec));
    } else {
      reject(out.rejects, line_no, reason);
    }
  }
  return out;
}

ParsedRecords load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open records file: " + path.string());
  return parse_records(in);
}

SparseAdjacency build_window_network(const std::vector<InteractionRecord>& records,
                                     const WindowSpec& window, bool directed) {
  if (window.start >= window.end) {
    throw ParameterError("window '" + window.label + "' has start >= end");
  }

  // Nodes are indexed in first-appearance order, which makes the
  // construction deterministic for a given record sequence.
  std::unordered_map<std::string, NodeIndex> index_of;
  std::vector<std::string> labels;
  std::vector<EdgePair> pairs;
  auto intern = [&](const std::string& user) {
    auto [it, inserted] = index_of.emplace(user, static_cast<NodeIndex>(labels.size()));
    if (inserted) labels.push_back(user);
    return it->second;
  };

  for (const auto& rec : records) {
    if (!window.includes(rec.kind) || !window.contains(rec.timestamp)) continue;
    const NodeIndex s = intern(rec.source_user);
    const NodeIndex t = intern(rec.target_user);
    pairs.emplace_back(s, t);
  }

  if (labels.empty()) {
    throw EmptyWindowError("window '" + window.label + "' contains no included interactions");
  }
  return SparseAdjacency::from_pairs(labels.size(), std::move(pairs), directed,
                                     std::move(labels));
}

}  // namespace polardim
