#include "endprox/records.hpp"

#include <sstream>

namespace endprox {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    fn(trim(text.substr(start, end - start)));
    start = end + 1;
  }
}

bool is_structure_char(char c) {
  return std::string_view(".()[]{}<>").find(c) != std::string_view::npos;
}

std::string first_token(std::string_view s) {
  const auto end = s.find_first_of(" \t");
  return std::string(s.substr(0, end));
}

}  // namespace

std::string header_tag(std::string_view header, std::string_view key) {
  std::istringstream in{std::string(header)};
  std::string tok;
  const std::string prefix = std::string(key) + "=";
  while (in >> tok) {
    if (tok.rfind(prefix, 0) == 0) return tok.substr(prefix.size());
  }
  return {};
}

std::vector<StructureRecord> read_dot_bracket_records(
    std::string_view text, std::string_view default_group,
    std::string_view id_prefix) {
  std::vector<StructureRecord> out;
  bool open = false;  // last record still waits for its structure line
  auto start_record = [&](std::string id, std::string group) {
    StructureRecord r;
    r.index = out.size();
    r.id = id.empty() ? std::string(id_prefix) + std::to_string(out.size() + 1)
                      : std::move(id);
    r.group = group.empty() ? std::string(default_group) : std::move(group);
    out.push_back(std::move(r));
  };

  for_each_line(text, [&](std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    if (line.front() == '>') {
      const std::string_view header = trim(line.substr(1));
      start_record(first_token(header), header_tag(header, "group"));
      open = true;
      return;
    }
    if (is_structure_char(line.front())) {
      if (!open) start_record({}, {});
      out.back().text = first_token(line);
      open = false;
      return;
    }
    if (!open) start_record({}, {});
    out.back().sequence += first_token(line);
    open = true;
  });
  return out;
}

StructureRecord read_bpseq_record(std::string_view text, std::string_view id,
                                  std::string_view default_group) {
  StructureRecord r;
  r.id = std::string(id);
  r.format = RecordFormat::Bpseq;
  r.text = std::string(text);
  for_each_line(text, [&](std::string_view line) {
    if (r.group.empty() && !line.empty() && line.front() == '#') {
      r.group = header_tag(line.substr(1), "group");
    }
  });
  if (r.group.empty()) r.group = std::string(default_group);
  return r;
}

std::vector<SequenceRecord> read_sequence_records(std::string_view text) {
  std::vector<SequenceRecord> out;
  bool headed = false;  // lines continue the last '>' record
  for_each_line(text, [&](std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    if (line.front() == '>') {
      SequenceRecord r;
      r.header = std::string(trim(line.substr(1)));
      r.id = first_token(r.header);
      out.push_back(std::move(r));
      headed = true;
      return;
    }
    if (!headed) {
      SequenceRecord r;
      r.id = "seq" + std::to_string(out.size() + 1);
      r.header = r.id;
      out.push_back(std::move(r));
    }
    out.back().sequence += line;
  });
  return out;
}

}  // namespace endprox
