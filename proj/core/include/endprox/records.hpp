#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace endprox {

enum class RecordFormat { DotBracket, Bpseq };

// One structure as read from a file, before parsing, so that a malformed
// record can be reported without losing the others.
struct StructureRecord {
  std::size_t index = 0;  // position in the input stream
  std::string id;
  std::string group;
  std::string sequence;
  std::string text;  // structure line or full bpseq body
  RecordFormat format = RecordFormat::DotBracket;
};

struct SequenceRecord {
  std::string id;
  std::string header;  // full header line without '>'
  std::string sequence;
};

// Value of a "key=value" token in a header line, or empty.
std::string header_tag(std::string_view header, std::string_view key);

// Records of an optional ">id [group=G]" header followed by a structure
// line; a sequence line between them is kept, and text after the structure
// (such as a folding energy) is ignored. Bare structure lines form records
// of their own. `default_group` applies when no group tag is present.
std::vector<StructureRecord> read_dot_bracket_records(
    std::string_view text, std::string_view default_group,
    std::string_view id_prefix = "rec");

// A whole bpseq file as one record; a "# group=G" comment sets the group.
StructureRecord read_bpseq_record(std::string_view text, std::string_view id,
                                  std::string_view default_group);

// FASTA-like records; sequence lines are concatenated.
std::vector<SequenceRecord> read_sequence_records(std::string_view text);

}  // namespace endprox
