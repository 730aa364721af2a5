#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace endprox {

// A partial pairing of positions 0..length-1. Positions are 0-based in the
// API; bpseq files are 1-based and converted on input.
class SecondaryStructure {
 public:
  static constexpr int kUnpaired = -1;

  SecondaryStructure() = default;

  // Validates that `partner` is an involution without fixed points.
  // Throws Error{AsymmetricPair | SelfPair}.
  explicit SecondaryStructure(std::vector<int> partner);

  static SecondaryStructure unpaired(std::size_t length);

  std::size_t length() const noexcept { return partner_.size(); }
  bool empty() const noexcept { return partner_.empty(); }
  bool crossing() const noexcept { return crossing_; }
  bool is_paired(std::size_t i) const { return partner_.at(i) != kUnpaired; }
  std::optional<std::size_t> partner(std::size_t i) const;
  std::span<const int> partner_table() const noexcept { return partner_; }
  std::size_t pair_count() const noexcept { return pair_count_; }

  // Pairs (i, j) with i < j, ordered by i.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const SecondaryStructure&,
                         const SecondaryStructure&) = default;

 private:
  std::vector<int> partner_;
  std::size_t pair_count_ = 0;
  bool crossing_ = false;
};

// Two-scale freely jointed chain constants, in nanometers.
struct EteModel {
  double b_nm = 1.5;       // hydrogen bridge step
  double c_nm = 0.62;      // covalent step
  double exponent = 1.2;   // 6/5
  double a_nm = 0.75;      // average step for the RMS estimate

  // Throws Error{InvalidArgument} unless all constants are positive and the
  // exponent lies in (1, 2).
  void validate() const;
};

struct FirstStem {
  int pairs = 0;    // STM, counted in base pairs
  int helices = 0;  // maximal directly nested runs inside the stem

  friend bool operator==(const FirstStem&, const FirstStem&) = default;
};

struct ExteriorStats {
  int deg = 0;
  int unp = 0;
  int chn = 0;
  int len_ext = 0;
  double ete_nm = 0.0;
  double rms_nm = 0.0;
  std::optional<int> hel;
  std::optional<int> stm;
  std::optional<int> stem_helices;
};

// Parses dot-bracket text over ".()[]{}<>". Each bracket family pairs
// independently, so mixed families may describe pseudoknots.
SecondaryStructure parse_dot_bracket(std::string_view text);

// Inverse of parse_dot_bracket. Nested structures use round brackets only;
// crossing pairs are spread over the other families greedily.
std::string to_dot_bracket(const SecondaryStructure& s);

struct BpseqRecord {
  std::string sequence;
  SecondaryStructure structure;
};

// "index base partner" lines, partner 0 for unpaired, '#' comments.
BpseqRecord parse_bpseq(std::string_view text);

double ete_distance(int deg, int chn, const EteModel& m = {});
double rms_distance(int len, const EteModel& m = {});

// Exterior loop statistics of a nested structure, including the first helix
// and first stem. Throws Error{CrossingStructure} for pseudoknots.
ExteriorStats exterior_stats(const SecondaryStructure& s,
                             const EteModel& m = {});

// Length of the helix opened by the 5'-most base pair. Well defined for
// crossing structures too.
std::optional<int> first_helix_length(const SecondaryStructure& s);

// Follows the pairs below the 5'-most pair while each loop has exactly one
// closing child. Throws Error{CrossingStructure}.
std::optional<FirstStem> first_stem(const SecondaryStructure& s);

// Exterior statistics read off a shortest 5'-to-3' path through backbone and
// pair edges; valid for crossing structures. Ties between shortest paths are
// broken by smallest ETE, then by lexicographically smallest node sequence.
// Throws Error{EmptyStructure} when length is 0.
ExteriorStats shortest_path_stats(const SecondaryStructure& s,
                                  const EteModel& m = {});

}  // namespace endprox
