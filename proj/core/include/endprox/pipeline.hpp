#pragma once

#include <cmath>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endprox/count_table.hpp"
#include "endprox/limit_dists.hpp"
#include "endprox/models.hpp"
#include "endprox/pfold.hpp"
#include "endprox/records.hpp"
#include "endprox/structure.hpp"

namespace endprox {

struct StatsRow {
  std::string id;
  std::string group;
  int length = 0;
  int deg = 0;
  int unp = 0;
  int chn = 0;
  int len_ext = 0;
  double ete_nm = 0.0;
  double rms_nm = 0.0;
  std::optional<int> hel;
  std::optional<int> stm;
  std::optional<int> stem_helices;
  bool pseudoknotted = false;
};

struct RecordError {
  std::size_t index = 0;
  std::string id;
  std::string message;
};

// Population mean and variance over the rows where the statistic is present.
struct StatSummary {
  std::string stat;
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
};

struct SummaryBlock {
  std::string group;
  std::size_t n_structures = 0;
  std::vector<StatSummary> stats;
};

struct StatsReport {
  std::vector<StatsRow> rows;
  std::vector<RecordError> errors;
  std::vector<SummaryBlock> summaries;
};

// Parses one record and measures it: the exterior loop for nested
// structures, the shortest 5'-3' path for pseudoknotted ones.
StatsRow stats_row(const StructureRecord& rec, const EteModel& m = {});

// All records, processed by `jobs` threads; rows keep input order. Failed
// records land in `errors`. Throws Error{NoRecords} when nothing succeeds.
StatsReport run_stats(const std::vector<StructureRecord>& records,
                      const EteModel& m = {}, int jobs = 1);

// One block per group in order of first appearance.
std::vector<SummaryBlock> summarize(const std::vector<StatsRow>& rows);

// Value of a per-structure count; nullopt when absent. ETE and JOINT are not
// counts and throw Error{UnsupportedCombination}.
std::optional<int> stat_value(const StatsRow& row, Stat stat);

struct HeatmapCell {
  int deg = 0;
  int unp = 0;
  std::size_t count = 0;
  double percent = 0.0;
  double ete_nm = 0.0;
  std::string band;
};

// Distance band label: "1.5-2.5" ... "6.5-7.5", otherwise "other".
std::string ete_band(double ete_nm);

// Share of rows at each (deg, unp), ordered by deg then unp.
std::vector<HeatmapCell> heatmap(const std::vector<StatsRow>& rows,
                                 const EteModel& m = {});

using Histogram = std::map<int, double>;

// Half the L1 distance between the normalized histogram and the law, with
// the law expanded to cap (or the largest histogram key, if larger) and its
// remaining mass counted as disagreement. Negative keys are outside every
// law's support. Throws Error{EmptyHistogram}.
double total_variation(const Histogram& h, const LimitDist& d, int cap);

// Half the L1 distance between two weight maps, each normalized first.
template <class Key>
double total_variation(const std::map<Key, double>& a,
                       const std::map<Key, double>& b) {
  double ta = 0.0, tb = 0.0;
  for (const auto& [k, w] : a) ta += w;
  for (const auto& [k, w] : b) tb += w;
  double sum = 0.0;
  for (const auto& [k, w] : a) {
    const auto it = b.find(k);
    sum += std::abs(w / ta - (it == b.end() ? 0.0 : it->second / tb));
  }
  for (const auto& [k, w] : b) {
    if (a.find(k) == a.end()) sum += w / tb;
  }
  return 0.5 * sum;
}

struct CompareBin {
  int value = 0;
  double empirical = 0.0;
  double limit = 0.0;
};

struct CompareReport {
  Model model = Model::Dyck;
  Stat stat = Stat::DEG;
  double n_samples = 0.0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;
  double limit_mean = 0.0;
  double limit_variance = 0.0;
  int cap = 0;
  double total_variation = 0.0;
  std::vector<CompareBin> bins;
};

// Histogram against the model's limiting law, truncated at its 1 - 1e-6
// quantile. Throws Error{UnsupportedCombination}, Error{EmptyHistogram}.
CompareReport compare(const Histogram& h, Model model, Stat stat,
                      const PfoldParams& p = {});
// Rows without a value for the statistic are left out.
CompareReport compare(const std::vector<StatsRow>& rows, Model model, Stat stat,
                      const PfoldParams& p = {});

// Three whitespace-separated numbers "p1 p2 p3" or a JSON object with keys
// p1, p2, p3. Throws Error{InvalidArgument}.
PfoldParams parse_pfold_params(std::string_view text);

enum class OutputFormat { Csv, Json };

void write_rows(std::ostream& out, const std::vector<StatsRow>& rows,
                OutputFormat f);
void write_summaries(std::ostream& out, const std::vector<SummaryBlock>& blocks,
                     OutputFormat f);
void write_heatmap(std::ostream& out, const std::vector<HeatmapCell>& cells,
                   OutputFormat f);
void write_compare(std::ostream& out, const CompareReport& r, OutputFormat f);
void write_limit(std::ostream& out, Model model, Stat stat,
                 const LimitDist& d, const MomentSummary& m, OutputFormat f);

// Columns model,n,stat_name,stat_value,weight; multi-statistic keys are
// joined with ';' and kAbsent prints as "absent".
void write_table(std::ostream& out, const ExactTable& t, OutputFormat f);
void write_table(std::ostream& out, const RealTable& t, OutputFormat f);

}  // namespace endprox
