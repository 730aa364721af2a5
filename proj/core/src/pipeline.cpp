#include "endprox/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include "endprox/error.hpp"
#include "json.hpp"

namespace endprox {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string opt_field(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

Json opt_json(const std::optional<int>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string key_text(const StatKey& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ';';
    out += key[i] == kAbsent ? "absent" : std::to_string(key[i]);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class W, class Text, class ToJson>
void write_table_impl(std::ostream& out, const CountTable<W>& t, OutputFormat f,
                      Text&& text, ToJson&& to_json) {
  const std::string model(to_string(t.model));
  const std::string names = join(t.stat_names, ';');
  if (f == OutputFormat::Csv) {
    out << "model,n,stat_name,stat_value,weight\n";
    for (const auto& [key, w] : t.entries) {
      out << model << ',' << t.size << ',' << names << ',' << key_text(key)
          << ',' << text(w) << '\n';
    }
    return;
  }
  Json arr = Json::array();
  for (const auto& [key, w] : t.entries) {
    Json values = Json::array();
    for (int k : key) values.push_back(k == kAbsent ? Json(nullptr) : Json(k));
    arr.push_back({{"model", model},
                   {"n", t.size},
                   {"stat_name", names},
                   {"stat_value", values},
                   {"weight", to_json(w)}});
  }
  out << arr.dump(2) << '\n';
}

void accumulate(std::vector<StatSummary>& stats, std::size_t slot,
                std::string_view name, double x) {
  if (stats.size() <= slot) stats.resize(slot + 1);
  stats[slot].stat = std::string(name);
  ++stats[slot].count;
  stats[slot].mean += x;  // sum for now
}

template <class Fn>
void for_each_stat(const StatsRow& r, Fn&& fn) {
  fn(0, "length", r.length);
  fn(1, "deg", r.deg);
  fn(2, "unp", r.unp);
  fn(3, "chn", r.chn);
  fn(4, "len_ext", r.len_ext);
  fn(5, "ete_nm", r.ete_nm);
  fn(6, "rms_nm", r.rms_nm);
  if (r.hel) fn(7, "hel", *r.hel);
  if (r.stm) fn(8, "stm", *r.stm);
  if (r.stem_helices) fn(9, "stem_helices", *r.stem_helices);
}

constexpr std::string_view kSummaryNames[] = {
    "length", "deg", "unp", "chn", "len_ext", "ete_nm",
    "rms_nm", "hel", "stm", "stem_helices"};

}  // namespace

StatsRow stats_row(const StructureRecord& rec, const EteModel& m) {
  SecondaryStructure s;
  if (rec.format == RecordFormat::Bpseq) {
    s = parse_bpseq(rec.text).structure;
  } else {
    if (rec.text.empty()) {
      throw Error(Errc::MalformedLine, "record has no structure line");
    }
    s = parse_dot_bracket(rec.text);
  }
  if (s.empty()) throw Error(Errc::EmptyStructure, "structure has length 0");

  const ExteriorStats st =
      s.crossing() ? shortest_path_stats(s, m) : exterior_stats(s, m);
  StatsRow row;
  row.id = rec.id;
  row.group = rec.group;
  row.length = static_cast<int>(s.length());
  row.deg = st.deg;
  row.unp = st.unp;
  row.chn = st.chn;
  row.len_ext = st.len_ext;
  row.ete_nm = st.ete_nm;
  row.rms_nm = st.rms_nm;
  row.hel = st.hel;
  row.stm = st.stm;
  row.stem_helices = st.stem_helices;
  row.pseudoknotted = s.crossing();
  return row;
}

StatsReport run_stats(const std::vector<StructureRecord>& records,
                      const EteModel& m, int jobs) {
  m.validate();
  if (records.empty()) throw Error(Errc::NoRecords, "input holds no records");

  std::vector<std::variant<StatsRow, RecordError>> slots(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      try {
        slots[i] = stats_row(records[i], m);
      } catch (const std::exception& e) {
        slots[i] = RecordError{records[i].index, records[i].id, e.what()};
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || records.size() == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, records.size()); ++t) {
      pool.emplace_back(work);
    }
    for (auto& th : pool) th.join();
  }

  StatsReport report;
  for (auto& slot : slots) {
    if (auto* row = std::get_if<StatsRow>(&slot)) {
      report.rows.push_back(std::move(*row));
    } else {
      report.errors.push_back(std::move(std::get<RecordError>(slot)));
    }
  }
  if (report.rows.empty()) {
    throw Error(Errc::NoRecords, "none of the " +
                                     std::to_string(records.size()) +
                                     " records could be measured");
  }
  report.summaries = summarize(report.rows);
  return report;
}

std::vector<SummaryBlock> summarize(const std::vector<StatsRow>& rows) {
  std::vector<SummaryBlock> blocks;
  std::vector<std::vector<const StatsRow*>> members;
  for (const auto& r : rows) {
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const SummaryBlock& b) { return b.group == r.group; });
    if (it == blocks.end()) {
      blocks.push_back({r.group, 0, {}});
      members.emplace_back();
      it = blocks.end() - 1;
    }
    members[it - blocks.begin()].push_back(&r);
  }
  for (std::size_t g = 0; g < blocks.size(); ++g) {
    auto& b = blocks[g];
    b.n_structures = members[g].size();
    b.stats.resize(std::size(kSummaryNames));
    for (std::size_t i = 0; i < b.stats.size(); ++i) {
      b.stats[i].stat = std::string(kSummaryNames[i]);
    }
    for (const StatsRow* r : members[g]) {
      for_each_stat(*r, [&](std::size_t slot, std::string_view name, double x) {
        accumulate(b.stats, slot, name, x);
      });
    }
    for (auto& s : b.stats) {
      if (s.count) s.mean /= static_cast<double>(s.count);
    }
    for (const StatsRow* r : members[g]) {
      for_each_stat(*r, [&](std::size_t slot, std::string_view, double x) {
        const double d = x - b.stats[slot].mean;
        b.stats[slot].variance += d * d;
      });
    }
    for (auto& s : b.stats) {
      if (s.count) s.variance /= static_cast<double>(s.count);
    }
  }
  return blocks;
}

std::optional<int> stat_value(const StatsRow& row, Stat stat) {
  switch (stat) {
    case Stat::DEG: return row.deg;
    case Stat::UNP: return row.unp;
    case Stat::CHN: return row.chn;
    case Stat::LEN: return row.len_ext;
    case Stat::HEL: return row.hel;
    case Stat::STM: return row.stm;
    case Stat::StemHelices: return row.stem_helices;
    case Stat::JOINT:
    case Stat::ETE: break;
  }
  throw Error(Errc::UnsupportedCombination,
              std::string(to_string(stat)) + " is not a per-structure count");
}

std::string ete_band(double ete_nm) {
  for (int lo = 15; lo < 75; lo += 10) {
    const double a = lo / 10.0, b = (lo + 10) / 10.0;
    if (ete_nm >= a && (ete_nm < b || (lo == 65 && ete_nm <= b))) {
      return fixed(a, 1) + "-" + fixed(b, 1);
    }
  }
  return "other";
}

std::vector<HeatmapCell> heatmap(const std::vector<StatsRow>& rows,
                                 const EteModel& m) {
  std::map<std::pair<int, int>, std::size_t> counts;
  for (const auto& r : rows) ++counts[{r.deg, r.unp}];
  std::vector<HeatmapCell> cells;
  for (const auto& [key, c] : counts) {
    HeatmapCell cell;
    cell.deg = key.first;
    cell.unp = key.second;
    cell.count = c;
    cell.percent = 100.0 * static_cast<double>(c) / static_cast<double>(rows.size());
    cell.ete_nm = ete_distance(cell.deg, std::max(0, cell.deg + cell.unp - 1), m);
    cell.band = ete_band(cell.ete_nm);
    cells.push_back(std::move(cell));
  }
  return cells;
}

double total_variation(const Histogram& h, const LimitDist& d, int cap) {
  double total = 0.0;
  for (const auto& [k, w] : h) {
    if (w < 0.0) throw Error(Errc::InvalidArgument, "negative histogram weight");
    total += w;
  }
  if (!(total > 0.0)) throw Error(Errc::EmptyHistogram, "histogram has no mass");
  const int top = std::max(cap, h.empty() ? 0 : h.rbegin()->first);
  const auto law = pmf_expand(d, std::max(top, 0));
  double sum = 0.0, covered = 0.0;
  for (int k = 0; k <= top; ++k) {
    const auto it = h.find(k);
    const double emp = it == h.end() ? 0.0 : it->second / total;
    sum += std::abs(emp - law[k]);
    covered += law[k];
  }
  for (const auto& [k, w] : h) {
    if (k < 0) sum += w / total;
  }
  sum += std::max(0.0, 1.0 - covered);
  return std::min(1.0, 0.5 * sum);
}

CompareReport compare(const Histogram& h, Model model, Stat stat,
                      const PfoldParams& p) {
  if (stat == Stat::JOINT || stat == Stat::ETE) {
    throw Error(Errc::UnsupportedCombination,
                "compare works on single counts, not " +
                    std::string(to_string(stat)));
  }
  const LimitDist law = limit_of(model, stat, p);
  CompareReport r;
  r.model = model;
  r.stat = stat;
  for (const auto& [k, w] : h) {
    r.n_samples += w;
    r.empirical_mean += w * k;
  }
  if (!(r.n_samples > 0.0)) throw Error(Errc::EmptyHistogram, "histogram has no mass");
  r.empirical_mean /= r.n_samples;
  for (const auto& [k, w] : h) {
    const double d = k - r.empirical_mean;
    r.empirical_variance += w * d * d;
  }
  r.empirical_variance /= r.n_samples;
  const auto mom = moments_of(law);
  r.limit_mean = mom.mean;
  r.limit_variance = mom.variance;
  r.cap = quantile_cap(law);
  r.total_variation = total_variation(h, law, r.cap);
  const int top = std::max(r.cap, h.empty() ? 0 : h.rbegin()->first);
  const auto probs = pmf_expand(law, std::max(top, 0));
  for (int k = 0; k <= top; ++k) {
    const auto it = h.find(k);
    r.bins.push_back(
        {k, it == h.end() ? 0.0 : it->second / r.n_samples, probs[k]});
  }
  return r;
}

CompareReport compare(const std::vector<StatsRow>& rows, Model model, Stat stat,
                      const PfoldParams& p) {
  Histogram h;
  for (const auto& r : rows) {
    if (const auto v = stat_value(r, stat)) h[*v] += 1.0;
  }
  return compare(h, model, stat, p);
}

PfoldParams parse_pfold_params(std::string_view text) {
  PfoldParams p;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      const auto j = Json::parse(text);
      p.p1 = j.at("p1").get<double>();
      p.p2 = j.at("p2").get<double>();
      p.p3 = j.at("p3").get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::InvalidArgument,
                  std::string("bad grammar parameter JSON: ") + e.what());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string extra;
    if (!(in >> p.p1 >> p.p2 >> p.p3) || (in >> extra)) {
      throw Error(Errc::InvalidArgument,
                  "expected exactly three numbers p1 p2 p3");
    }
  }
  p.validate();
  return p;
}

void write_rows(std::ostream& out, const std::vector<StatsRow>& rows,
                OutputFormat f) {
  if (f == OutputFormat::Csv) {
    out << "id,group,length,deg,unp,chn,len_ext,ete_nm,rms_nm,hel,stm,"
           "stem_helices,pseudoknotted\n";
    for (const auto& r : rows) {
      out << csv_field(r.id) << ',' << csv_field(r.group) << ',' << r.length
          << ',' << r.deg << ',' << r.unp << ',' << r.chn << ',' << r.len_ext
          << ',' << fixed(r.ete_nm, 6) << ',' << fixed(r.rms_nm, 6) << ','
          << opt_field(r.hel) << ',' << opt_field(r.stm) << ','
          << opt_field(r.stem_helices) << ','
          << (r.pseudoknotted ? "true" : "false") << '\n';
    }
    return;
  }
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back({{"id", r.id},
                   {"group", r.group},
                   {"length", r.length},
                   {"deg", r.deg},
                   {"unp", r.unp},
                   {"chn", r.chn},
                   {"len_ext", r.len_ext},
                   {"ete_nm", r.ete_nm},
                   {"rms_nm", r.rms_nm},
                   {"hel", opt_json(r.hel)},
                   {"stm", opt_json(r.stm)},
                   {"stem_helices", opt_json(r.stem_helices)},
                   {"pseudoknotted", r.pseudoknotted}});
  }
  out << arr.dump(2) << '\n';
}

void write_summaries(std::ostream& out, const std::vector<SummaryBlock>& blocks,
                     OutputFormat f) {
  if (f == OutputFormat::Csv) {
    out << "group,n_structures,stat,count,mean,variance\n";
    for (const auto& b : blocks) {
      for (const auto& s : b.stats) {
        out << csv_field(b.group) << ',' << b.n_structures << ',' << s.stat
            << ',' << s.count << ',' << num(s.mean) << ',' << num(s.variance)
            << '\n';
      }
    }
    return;
  }
  Json arr = Json::array();
  for (const auto& b : blocks) {
    Json stats = Json::object();
    for (const auto& s : b.stats) {
      stats[s.stat] = {{"count", s.count}, {"mean", s.mean}, {"variance", s.variance}};
    }
    arr.push_back(
        {{"group", b.group}, {"n_structures", b.n_structures}, {"stats", stats}});
  }
  out << arr.dump(2) << '\n';
}

void write_heatmap(std::ostream& out, const std::vector<HeatmapCell>& cells,
                   OutputFormat f) {
  if (f == OutputFormat::Csv) {
    out << "deg,unp,count,percent,ete_nm,band\n";
    for (const auto& c : cells) {
      out << c.deg << ',' << c.unp << ',' << c.count << ',' << num(c.percent)
          << ',' << fixed(c.ete_nm, 6) << ',' << c.band << '\n';
    }
    return;
  }
  Json arr = Json::array();
  for (const auto& c : cells) {
    arr.push_back({{"deg", c.deg},
                   {"unp", c.unp},
                   {"count", c.count},
                   {"percent", c.percent},
                   {"ete_nm", c.ete_nm},
                   {"band", c.band}});
  }
  out << arr.dump(2) << '\n';
}

void write_compare(std::ostream& out, const CompareReport& r, OutputFormat f) {
  const std::string model(to_string(r.model)), stat(to_string(r.stat));
  if (f == OutputFormat::Csv) {
    out << "model,stat,n,empirical_mean,empirical_variance,limit_mean,"
           "limit_variance,total_variation,cap\n"
        << model << ',' << stat << ',' << num(r.n_samples) << ','
        << num(r.empirical_mean) << ',' << num(r.empirical_variance) << ','
        << num(r.limit_mean) << ',' << num(r.limit_variance) << ','
        << num(r.total_variation) << ',' << r.cap << "\n\n"
        << "value,empirical,limit\n";
    for (const auto& b : r.bins) {
      out << b.value << ',' << num(b.empirical) << ',' << num(b.limit) << '\n';
    }
    return;
  }
  Json bins = Json::array();
  for (const auto& b : r.bins) {
    bins.push_back({{"value", b.value}, {"empirical", b.empirical}, {"limit", b.limit}});
  }
  const Json j = {{"model", model},
                  {"stat", stat},
                  {"n", r.n_samples},
                  {"empirical_mean", r.empirical_mean},
                  {"empirical_variance", r.empirical_variance},
                  {"limit_mean", r.limit_mean},
                  {"limit_variance", r.limit_variance},
                  {"total_variation", r.total_variation},
                  {"cap", r.cap},
                  {"bins", bins}};
  out << j.dump(2) << '\n';
}

void write_limit(std::ostream& out, Model model, Stat stat, const LimitDist& d,
                 const MomentSummary& m, OutputFormat f) {
  Json law;
  if (const auto* nb = std::get_if<NegBinomial<double>>(&d)) {
    law = {{"kind", "negative_binomial"}, {"offset", nb->offset}, {"r", nb->r}, {"p", nb->p}};
  } else if (const auto* j = std::get_if<JointNB<double>>(&d)) {
    law = {{"kind", "joint_negative_binomial"}, {"a", j->a}, {"b", j->b}, {"c", j->c}};
  } else {
    const auto& s = std::get<SubstitutedPgf<double>>(d);
    law = {{"kind", "substituted_pgf"},
           {"a", s.joint.a},
           {"b", s.joint.b},
           {"c", s.joint.c},
           {"unp_weight", s.unp_weight},
           {"deg_weight", s.deg_weight},
           {"shift", s.shift}};
  }
  if (f == OutputFormat::Csv) {
    out << "model,stat,kind,params,mean,variance,certified_error\n"
        << to_string(model) << ',' << to_string(stat) << ','
        << law["kind"].get<std::string>() << ',';
    std::string params;
    for (const auto& [k, v] : law.items()) {
      if (k == "kind") continue;
      if (!params.empty()) params += ';';
      params += k + "=" + (v.is_number_integer() ? std::to_string(v.get<int>())
                                                 : num(v.get<double>(), 15));
    }
    out << params << ',' << num(m.mean, 15) << ',' << num(m.variance, 15) << ','
        << num(m.certified_error) << '\n';
    return;
  }
  const Json j = {{"model", to_string(model)},
                  {"stat", to_string(stat)},
                  {"law", law},
                  {"mean", m.mean},
                  {"variance", m.variance},
                  {"certified_error", m.certified_error}};
  out << j.dump(2) << '\n';
}

void write_table(std::ostream& out, const ExactTable& t, OutputFormat f) {
  write_table_impl(
      out, t, f, [](const BigInt& w) { return w.str(); },
      [](const BigInt& w) { return Json(w.str()); });
}

void write_table(std::ostream& out, const RealTable& t, OutputFormat f) {
  write_table_impl(
      out, t, f, [](double w) { return num(w, 17); },
      [](double w) { return Json(w); });
}

}  // namespace endprox
