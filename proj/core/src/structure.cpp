#include "endprox/structure.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "endprox/error.hpp"

namespace endprox {

namespace {

constexpr std::array<std::pair<char, char>, 4> kFamilies{
    {{'(', ')'}, {'[', ']'}, {'{', '}'}, {'<', '>'}}};

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Nested pairs close in LIFO order; any violation is a crossing.
bool has_crossing(const std::vector<int>& partner) {
  std::vector<int> open;
  for (int i = 0; i < static_cast<int>(partner.size()); ++i) {
    const int j = partner[i];
    if (j == SecondaryStructure::kUnpaired) continue;
    if (j > i) {
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != j) return true;
      open.pop_back();
    }
  }
  return false;
}

bool pairs_cross(std::pair<std::size_t, std::size_t> a,
                 std::pair<std::size_t, std::size_t> b) {
  if (a.first > b.first) std::swap(a, b);
  return a.first < b.first && b.first < a.second && a.second < b.second;
}

}  // namespace

SecondaryStructure::SecondaryStructure(std::vector<int> partner)
    : partner_(std::move(partner)) {
  const int n = static_cast<int>(partner_.size());
  for (int i = 0; i < n; ++i) {
    const int j = partner_[i];
    if (j == kUnpaired) continue;
    if (j == i) {
      throw Error(Errc::SelfPair, "position paired with itself",
                  static_cast<std::size_t>(i));
    }
    if (j < 0 || j >= n || partner_[j] != i) {
      throw Error(Errc::AsymmetricPair, "partner table is not symmetric",
                  static_cast<std::size_t>(i));
    }
    if (j > i) ++pair_count_;
  }
  crossing_ = has_crossing(partner_);
}

SecondaryStructure SecondaryStructure::unpaired(std::size_t length) {
  return SecondaryStructure(std::vector<int>(length, kUnpaired));
}

std::optional<std::size_t> SecondaryStructure::partner(std::size_t i) const {
  const int j = partner_.at(i);
  if (j == kUnpaired) return std::nullopt;
  return static_cast<std::size_t>(j);
}

std::vector<std::pair<std::size_t, std::size_t>> SecondaryStructure::pairs()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pair_count_);
  for (std::size_t i = 0; i < partner_.size(); ++i) {
    const int j = partner_[i];
    if (j != kUnpaired && static_cast<std::size_t>(j) > i) {
      out.emplace_back(i, static_cast<std::size_t>(j));
    }
  }
  return out;
}

void EteModel::validate() const {
  if (!(b_nm > 0 && c_nm > 0 && a_nm > 0)) {
    throw Error(Errc::InvalidArgument, "ETE step lengths must be positive");
  }
  if (!(exponent > 1 && exponent < 2)) {
    throw Error(Errc::InvalidArgument, "ETE exponent must lie in (1, 2)");
  }
}

SecondaryStructure parse_dot_bracket(std::string_view text) {
  const std::string_view body = trim(text);
  std::vector<int> partner(body.size(), SecondaryStructure::kUnpaired);
  std::array<std::vector<int>, kFamilies.size()> stacks;

  for (std::size_t i = 0; i < body.size(); ++i) {
    const char ch = body[i];
    if (ch == '.') continue;
    bool matched = false;
    for (std::size_t f = 0; f < kFamilies.size(); ++f) {
      if (ch == kFamilies[f].first) {
        stacks[f].push_back(static_cast<int>(i));
        matched = true;
      } else if (ch == kFamilies[f].second) {
        if (stacks[f].empty()) {
          throw Error(Errc::UnbalancedBracket,
                      std::string("unmatched '") + ch + "'", i);
        }
        const int open = stacks[f].back();
        stacks[f].pop_back();
        partner[open] = static_cast<int>(i);
        partner[i] = open;
        matched = true;
      }
      if (matched) break;
    }
    if (!matched) {
      throw Error(Errc::IllegalCharacter,
                  std::string("unexpected character '") + ch + "'", i);
    }
  }
  for (const auto& st : stacks) {
    if (!st.empty()) {
      throw Error(Errc::UnbalancedBracket, "unclosed bracket at end of input",
                  body.size());
    }
  }
  return SecondaryStructure(std::move(partner));
}

std::string to_dot_bracket(const SecondaryStructure& s) {
  std::string out(s.length(), '.');
  std::array<std::vector<std::pair<std::size_t, std::size_t>>,
             kFamilies.size()>
      layers;
  for (const auto& p : s.pairs()) {
    std::size_t layer = 0;
    for (; layer < layers.size(); ++layer) {
      const bool clash =
          std::any_of(layers[layer].begin(), layers[layer].end(),
                      [&](const auto& q) { return pairs_cross(p, q); });
      if (!clash) break;
    }
    if (layer == layers.size()) {
      throw Error(Errc::TooManyCrossingLayers,
                  "pseudoknot needs more than four bracket families", p.first);
    }
    layers[layer].push_back(p);
    out[p.first] = kFamilies[layer].first;
    out[p.second] = kFamilies[layer].second;
  }
  return out;
}

BpseqRecord parse_bpseq(std::string_view text) {
  struct Line {
    long index;
    std::string base;
    long partner;
    std::size_t line_no;
  };
  std::vector<Line> lines;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (raw.empty() || raw.front() == '#') continue;

    std::istringstream in{std::string(raw)};
    std::string idx_tok, base, partner_tok, extra;
    in >> idx_tok >> base >> partner_tok;
    long idx = 0, partner = 0;
    const auto r1 = std::from_chars(idx_tok.data(),
                                    idx_tok.data() + idx_tok.size(), idx);
    const bool numeric_index =
        r1.ec == std::errc{} && r1.ptr == idx_tok.data() + idx_tok.size();
    if (!numeric_index && lines.empty()) continue;  // header block
    const auto r2 = std::from_chars(
        partner_tok.data(), partner_tok.data() + partner_tok.size(), partner);
    if (!numeric_index || base.empty() || r2.ec != std::errc{} ||
        r2.ptr != partner_tok.data() + partner_tok.size() || (in >> extra)) {
      throw Error(Errc::MalformedLine,
                  "expected 'index base partner', got '" + std::string(raw) +
                      "'",
                  line_no);
    }
    lines.push_back({idx, base, partner, line_no});
  }

  std::sort(lines.begin(), lines.end(),
            [](const Line& a, const Line& b) { return a.index < b.index; });
  const long n = static_cast<long>(lines.size());
  std::vector<int> partner(lines.size(), SecondaryStructure::kUnpaired);
  BpseqRecord rec;
  rec.sequence.reserve(lines.size());
  for (long k = 0; k < n; ++k) {
    const Line& ln = lines[k];
    if (ln.index != k + 1) {
      throw Error(Errc::NonContiguousIndices,
                  "indices must be exactly 1.." + std::to_string(n),
                  ln.line_no);
    }
    if (ln.partner == ln.index) {
      throw Error(Errc::SelfPair, "position paired with itself", ln.line_no);
    }
    if (ln.partner < 0 || ln.partner > n) {
      throw Error(Errc::AsymmetricPair, "partner index out of range",
                  ln.line_no);
    }
    rec.sequence += ln.base;
    if (ln.partner != 0) partner[k] = static_cast<int>(ln.partner - 1);
  }
  rec.structure = SecondaryStructure(std::move(partner));
  return rec;
}

double ete_distance(int deg, int chn, const EteModel& m) {
  const double d = std::pow(static_cast<double>(deg), m.exponent);
  const double c = std::pow(static_cast<double>(chn), m.exponent);
  return std::sqrt(m.b_nm * m.b_nm * d + m.c_nm * m.c_nm * c);
}

double rms_distance(int len, const EteModel& m) {
  return m.a_nm * std::sqrt(static_cast<double>(std::max(0, len - 1)));
}

std::optional<int> first_helix_length(const SecondaryStructure& s) {
  const auto table = s.partner_table();
  const auto first = std::find_if(table.begin(), table.end(), [](int p) {
    return p != SecondaryStructure::kUnpaired;
  });
  if (first == table.end()) return std::nullopt;
  const int i = static_cast<int>(first - table.begin());
  const int j = *first;
  int h = 1;
  while (i + h < j - h && table[i + h] == j - h) ++h;
  return h;
}

std::optional<FirstStem> first_stem(const SecondaryStructure& s) {
  if (s.crossing()) {
    throw Error(Errc::CrossingStructure,
                "first stem is undefined for pseudoknotted structures");
  }
  const auto table = s.partner_table();
  const auto first = std::find_if(table.begin(), table.end(), [](int p) {
    return p != SecondaryStructure::kUnpaired;
  });
  if (first == table.end()) return std::nullopt;

  int i = static_cast<int>(first - table.begin());
  int j = *first;
  FirstStem stem{1, 1};
  for (;;) {
    int child_i = -1, child_j = -1, children = 0;
    for (int k = i + 1; k < j;) {
      if (table[k] == SecondaryStructure::kUnpaired) {
        ++k;
        continue;
      }
      if (++children > 1) break;
      child_i = k;
      child_j = table[k];
      k = child_j + 1;
    }
    if (children != 1) break;
    ++stem.pairs;
    if (child_i != i + 1 || child_j != j - 1) ++stem.helices;
    i = child_i;
    j = child_j;
  }
  return stem;
}

ExteriorStats exterior_stats(const SecondaryStructure& s, const EteModel& m) {
  if (s.crossing()) {
    throw Error(Errc::CrossingStructure,
                "exterior loop of a pseudoknotted structure; use "
                "shortest_path_stats");
  }
  const auto table = s.partner_table();
  ExteriorStats st;
  for (std::size_t i = 0; i < table.size();) {
    if (table[i] == SecondaryStructure::kUnpaired) {
      ++st.unp;
      ++i;
    } else {
      ++st.deg;
      i = static_cast<std::size_t>(table[i]) + 1;
    }
  }
  st.chn = std::max(0, st.deg + st.unp - 1);
  st.len_ext = 2 * st.deg + st.unp;
  st.ete_nm = ete_distance(st.deg, st.chn, m);
  st.rms_nm = rms_distance(st.len_ext, m);
  st.hel = first_helix_length(s);
  if (const auto stem = first_stem(s)) {
    st.stm = stem->pairs;
    st.stem_helices = stem->helices;
  }
  return st;
}

}  // namespace endprox
