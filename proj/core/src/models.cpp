#include "endprox/models.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "endprox/error.hpp"

namespace endprox {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

constexpr std::array kModels{Model::Dyck, Model::Motzkin, Model::Pfold};
constexpr std::array kStats{Stat::DEG, Stat::UNP,         Stat::CHN,
                            Stat::LEN, Stat::HEL,         Stat::STM,
                            Stat::StemHelices, Stat::JOINT, Stat::ETE};

}  // namespace

std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::Dyck: return "dyck";
    case Model::Motzkin: return "motzkin";
    case Model::Pfold: return "pfold";
  }
  return "unknown";
}

std::string_view to_string(Stat s) noexcept {
  switch (s) {
    case Stat::DEG: return "DEG";
    case Stat::UNP: return "UNP";
    case Stat::CHN: return "CHN";
    case Stat::LEN: return "LEN";
    case Stat::HEL: return "HEL";
    case Stat::STM: return "STM";
    case Stat::StemHelices: return "StemHelices";
    case Stat::JOINT: return "JOINT";
    case Stat::ETE: return "ETE";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (Model m : kModels) {
    if (iequals(name, to_string(m))) return m;
  }
  throw Error(Errc::InvalidArgument,
              "unknown model '" + std::string(name) +
                  "' (expected dyck, motzkin or pfold)");
}

Stat parse_stat(std::string_view name) {
  for (Stat s : kStats) {
    if (iequals(name, to_string(s))) return s;
  }
  if (iequals(name, "stem_helices") || iequals(name, "stem-helices")) {
    return Stat::StemHelices;
  }
  throw Error(Errc::InvalidArgument, "unknown statistic '" +
                                         std::string(name) + "'");
}

}  // namespace endprox
