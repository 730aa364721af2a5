#pragma once

#include <string>
#include <string_view>

namespace endprox {

enum class Model { Dyck, Motzkin, Pfold };

enum class Stat { DEG, UNP, CHN, LEN, HEL, STM, StemHelices, JOINT, ETE };

std::string_view to_string(Model m) noexcept;
std::string_view to_string(Stat s) noexcept;

// Case-insensitive. Throws Error{InvalidArgument} on unknown names.
Model parse_model(std::string_view name);
Stat parse_stat(std::string_view name);

}  // namespace endprox
