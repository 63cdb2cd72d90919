#pragma once

namespace polyprod {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace polyprod
