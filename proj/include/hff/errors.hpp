#pragma once

#include <stdexcept>
#include <string>

namespace hff {

enum class Errc {
    Parse,
    Config,
    NotRegular,
    BadParameter,
    DegreeCapExceeded,
    NotACycle,
    ResultantDegenerate,
    InsufficientGrid,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::Parse: return "Parse";
        case Errc::Config: return "Config";
        case Errc::NotRegular: return "NotRegular";
        case Errc::BadParameter: return "BadParameter";
        case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
        case Errc::NotACycle: return "NotACycle";
        case Errc::ResultantDegenerate: return "ResultantDegenerate";
        case Errc::InsufficientGrid: return "InsufficientGrid";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace hff
