#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dal {

enum class ErrorCode {
    InvalidParameter,
    InvalidLabeling,
    MalformedInput,
    TwinObstruction,
    ProvablyInfeasible,
    BudgetExceeded,
};

auto to_string(ErrorCode code) -> const char *;

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string & message) :
        std::runtime_error(message),
        _code(code)
    {
    }

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

// Raised when two vertices share a D-neighbourhood, so every bijection gives them equal weights.
class TwinObstructionError : public Error
{
public:
    TwinObstructionError(int u, int w, const std::string & message) :
        Error(ErrorCode::TwinObstruction, message),
        _pair(u, w)
    {
    }

    auto twins() const noexcept -> std::pair<int, int> { return _pair; }

private:
    std::pair<int, int> _pair;
};

} // namespace dal
