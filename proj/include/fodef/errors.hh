#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fodef
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A size or complexity guard was exceeded; the computation was refused.
    class GuardExceeded : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// Raised by operations that require distance-regular input.
    class NotDistanceRegular : public Error
    {
    public:
        using Error::Error;
    };

    class Graph6Error : public Error
    {
        std::size_t _offset;

    public:
        Graph6Error(const std::string & what, std::size_t offset) :
            Error(what + " at byte " + std::to_string(offset)),
            _offset(offset)
        {
        }

        auto offset() const -> std::size_t { return _offset; }
    };
}
