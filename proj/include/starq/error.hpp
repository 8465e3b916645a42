#ifndef STARQ_ERROR_HPP
#define STARQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace starq
{

// Base of every exception thrown by the engine.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class dimension_mismatch : public error
{
public:
    dimension_mismatch(std::size_t a, std::size_t b)
        : error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b))
    {
    }
};

class order_mismatch : public error
{
public:
    using error::error;
};

// Raised when an operator would exceed the configured maximum order.
class order_limit_exceeded : public error
{
public:
    using error::error;
};

class invalid_argument : public error
{
public:
    using error::error;
};

class parse_error : public error
{
public:
    using error::error;
};

} // namespace starq

#endif
