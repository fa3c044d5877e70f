#pragma once

#include <stdexcept>
#include <string>

namespace airy {

// Thrown on invalid numeric input (out-of-domain argument, wrong sector).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Thrown when an evaluation needs an argument inside |arg z| <= 2*pi/3.
class sector_error : public domain_error {
public:
    explicit sector_error(const std::string& msg) : domain_error(msg) {}
};

// Thrown when an iteration hits its cap before reaching tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when exact arithmetic exceeds its configured digit budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace airy
