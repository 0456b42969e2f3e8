#pragma once

#include <stdexcept>
#include <string>

namespace kempe {

// Malformed external input: unreadable files, bad instance data, caps exceeded.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace kempe
