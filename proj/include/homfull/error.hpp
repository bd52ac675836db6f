#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homfull {

enum class Errc {
    adjacent_pair,
    two_dipath,
    even_order,
    kind_mismatch,
    too_large,
    not_acyclic,
    not_oclique,
    not_cograph,
    no_gadget_found,
    syntax_error,
    loop_edge,
    duplicate_edge,
    digon_in_oriented,
    index_out_of_range,
    invalid_argument,
    usage_error,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Parse failure carrying the 1-based input line.
class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t line, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace homfull
