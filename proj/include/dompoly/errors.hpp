#pragma once

#include <stdexcept>
#include <string>

namespace dompoly {

// Input rejected by a parser. `where` is a 1-based line number for the
// file formats and a 0-based character offset for expression strings.
class parse_error : public std::runtime_error {
public:
    enum class Kind {
        malformed,
        vertex_out_of_range,
        self_loop,
        duplicate_edge,
        invalid_character,
        truncated,
        syntax,
        arity,
        parameter_range,
    };

    parse_error(Kind kind, long where, const std::string& msg)
        : std::runtime_error(msg), kind_(kind), where_(where) {}

    Kind kind() const { return kind_; }
    long where() const { return where_; }

private:
    Kind kind_;
    long where_;
};

// Graph or polynomial too large for the requested operation.
class size_limit_error : public std::runtime_error {
public:
    size_limit_error(int cap, const std::string& msg)
        : std::runtime_error(msg), cap_(cap) {}

    int cap() const { return cap_; }

private:
    int cap_;
};

// Rewrite-only evaluation hit a node with no formula.
class rewrite_error : public std::runtime_error {
public:
    explicit rewrite_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two counting backends produced different polynomials. Always a bug.
class oracle_mismatch_error : public std::runtime_error {
public:
    explicit oracle_mismatch_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

} // namespace dompoly
