#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cyclo {

// Precondition violations map to CLI exit code 3, internal faults to 4.
enum class errc {
    not_coprime,
    not_divisible,
    out_of_range,
    divides_puv,
    bad_n,
    bad_m,
    bad_s,
    no_root,
    divide_by_zero,
    zero_factor,
    pin_mismatch,
    wrong_divisor,
    policy_misuse,
    empty_family,
    ring_mismatch,
    parse_error,
    semantic_error,
};

const char* errc_name(errc c);

class precondition_error : public std::runtime_error {
public:
    precondition_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/// ZeroFactor carries the index of the vanishing word factor.
class zero_factor_error : public precondition_error {
public:
    zero_factor_error(std::size_t factor_index, const std::string& what)
        : precondition_error(errc::zero_factor, what), index_(factor_index) {}
    std::size_t factor_index() const { return index_; }

private:
    std::size_t index_;
};

/// ParseError carries the byte offset and the expected-token set.
class parse_error : public precondition_error {
public:
    parse_error(std::size_t offset, const std::string& expected, const std::string& what)
        : precondition_error(errc::parse_error,
                             what + " at byte " + std::to_string(offset) + " (expected " + expected + ")"),
          offset_(offset),
          expected_(expected) {}
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Postcondition/invariant faults (e.g. NotInMuP); CLI exit code 4.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_coprime: return "NotCoprime";
        case errc::not_divisible: return "NotDivisible";
        case errc::out_of_range: return "OutOfRange";
        case errc::divides_puv: return "DividesPUV";
        case errc::bad_n: return "BadN";
        case errc::bad_m: return "BadM";
        case errc::bad_s: return "BadS";
        case errc::no_root: return "NoRoot";
        case errc::divide_by_zero: return "DivideByZero";
        case errc::zero_factor: return "ZeroFactor";
        case errc::pin_mismatch: return "PinMismatch";
        case errc::wrong_divisor: return "WrongDivisor";
        case errc::policy_misuse: return "PolicyMisuse";
        case errc::empty_family: return "EmptyFamily";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::parse_error: return "ParseError";
        case errc::semantic_error: return "SemanticError";
    }
    return "Unknown";
}

}  // namespace cyclo
