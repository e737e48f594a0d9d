#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xmod {

enum class ErrorKind {
    malformed_table,
    unknown_object,
    not_an_action,
    base_mismatch,
    not_normal,
    not_abelian,
    not_equivariant,
    domain_mismatch,
    invalid_homotopy,
    not_invertible,
    not_automorphism,
    no_isomorphism_found,
    not_regular,
    invalid_two_crossed,
    syntax_error,
    semantic_error,
    budget_exceeded,
    internal_check,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// One failed axiom family. Only the first witness is kept; `count`
/// tallies how many tuples broke the same axiom.
struct Violation {
    std::string axiom;
    std::string witness;
    std::uint64_t count = 0;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    void add(const std::string& axiom, const std::string& witness);
    void merge(const ValidationReport& other, const std::string& prefix);
    std::string summary() const;
};

/// Counts enumeration candidates against the XMOD_MAX_SIZE cap
/// (default 10^6). Exceeding the cap raises ErrorKind::budget_exceeded.
class SearchBudget {
public:
    SearchBudget();
    explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t n = 1);
    std::uint64_t used() const noexcept { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace xmod
