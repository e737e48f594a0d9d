#include "xmod/base.hpp"

#include <cstdlib>
#include <sstream>

namespace xmod {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::malformed_table: return "MalformedTable";
        case ErrorKind::unknown_object: return "UnknownObject";
        case ErrorKind::not_an_action: return "NotAnAction";
        case ErrorKind::base_mismatch: return "BaseMismatch";
        case ErrorKind::not_normal: return "NotNormal";
        case ErrorKind::not_abelian: return "NotAbelian";
        case ErrorKind::not_equivariant: return "NotEquivariant";
        case ErrorKind::domain_mismatch: return "DomainMismatch";
        case ErrorKind::invalid_homotopy: return "InvalidHomotopy";
        case ErrorKind::not_invertible: return "NotInvertible";
        case ErrorKind::not_automorphism: return "NotAutomorphism";
        case ErrorKind::no_isomorphism_found: return "NoIsomorphismFound";
        case ErrorKind::not_regular: return "NotRegular";
        case ErrorKind::invalid_two_crossed: return "InvalidTwoCrossed";
        case ErrorKind::syntax_error: return "SyntaxError";
        case ErrorKind::semantic_error: return "SemanticError";
        case ErrorKind::budget_exceeded: return "SearchBudgetExceeded";
        case ErrorKind::internal_check: return "InternalCheckFailed";
    }
    return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void ValidationReport::add(const std::string& axiom, const std::string& witness) {
    for (auto& v : violations) {
        if (v.axiom == axiom) {
            ++v.count;
            return;
        }
    }
    violations.push_back(Violation{axiom, witness, 1});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& v : other.violations) {
        const std::string axiom = prefix.empty() ? v.axiom : prefix + "/" + v.axiom;
        bool found = false;
        for (auto& mine : violations) {
            if (mine.axiom == axiom) {
                mine.count += v.count;
                found = true;
                break;
            }
        }
        if (!found) violations.push_back(Violation{axiom, v.witness, v.count});
    }
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    if (ok()) {
        os << "ok\n";
        return os.str();
    }
    for (const auto& v : violations) {
        os << "violated " << v.axiom << " (" << v.count << " tuple"
           << (v.count == 1 ? "" : "s") << "), e.g. " << v.witness << "\n";
    }
    return os.str();
}

SearchBudget::SearchBudget() {
    limit_ = 1000000;
    if (const char* env = std::getenv("XMOD_MAX_SIZE")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) limit_ = parsed;
    }
}

void SearchBudget::charge(std::uint64_t n) {
    used_ += n;
    if (used_ > limit_) {
        throw Error(ErrorKind::budget_exceeded,
                    "enumeration exceeded XMOD_MAX_SIZE=" + std::to_string(limit_) +
                        " candidate tuples");
    }
}

}  // namespace xmod
