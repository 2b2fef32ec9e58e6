#pragma once

#include <stdexcept>
#include <string>

namespace narayana {

struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

struct PoleAtPoint : std::domain_error {
    explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfTriangle : std::out_of_range {
    explicit IndexOutOfTriangle(const std::string& what) : std::out_of_range(what) {}
};

struct PoleInCoefficient : std::domain_error {
    explicit PoleInCoefficient(const std::string& what) : std::domain_error(what) {}
};

struct NonIntegerQuotient : std::domain_error {
    explicit NonIntegerQuotient(const std::string& what) : std::domain_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotPalindromic : std::invalid_argument {
    explicit NotPalindromic(const std::string& what) : std::invalid_argument(what) {}
};

struct AscentMissing : std::invalid_argument {
    explicit AscentMissing(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularLeadingCoefficient : std::domain_error {
    explicit SingularLeadingCoefficient(const std::string& what) : std::domain_error(what) {}
};

struct UnknownIdentity : std::invalid_argument {
    explicit UnknownIdentity(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownFamily : std::invalid_argument {
    explicit UnknownFamily(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownTriangle : std::invalid_argument {
    explicit UnknownTriangle(const std::string& what) : std::invalid_argument(what) {}
};

struct NotIntegerSequence : std::domain_error {
    explicit NotIntegerSequence(const std::string& what) : std::domain_error(what) {}
};

struct FixtureMissing : std::runtime_error {
    explicit FixtureMissing(const std::string& what) : std::runtime_error(what) {}
};

struct FetchDisabled : std::runtime_error {
    explicit FetchDisabled(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace narayana
