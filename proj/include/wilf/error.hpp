#ifndef WILF_ERROR_HPP
#define WILF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wilf {

enum class errc {
    duplicate_part,
    duplicate_multiplicity,
    weight_mismatch,
    non_positive_entry,
    cap_exceeded,
    resource_cap,
    infeasible_params,
    parse_error,
    gap_error,
    coverage_error,
    domain_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::duplicate_part: return "DuplicatePart";
    case errc::duplicate_multiplicity: return "DuplicateMultiplicity";
    case errc::weight_mismatch: return "WeightMismatch";
    case errc::non_positive_entry: return "NonPositiveEntry";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::resource_cap: return "ResourceCap";
    case errc::infeasible_params: return "InfeasibleParams";
    case errc::parse_error: return "ParseError";
    case errc::gap_error: return "GapError";
    case errc::coverage_error: return "CoverageError";
    case errc::domain_error: return "DomainError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace wilf

#endif // WILF_ERROR_HPP
