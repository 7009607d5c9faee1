#pragma once
#include <stdexcept>
#include <string>

namespace cyops {

enum class errc {
    pole_in_coefficient,
    nonzero_constant_term,
    unsupported_spec,
    degenerate_elimination,
    not_self_dual,
    unknown_surface,
    identically_singular,
    non_minimal_at_locus,
    non_polynomial_result,
    series_division_pole,
    unknown_table,
    parse_error,
};

inline const char* errc_name(errc e) {
    switch (e) {
    case errc::pole_in_coefficient: return "PoleInCoefficient";
    case errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case errc::unsupported_spec: return "UnsupportedSpec";
    case errc::degenerate_elimination: return "DegenerateElimination";
    case errc::not_self_dual: return "NotSelfDual";
    case errc::unknown_surface: return "UnknownSurface";
    case errc::identically_singular: return "IdenticallySingular";
    case errc::non_minimal_at_locus: return "NonMinimalAtLocus";
    case errc::non_polynomial_result: return "NonPolynomialResult";
    case errc::series_division_pole: return "SeriesDivisionPole";
    case errc::unknown_table: return "UnknownTable";
    case errc::parse_error: return "ParseError";
    }
    return "?";
}

class error : public std::runtime_error {
public:
    error(errc k, const std::string& what)
        : std::runtime_error(std::string(errc_name(k)) + ": " + what), kind_(k) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

} // namespace cyops
