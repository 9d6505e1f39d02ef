#pragma once

#include <stdexcept>
#include <string>

namespace signet {

enum class Errc {
    index_out_of_range,
    self_loop,
    non_finite_weight,
    zero_degree_vertex,
    invalid_params,
    indefinite_mass_matrix,
    singular_pencil,
    not_converged,
    too_few_points,
    length_mismatch,
    not_orthonormal,
    odd_vertex_count,
    p_too_small_for_chernoff,
    hypothesis_violated,
    condition_violated,
    non_positive_price,
    missing_benchmark,
    zero_variance_series,
    parse_error,
    io_error,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::self_loop: return "SelfLoop";
    case Errc::non_finite_weight: return "NonFiniteWeight";
    case Errc::zero_degree_vertex: return "ZeroDegreeVertex";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::indefinite_mass_matrix: return "IndefiniteMassMatrix";
    case Errc::singular_pencil: return "SingularPencil";
    case Errc::not_converged: return "NotConverged";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::not_orthonormal: return "NotOrthonormal";
    case Errc::odd_vertex_count: return "OddN";
    case Errc::p_too_small_for_chernoff: return "PTooSmallForChernoff";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::condition_violated: return "ConditionViolated";
    case Errc::non_positive_price: return "NonPositivePrice";
    case Errc::missing_benchmark: return "MissingBenchmark";
    case Errc::zero_variance_series: return "ZeroVarianceSeries";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// exit-code policy for the CLI: 2 = bad inputs, 3 = numerical failure
inline bool is_numerical(Errc c) {
    return c == Errc::indefinite_mass_matrix || c == Errc::singular_pencil ||
           c == Errc::not_converged;
}

} // namespace signet
