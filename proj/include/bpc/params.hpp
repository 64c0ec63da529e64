#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bpc {

// Natural parameters (lambda1, lambda2, lambda3) of the bivariate
// Poisson-conditionals pmf
//
//   P(X=x, Y=y) = K * lambda1^x * lambda2^y * lambda3^(x*y) / (x! y!)
//
// with lambda1, lambda2 > 0 and 0 < lambda3 <= 1.  lambda3 = 1 is the
// independence case; lambda3 > 1 makes the pmf non-normalizable.
struct LambdaParams {
    double lambda1;
    double lambda2;
    double lambda3;

    LambdaParams(double l1, double l2, double l3) : lambda1(l1), lambda2(l2), lambda3(l3) {
        if (!(std::isfinite(l1) && l1 > 0.0))
            throw std::invalid_argument("LambdaParams: lambda1 must be finite and > 0, got " +
                                        std::to_string(l1));
        if (!(std::isfinite(l2) && l2 > 0.0))
            throw std::invalid_argument("LambdaParams: lambda2 must be finite and > 0, got " +
                                        std::to_string(l2));
        if (!(std::isfinite(l3) && l3 > 0.0 && l3 <= 1.0))
            throw std::invalid_argument("LambdaParams: lambda3 must be in (0, 1], got " +
                                        std::to_string(l3));
    }

    bool independent() const { return lambda3 == 1.0; }
};

// Log-scale parameters delta_i = log lambda_i; delta3 <= 0 mirrors lambda3 <= 1.
struct DeltaParams {
    double delta1;
    double delta2;
    double delta3;

    DeltaParams(double d1, double d2, double d3) : delta1(d1), delta2(d2), delta3(d3) {
        if (!(std::isfinite(d1) && std::isfinite(d2) && std::isfinite(d3)))
            throw std::invalid_argument("DeltaParams: coordinates must be finite");
        if (d3 > 0.0)
            throw std::invalid_argument("DeltaParams: delta3 must be <= 0, got " +
                                        std::to_string(d3));
    }
};

inline DeltaParams to_delta(const LambdaParams& p) {
    return DeltaParams(std::log(p.lambda1), std::log(p.lambda2), std::log(p.lambda3));
}

inline LambdaParams from_delta(const DeltaParams& d) {
    return LambdaParams(std::exp(d.delta1), std::exp(d.delta2), std::exp(d.delta3));
}

// Truncation policy for the infinite series behind the normalizing function.
struct SeriesControl {
    double rel_tol = 1e-13;     // relative bound on the discarded tail
    int max_terms = 10000;      // hard cap before series_error

    SeriesControl() = default;
    SeriesControl(double tol, int max_n) : rel_tol(tol), max_terms(max_n) { validate(); }

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw std::invalid_argument("SeriesControl: rel_tol must be in (0, 1)");
        if (max_terms < 10)
            throw std::invalid_argument("SeriesControl: max_terms must be >= 10");
    }
};

}  // namespace bpc
