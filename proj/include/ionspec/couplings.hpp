#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "ionspec/common.hpp"

namespace ionspec {

// Symmetric spin-spin coupling matrix in kHz, zero diagonal. The central
// object of the library: synthesized from trap parameters, probed by
// spectroscopy, and reconstructed from measured splittings.
struct CouplingMatrix {
    int n_ions = 0;
    Eigen::MatrixXd values;  // kHz

    CouplingMatrix() = default;
    explicit CouplingMatrix(int n) : n_ions(n), values(Eigen::MatrixXd::Zero(n, n)) {}
    CouplingMatrix(int n, Eigen::MatrixXd v) : n_ions(n), values(std::move(v)) { validate(); }

    double operator()(int i, int j) const { return values(i, j); }

    void set(int i, int j, double j_khz) {
        if (i == j) throw std::invalid_argument("CouplingMatrix: diagonal must stay zero");
        values(i, j) = j_khz;
        values(j, i) = j_khz;
    }

    void validate() const {
        if (values.rows() != n_ions || values.cols() != n_ions)
            throw std::invalid_argument("CouplingMatrix: shape mismatch");
        for (int i = 0; i < n_ions; ++i) {
            if (values(i, i) != 0.0)
                throw std::invalid_argument("CouplingMatrix: nonzero diagonal");
            for (int j = 0; j < i; ++j)
                if (values(i, j) != values(j, i))
                    throw std::invalid_argument("CouplingMatrix: not symmetric");
        }
    }

    bool left_right_symmetric(double tol = 1e-9) const {
        for (int i = 0; i < n_ions; ++i)
            for (int j = i + 1; j < n_ions; ++j)
                if (std::abs(values(i, j) - values(n_ions - 1 - j, n_ions - 1 - i)) > tol)
                    return false;
        return true;
    }

    // Mean of the N(N-1)/2 pair couplings, <J>.
    double mean_coupling() const {
        if (n_ions < 2) return 0.0;
        double sum = 0.0;
        for (int i = 0; i < n_ions; ++i)
            for (int j = i + 1; j < n_ions; ++j) sum += values(i, j);
        return sum / (n_ions * (n_ions - 1) / 2);
    }

    double max_abs() const { return n_ions > 0 ? values.cwiseAbs().maxCoeff() : 0.0; }
};

// J_ij = j0 / |i-j|^alpha, the profile the trap approximately realizes.
inline CouplingMatrix power_law_couplings(int n, double j0_khz, double alpha) {
    CouplingMatrix j(n);
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            j.set(i, k, j0_khz / std::pow(double(k - i), alpha));
    return j;
}

}  // namespace ionspec
